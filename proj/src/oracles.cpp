#include "cgt/oracles.hpp"

#include <algorithm>

namespace cgt::oracles {

using bicorn::Bicorn;
using diagram::CrossingId;
using diagram::CurveId;
using diagram::Diagram;

std::vector<Bicorn> brute_force_bicorns(const Diagram& d, CurveId a, CurveId b) {
    std::vector<Bicorn> out{bicorn::full_alpha(a, b), bicorn::full_beta(a, b)};
    std::vector<CrossingId> shared;
    for (CrossingId x = 0; x < d.crossing_count(); ++x) {
        const auto& cr = d.crossings[x];
        if ((cr.x_curve == a && cr.y_curve == b) || (cr.x_curve == b && cr.y_curve == a))
            shared.push_back(x);
    }
    auto walk_between = [&](CurveId c, CrossingId from, CrossingId to, int dir) {
        std::vector<CrossingId> interior;
        int m = d.curve_size(c);
        int pos = d.position_of(c, from);
        while (true) {
            pos = ((pos + dir) % m + m) % m;
            if (d.visit(c, pos) == to) break;
            interior.push_back(d.visit(c, pos));
        }
        return interior;
    };
    if (shared.size() == 1) {
        out.push_back(bicorn::make_wedge(a, b, shared[0], +1));
        out.push_back(bicorn::make_wedge(a, b, shared[0], -1));
    }
    for (CrossingId s : shared)
        for (CrossingId e : shared) {
            if (s >= e) continue;
            for (int da : {+1, -1})
                for (int db : {+1, -1}) {
                    auto ia = walk_between(a, s, e, da);
                    auto ib = walk_between(b, e, s, db);
                    bool disjoint = true;
                    for (CrossingId x : ia)
                        for (CrossingId y : ib)
                            if (x == y) disjoint = false;
                    if (disjoint) out.push_back(bicorn::make_proper(a, b, s, e, da, db));
                }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> degree_two_face_scan(const Diagram& d, CurveId c1, CurveId c2) {
    std::vector<int> hits;
    for (std::size_t f = 0; f < d.faces().size(); ++f) {
        const auto& face = d.faces()[f];
        if (face.degree() != 2) continue;
        CurveId a = d.edges()[d.edge_of_dart(face.darts[0])].curve;
        CurveId b = d.edges()[d.edge_of_dart(face.darts[1])].curve;
        if ((a == c1 && b == c2) || (a == c2 && b == c1)) hits.push_back(static_cast<int>(f));
    }
    return hits;
}

namespace {

void dfs(const std::vector<farey::Slope>& box, const farey::Slope& cur, const farey::Slope& to,
         int budget, std::vector<farey::Slope>& path,
         std::vector<std::vector<farey::Slope>>& out) {
    if (cur == to) {
        out.push_back(path);
        return;
    }
    if (budget == 0) return;
    for (const auto& n : box) {
        if (!farey::adjacent(cur, n)) continue;
        if (std::find(path.begin(), path.end(), n) != path.end()) continue;
        path.push_back(n);
        dfs(box, n, to, budget - 1, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<farey::Slope>> simple_paths(const farey::Slope& from,
                                                    const farey::Slope& to, int edges,
                                                    std::int64_t box_width) {
    std::vector<farey::Slope> box = farey::slope_universe(box_width);
    std::vector<farey::Slope> path{from};
    std::vector<std::vector<farey::Slope>> out;
    dfs(box, from, to, edges, path, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cgt::oracles
