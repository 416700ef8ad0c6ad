#include "cgt/projection.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cgt::projection {

using diagram::CrossingId;
using diagram::CurveId;
using diagram::Diagram;
using diagram::RegionSet;

// ---------------------------------------------------------------------------
// Subsurface construction
// ---------------------------------------------------------------------------

namespace {

std::vector<char> boundary_edge_set(const Diagram& d, const std::vector<CurveId>& boundary) {
    std::vector<char> out(d.edges().size(), 0);
    for (std::size_t e = 0; e < d.edges().size(); ++e)
        for (CurveId b : boundary)
            if (d.edges()[e].curve == b) out[e] = 1;
    return out;
}

}  // namespace

int complement_side_count(const Diagram& d, const std::vector<CurveId>& boundary) {
    std::vector<bool> be(d.edges().size(), false);
    for (std::size_t e = 0; e < d.edges().size(); ++e)
        for (CurveId b : boundary)
            if (d.edges()[e].curve == b) be[e] = true;
    return static_cast<int>(split_along(d, be).regions.size());
}

SubsurfaceSpec make_subsurface(const Diagram& d, std::vector<CurveId> boundary, int side) {
    if (boundary.empty()) throw std::invalid_argument("subsurface: empty boundary multicurve");
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (boundary[i] < 0 || boundary[i] >= d.curve_count())
            throw std::invalid_argument("subsurface: unknown boundary curve");
        if (!diagram::is_essential_curve(d, boundary[i]))
            throw std::invalid_argument("subsurface: boundary curve " +
                                        d.curve_names[boundary[i]] + " is not essential");
        for (std::size_t j = i + 1; j < boundary.size(); ++j)
            if (d.pair_mask(boundary[i], boundary[j]) != 0)
                throw std::invalid_argument("subsurface: boundary curves intersect");
    }

    SubsurfaceSpec y;
    y.host = &d;
    y.boundary = std::move(boundary);
    y.side = side;
    auto be = boundary_edge_set(d, y.boundary);
    std::vector<bool> be_bool(be.begin(), be.end());
    y.decomposition = split_along(d, be_bool);
    if (side < 0 || side >= static_cast<int>(y.decomposition.regions.size()))
        throw std::invalid_argument("subsurface: side index out of range (complement has " +
                                    std::to_string(y.decomposition.regions.size()) + " sides)");
    y.edge_boundary = be;
    y.face_in_y.assign(d.faces().size(), 0);
    for (int f : y.decomposition.regions[side].faces) y.face_in_y[f] = 1;
    y.edge_in_y.assign(d.edges().size(), 0);
    for (std::size_t e = 0; e < d.edges().size(); ++e) {
        if (be[e]) continue;
        int face = d.face_of_dart(d.edges()[e].dart_out);
        if (y.face_in_y[face]) y.edge_in_y[e] = 1;
    }
    const auto& region = y.decomposition.regions[side];
    y.chi = region.chi;
    y.boundary_components = static_cast<int>(region.walks.size());
    // chi = 2 - 2g - b for a compact orientable surface with boundary
    y.genus = (2 - y.chi - y.boundary_components) / 2;
    y.xi = 3 * y.genus + y.boundary_components - 3;
    return y;
}

// ---------------------------------------------------------------------------
// Cutting Y along a system of arcs
// ---------------------------------------------------------------------------

namespace {

struct Cut {
    RegionSet rs;
    std::vector<char> graph_edge;   // arc edges (boundary-curve edges excluded)
    std::vector<int> y_pieces;      // region ids inside Y
};

Cut cut_y_along(const SubsurfaceSpec& y, const std::vector<int>& graph_edges) {
    const Diagram& d = *y.host;
    Cut cut;
    cut.graph_edge.assign(d.edges().size(), 0);
    std::vector<bool> wall(d.edges().size(), false);
    for (std::size_t e = 0; e < d.edges().size(); ++e) wall[e] = y.edge_boundary[e];
    for (int e : graph_edges) {
        wall[e] = true;
        cut.graph_edge[e] = 1;
    }
    cut.rs = split_along(d, wall);
    std::vector<char> seen(cut.rs.regions.size(), 0);
    for (std::size_t f = 0; f < d.faces().size(); ++f) {
        if (!y.face_in_y[f]) continue;
        int r = cut.rs.region_of_face[f];
        if (!seen[r]) {
            seen[r] = 1;
            cut.y_pieces.push_back(r);
        }
    }
    std::sort(cut.y_pieces.begin(), cut.y_pieces.end());
    return cut;
}

bool walk_has_graph(const Diagram& d, const Cut& cut, const RegionSet::Walk& w) {
    for (diagram::Dart dart : w.wall)
        if (cut.graph_edge[d.edge_of_dart(dart)]) return true;
    return false;
}

// Essentiality of an inner neighborhood-boundary curve, read off the piece
// of Y-cut-along-the-graph that it faces.
bool inner_wall_essential(const SubsurfaceSpec& y, const Cut& cut, int piece, int walk,
                          std::string* klass) {
    const Diagram& d = *y.host;
    const auto& region = cut.rs.regions[piece];
    int graph_walks = 0, pure_walks = 0;
    for (const auto& w : region.walks)
        (walk_has_graph(d, cut, w) ? graph_walks : pure_walks) += 1;
    if (graph_walks >= 2) {
        // the piece reattaches to the rest of Y through another graph wall,
        // so the curve is nonseparating in Y
        if (klass) *klass = "essential";
        return true;
    }
    (void)walk;
    if (region.chi == 1) {
        if (klass) *klass = "disk";
        return false;
    }
    if (region.chi == 0 && region.walks.size() == 2 && pure_walks == 1) {
        if (klass) *klass = "boundary_parallel";
        return false;
    }
    int chi_other = y.chi - region.chi;
    int comps_other = y.boundary_components - pure_walks;
    if (chi_other == 0 && comps_other == 1) {
        if (klass) *klass = "boundary_parallel";
        return false;
    }
    if (klass) *klass = "essential";
    return true;
}

std::vector<int> whole_curve_edges(const Diagram& d, CurveId c) {
    std::vector<int> out;
    for (std::size_t e = 0; e < d.edges().size(); ++e)
        if (d.edges()[e].curve == c) out.push_back(static_cast<int>(e));
    return out;
}

std::uint64_t arc_crossing_set(const ProjectedArc& a) {
    std::uint64_t m = 0;
    if (a.from >= 0) m |= 1ULL << a.from;
    if (a.to >= 0) m |= 1ULL << a.to;
    for (CrossingId x : a.interior) m |= 1ULL << x;
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// pi_A
// ---------------------------------------------------------------------------

bool arc_essential_in_y(const SubsurfaceSpec& y, const ProjectedArc& arc) {
    if (arc.whole_curve) return true;
    Cut cut = cut_y_along(y, arc.edges);
    for (int r : cut.y_pieces)
        if (cut.rs.regions[r].chi == 1) return false;
    return true;
}

bool arcs_parallel_in_y(const SubsurfaceSpec& y, const ProjectedArc& a,
                        const ProjectedArc& b) {
    if (a.whole_curve || b.whole_curve) return false;
    const Diagram& d = *y.host;
    std::vector<int> both = a.edges;
    both.insert(both.end(), b.edges.begin(), b.edges.end());
    Cut cut = cut_y_along(y, both);
    std::vector<char> in_a(d.edges().size(), 0), in_b(d.edges().size(), 0);
    for (int e : a.edges) in_a[e] = 1;
    for (int e : b.edges) in_b[e] = 1;
    for (int r : cut.y_pieces) {
        const auto& region = cut.rs.regions[r];
        if (region.chi != 1 || region.walks.size() != 1) continue;
        // count maximal cyclic runs on each arc
        const auto& wall = region.walks[0].wall;
        int runs_a = 0, runs_b = 0;
        bool has_a = false, has_b = false;
        const int n = static_cast<int>(wall.size());
        for (int i = 0; i < n; ++i) {
            int e = d.edge_of_dart(wall[i]);
            int ep = d.edge_of_dart(wall[(i + n - 1) % n]);
            if (in_a[e]) has_a = true;
            if (in_b[e]) has_b = true;
            if (in_a[e] && !in_a[ep]) ++runs_a;
            if (in_b[e] && !in_b[ep]) ++runs_b;
        }
        if (has_a && has_b && runs_a == 1 && runs_b == 1) return true;
    }
    return false;
}

PiAResult pi_A(const SubsurfaceSpec& y, CurveId c) {
    const Diagram& d = *y.host;
    if (y.xi < 1)
        throw std::invalid_argument("pi_A: subsurface has complexity " + std::to_string(y.xi) +
                                    " < 1");
    for (CurveId b : y.boundary) {
        if (b == c) throw std::invalid_argument("pi_A: curve is part of the boundary");
        if (!diagram::detect_bigons(d, c, b).empty())
            throw std::invalid_argument("pi_A: curve " + d.curve_names[c] +
                                        " is not in minimal position with boundary curve " +
                                        d.curve_names[b]);
    }

    PiAResult res;
    std::vector<char> is_boundary_curve(d.curve_count(), 0);
    for (CurveId b : y.boundary) is_boundary_curve[b] = 1;

    // cut positions: visits of c at crossings with boundary curves
    std::vector<int> cuts;
    const int m = d.curve_size(c);
    for (int pos = 0; pos < m; ++pos) {
        const auto& cr = d.crossings[d.visit(c, pos)];
        CurveId other = cr.x_curve == c ? cr.y_curve : cr.x_curve;
        if (is_boundary_curve[other]) cuts.push_back(pos);
    }

    auto edge_in_y = [&](int e) { return y.edge_in_y[e] != 0; };

    if (cuts.empty()) {
        int e0 = d.edge_index(c, 0);
        if (edge_in_y(e0)) {
            res.kind = PiAResult::Kind::WholeCurve;
            ProjectedArc whole;
            whole.curve = c;
            whole.whole_curve = true;
            whole.edges = whole_curve_edges(d, c);
            res.arcs.push_back(std::move(whole));
        } else {
            res.kind = PiAResult::Kind::Empty;  // c misses Y
        }
        return res;
    }

    std::vector<ProjectedArc> segments;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        int p0 = cuts[k];
        int p1 = cuts[(k + 1) % cuts.size()];
        ProjectedArc arc;
        arc.curve = c;
        arc.start_pos = p0;
        arc.from = d.visit(c, p0);
        arc.to = d.visit(c, p1);
        auto other_of = [&](CrossingId x) {
            const auto& cr = d.crossings[x];
            return cr.x_curve == c ? cr.y_curve : cr.x_curve;
        };
        arc.from_boundary = other_of(arc.from);
        arc.to_boundary = other_of(arc.to);
        bool in_y = true, first = true;
        for (int pos = p0; ; pos = (pos + 1) % m) {
            int e = d.edge_index(c, pos);
            if (first) in_y = edge_in_y(e);
            else if (edge_in_y(e) != in_y)
                throw std::logic_error("pi_A: segment straddles the boundary");
            first = false;
            arc.edges.push_back(e);
            int nxt = (pos + 1) % m;
            if (nxt == p1) break;
            arc.interior.push_back(d.visit(c, nxt));
        }
        ++res.total_segments;
        if (in_y) segments.push_back(std::move(arc));
    }

    if (segments.empty()) {
        res.kind = PiAResult::Kind::Empty;
        return res;
    }
    res.kind = PiAResult::Kind::Arcs;

    // discard inessential arcs
    std::vector<ProjectedArc> essential;
    for (auto& a : segments) {
        if (arc_essential_in_y(y, a))
            essential.push_back(std::move(a));
        else
            ++res.discarded_inessential;
    }

    // one representative per parallelism class
    std::vector<int> klass(essential.size());
    std::iota(klass.begin(), klass.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (klass[v] != v) v = klass[v] = klass[klass[v]];
        return v;
    };
    for (std::size_t i = 0; i < essential.size(); ++i)
        for (std::size_t j = i + 1; j < essential.size(); ++j)
            if (find(static_cast<int>(i)) != find(static_cast<int>(j)) &&
                arcs_parallel_in_y(y, essential[i], essential[j]))
                klass[find(static_cast<int>(i))] = find(static_cast<int>(j));
    for (std::size_t i = 0; i < essential.size(); ++i) {
        if (find(static_cast<int>(i)) == static_cast<int>(i))
            res.arcs.push_back(essential[i]);
        else
            ++res.merged_parallel;
    }
    return res;
}

// ---------------------------------------------------------------------------
// pi_0
// ---------------------------------------------------------------------------

namespace {

Pi0Curve curve_from_walk(const Diagram& d, const Cut& cut, int piece, int walk_idx) {
    Pi0Curve pc;
    pc.piece = piece;
    const auto& w = cut.rs.regions[piece].walks[walk_idx];
    pc.runs = walk_runs(d, w);
    for (diagram::Dart dart : w.wall) {
        int e = d.edge_of_dart(dart);
        pc.carrier_edges.push_back(e);
        pc.carrier_crossings |= 1ULL << d.edges()[e].from;
        pc.carrier_crossings |= 1ULL << d.edges()[e].to;
    }
    std::sort(pc.carrier_edges.begin(), pc.carrier_edges.end());
    pc.carrier_edges.erase(std::unique(pc.carrier_edges.begin(), pc.carrier_edges.end()),
                           pc.carrier_edges.end());
    return pc;
}

Pi0Result pi0_impl(const SubsurfaceSpec& y, const std::vector<int>& graph_edges) {
    const Diagram& d = *y.host;
    Cut cut = cut_y_along(y, graph_edges);
    Pi0Result res;
    for (int piece : cut.y_pieces) {
        const auto& region = cut.rs.regions[piece];
        int essential_here = 0, graph_walls_here = 0;
        for (std::size_t wi = 0; wi < region.walks.size(); ++wi) {
            if (!walk_has_graph(d, cut, region.walks[wi])) continue;
            ++graph_walls_here;
            Pi0Curve pc = curve_from_walk(d, cut, piece, static_cast<int>(wi));
            pc.essential = inner_wall_essential(y, cut, piece, static_cast<int>(wi), &pc.klass);
            if (pc.essential) {
                ++res.essential_count;
                ++essential_here;
            }
            res.curves.push_back(std::move(pc));
        }
        // Two essential walls of one annulus piece are parallel copies of a
        // single curve: count the isotopy class once.
        if (graph_walls_here == 2 && essential_here == 2 && region.chi == 0 &&
            region.walks.size() == 2) {
            res.parallel_walls = true;
            --res.essential_count;
        }
    }
    return res;
}

}  // namespace

Pi0Result pi_0(const SubsurfaceSpec& y, const ProjectedArc& arc) {
    const Diagram& d = *y.host;
    if (arc.whole_curve) {
        // the closure of a full curve in Y is the curve itself
        Pi0Result res;
        Pi0Curve pc;
        pc.essential = true;
        pc.klass = "essential";
        pc.carrier_edges = arc.edges;
        for (int e : pc.carrier_edges) {
            pc.carrier_crossings |= 1ULL << d.edges()[e].from;
            pc.carrier_crossings |= 1ULL << d.edges()[e].to;
        }
        diagram::SideRun run;
        run.curve = arc.curve;
        run.edges = arc.edges;
        pc.runs.push_back(std::move(run));
        res.curves.push_back(std::move(pc));
        res.essential_count = 1;
        return res;
    }
    Pi0Result res = pi0_impl(y, arc.edges);
    if (res.curves.empty() || res.curves.size() > 2)
        throw std::logic_error("pi_0: expected one or two neighborhood boundary curves, got " +
                               std::to_string(res.curves.size()));
    if (res.essential_count == 0)
        throw std::logic_error("pi_0: every neighborhood boundary curve tests inessential; the "
                               "input arc was not essential");
    return res;
}

// ---------------------------------------------------------------------------
// Lipschitz witnesses
// ---------------------------------------------------------------------------

ArcLipschitzReport check_arc_lipschitz(const SubsurfaceSpec& y, CurveId c1, CurveId c2) {
    const Diagram& d = *y.host;
    ArcLipschitzReport rep;
    if (c1 == c2) {
        rep.reason = "the two curves coincide";
        return rep;
    }
    if (d.pair_mask(c1, c2) != 0) {
        rep.reason = "curves " + d.curve_names[c1] + " and " + d.curve_names[c2] +
                     " are not disjoint";
        return rep;
    }
    PiAResult p1 = pi_A(y, c1);
    if (p1.kind == PiAResult::Kind::Empty) {
        rep.reason = "curve " + d.curve_names[c1] + " misses the subsurface";
        return rep;
    }
    PiAResult p2 = pi_A(y, c2);
    if (p2.kind == PiAResult::Kind::Empty) {
        rep.reason = "curve " + d.curve_names[c2] + " misses the subsurface";
        return rep;
    }
    rep.hypothesis_ok = true;
    // arcs of disjoint curves share no crossing and no edge: any pair works
    rep.witness1 = p1.arcs.front();
    rep.witness2 = p2.arcs.front();
    std::uint64_t s1 = arc_crossing_set(rep.witness1);
    std::uint64_t s2 = arc_crossing_set(rep.witness2);
    rep.witness_found = (s1 & s2) == 0;
    return rep;
}

Pi0LipschitzReport check_pi0_lipschitz(const SubsurfaceSpec& y, const ProjectedArc& a1,
                                       const ProjectedArc& a2) {
    const Diagram& d = *y.host;
    Pi0LipschitzReport rep;

    auto render = [&](const Pi0Curve& pc) {
        std::ostringstream os;
        os << "{\"class\": \"" << pc.klass << "\", \"runs\": [";
        for (std::size_t i = 0; i < pc.runs.size(); ++i) {
            os << (i ? ", " : "") << "{\"curve\": \"" << d.curve_names[pc.runs[i].curve]
               << "\", \"edges\": " << pc.runs[i].edges.size() << "}";
        }
        os << "]}";
        return os.str();
    };

    bool identical = a1.curve == a2.curve && a1.whole_curve == a2.whole_curve &&
                     a1.edges == a2.edges;
    if (identical) {
        rep.hypothesis_ok = true;
        rep.ok = true;
        rep.chain_length = 0;
        rep.method = "identical";
        rep.chain.push_back(render(pi_0(y, a1).curves.front()));
        return rep;
    }

    // hypothesis: the arcs are disjoint
    std::uint64_t s1 = arc_crossing_set(a1), s2 = arc_crossing_set(a2);
    std::vector<int> e1s = a1.edges, e2s = a2.edges, shared_edges;
    std::sort(e1s.begin(), e1s.end());
    std::sort(e2s.begin(), e2s.end());
    std::set_intersection(e1s.begin(), e1s.end(), e2s.begin(), e2s.end(),
                          std::back_inserter(shared_edges));
    if ((s1 & s2) != 0 || !shared_edges.empty()) {
        rep.reason = "arcs intersect";
        return rep;
    }
    rep.hypothesis_ok = true;

    Pi0Result q1 = pi_0(y, a1);
    Pi0Result q2 = pi_0(y, a2);
    auto first_essential = [](const Pi0Result& q) -> const Pi0Curve& {
        for (const auto& c : q.curves)
            if (c.essential) return c;
        throw std::logic_error("pi_0 result without an essential curve");
    };
    const Pi0Curve& x = first_essential(q1);
    const Pi0Curve& z = first_essential(q2);

    if (arcs_parallel_in_y(y, a1, a2)) {
        rep.ok = true;
        rep.chain_length = 1;
        rep.method = "parallel";
        rep.chain = {render(x), render(z)};
        return rep;
    }

    // middle curve: essential boundary of a neighborhood of a1 ∪ a2 ∪ ∂Y;
    // it is disjoint from both pi_0 curves because the small neighborhoods
    // nest inside the big one
    std::vector<int> both = a1.edges;
    both.insert(both.end(), a2.edges.begin(), a2.edges.end());
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    Pi0Result mid = pi0_impl(y, both);
    for (const auto& mc : mid.curves) {
        if (!mc.essential) continue;
        rep.ok = true;
        rep.chain_length = 2;
        rep.method = "middle-curve";
        rep.chain = {render(x), render(mc), render(z)};
        return rep;
    }

    // the union fills Y: fall back to carriers that cannot meet
    std::vector<int> shared_carrier;
    std::set_intersection(x.carrier_edges.begin(), x.carrier_edges.end(),
                          z.carrier_edges.begin(), z.carrier_edges.end(),
                          std::back_inserter(shared_carrier));
    if (shared_carrier.empty() && (x.carrier_crossings & z.carrier_crossings) == 0) {
        rep.ok = true;
        rep.chain_length = 1;
        rep.method = "carrier-disjoint";
        rep.chain = {render(x), render(z)};
        return rep;
    }

    // Complexity-1 subsurface: edges of its curve graph are the Farey kind
    // (intersection one on the one-holed torus, two on the four-holed
    // sphere).  Verified disjoint, non-parallel essential arcs there have
    // Farey-adjacent closures, so the pair is itself a one-edge chain.
    bool xi_one = (y.genus == 1 && y.boundary_components == 1) ||
                  (y.genus == 0 && y.boundary_components == 4);
    if (y.xi == 1 && xi_one) {
        rep.ok = true;
        rep.chain_length = 1;
        rep.method = "farey-edge";
        rep.chain = {render(x), render(z)};
        return rep;
    }

    rep.ok = false;
    rep.method = "unresolved";
    rep.chain = {render(x), render(z)};
    return rep;
}

std::string describe(const SubsurfaceSpec& y, const ProjectedArc& arc) {
    const Diagram& d = *y.host;
    std::ostringstream os;
    if (arc.whole_curve) {
        os << "{\"curve\": \"" << d.curve_names[arc.curve] << "\", \"whole_curve\": true}";
        return os.str();
    }
    os << "{\"curve\": \"" << d.curve_names[arc.curve] << "\", \"from\": {\"crossing\": "
       << d.crossings[arc.from].file_id << ", \"boundary\": \""
       << d.curve_names[arc.from_boundary] << "\"}, \"to\": {\"crossing\": "
       << d.crossings[arc.to].file_id << ", \"boundary\": \"" << d.curve_names[arc.to_boundary]
       << "\"}, \"interior\": [";
    for (std::size_t i = 0; i < arc.interior.size(); ++i)
        os << (i ? ", " : "") << d.crossings[arc.interior[i]].file_id;
    os << "]}";
    return os.str();
}

}  // namespace cgt::projection
