#include "cgt/bicorn.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cgt::bicorn {

using diagram::CrossingId;
using diagram::CurveId;
using diagram::Diagram;

// ---------------------------------------------------------------------------
// Construction and canonical form
// ---------------------------------------------------------------------------

Bicorn full_alpha(CurveId a, CurveId b) {
    Bicorn g;
    g.kind = Bicorn::Kind::FullAlpha;
    g.curve_a = a;
    g.curve_b = b;
    return g;
}

Bicorn full_beta(CurveId a, CurveId b) {
    Bicorn g;
    g.kind = Bicorn::Kind::FullBeta;
    g.curve_a = a;
    g.curve_b = b;
    return g;
}

Bicorn make_proper(CurveId a, CurveId b, CrossingId s, CrossingId e, int dir_a, int dir_b) {
    Bicorn g;
    g.kind = Bicorn::Kind::Proper;
    g.curve_a = a;
    g.curve_b = b;
    if (s <= e) {
        g.s = s;
        g.e = e;
        g.dir_a = dir_a;
        g.dir_b = dir_b;
    } else {
        g.s = e;
        g.e = s;
        g.dir_a = -dir_a;
        g.dir_b = -dir_b;
    }
    return g;
}

Bicorn make_wedge(CurveId a, CurveId b, CrossingId x, int smoothing) {
    Bicorn g;
    g.kind = Bicorn::Kind::Wedge;
    g.curve_a = a;
    g.curve_b = b;
    g.s = x;
    g.e = x;
    g.dir_a = +1;
    g.dir_b = smoothing;
    return g;
}

// ---------------------------------------------------------------------------
// Arc extraction
// ---------------------------------------------------------------------------

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Arc along `curve` from crossing `from` to crossing `to`, traveling in
// direction `dir` through the cyclic visit order.  full_loop walks all the
// way around (from == to).
ArcDesc walk_arc(const Diagram& d, CurveId curve, CrossingId from, CrossingId to, int dir,
                 bool full_loop) {
    ArcDesc arc;
    arc.curve = curve;
    arc.from = from;
    arc.to = to;
    arc.dir = dir;
    arc.full_loop = full_loop;
    const int m = d.curve_size(curve);
    int pos = d.position_of(curve, from);
    const int end = d.position_of(curve, to);
    int steps = 0;
    while (true) {
        int edge = dir > 0 ? d.edge_index(curve, pos) : d.edge_index(curve, mod(pos - 1, m));
        arc.edges.push_back(edge);
        pos = mod(pos + dir, m);
        ++steps;
        if (pos == end && (!full_loop || steps == m)) break;
        arc.interior.push_back(d.visit(curve, pos));
        arc.interior_mask |= 1ULL << d.visit(curve, pos);
        if (steps > m) throw std::logic_error("walk_arc failed to terminate");
    }
    return arc;
}

ArcDesc whole_curve(const Diagram& d, CurveId curve) {
    ArcDesc arc;
    arc.curve = curve;
    arc.full_curve = true;
    for (int pos = 0; pos < d.curve_size(curve); ++pos) {
        arc.interior.push_back(d.visit(curve, pos));
        arc.interior_mask |= 1ULL << d.visit(curve, pos);
        arc.edges.push_back(d.edge_index(curve, pos));
    }
    return arc;
}

ArcDesc empty_arc(CurveId curve) {
    ArcDesc arc;
    arc.curve = curve;
    return arc;
}

// Interior-passage masks per carrier curve, for the crossing-strand count.
struct CarrierMasks {
    CurveId curves[2] = {-1, -1};
    std::uint64_t masks[2] = {0, 0};
};

CarrierMasks carrier_masks(const Diagram& d, const Bicorn& g) {
    CarrierMasks cm;
    cm.curves[0] = g.curve_a;
    cm.curves[1] = g.curve_b;
    switch (g.kind) {
        case Bicorn::Kind::FullAlpha:
            cm.masks[0] = d.curve_mask(g.curve_a);
            break;
        case Bicorn::Kind::FullBeta:
            cm.masks[1] = d.curve_mask(g.curve_b);
            break;
        default:
            cm.masks[0] = alpha_arc(d, g).interior_mask;
            cm.masks[1] = beta_arc(d, g).interior_mask;
            break;
    }
    return cm;
}

int crossings_between(const CarrierMasks& x, const CarrierMasks& y) {
    int total = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (x.curves[i] != y.curves[j])
                total += std::popcount(x.masks[i] & y.masks[j]);
    return total;
}

}  // namespace

ArcDesc alpha_arc(const Diagram& d, const Bicorn& g) {
    switch (g.kind) {
        case Bicorn::Kind::FullAlpha: return whole_curve(d, g.curve_a);
        case Bicorn::Kind::FullBeta: return empty_arc(g.curve_a);
        case Bicorn::Kind::Wedge: return walk_arc(d, g.curve_a, g.s, g.e, g.dir_a, true);
        case Bicorn::Kind::Proper: return walk_arc(d, g.curve_a, g.s, g.e, g.dir_a, false);
    }
    return empty_arc(g.curve_a);
}

ArcDesc beta_arc(const Diagram& d, const Bicorn& g) {
    switch (g.kind) {
        case Bicorn::Kind::FullAlpha: return empty_arc(g.curve_b);
        case Bicorn::Kind::FullBeta: return whole_curve(d, g.curve_b);
        case Bicorn::Kind::Wedge: return walk_arc(d, g.curve_b, g.e, g.s, g.dir_b, true);
        case Bicorn::Kind::Proper: return walk_arc(d, g.curve_b, g.e, g.s, g.dir_b, false);
    }
    return empty_arc(g.curve_b);
}

std::vector<int> bicorn_edges(const Diagram& d, const Bicorn& g) {
    std::vector<int> out = alpha_arc(d, g).edges;
    auto be = beta_arc(d, g).edges;
    out.insert(out.end(), be.begin(), be.end());
    return out;
}

bool is_valid(const Diagram& d, const Bicorn& g) {
    if (g.curve_a < 0 || g.curve_b < 0 || g.curve_a == g.curve_b) return false;
    if (g.degenerate()) return true;
    std::uint64_t pair = d.pair_mask(g.curve_a, g.curve_b);
    if (g.kind == Bicorn::Kind::Wedge) {
        // Both full loops close up embeddedly only when no other shared
        // crossing is interior to both arcs, i.e. the pair crosses once.
        return (pair & (1ULL << g.s)) != 0 && std::popcount(pair) == 1;
    }
    if (g.s == g.e) return false;
    if (!(pair & (1ULL << g.s)) || !(pair & (1ULL << g.e))) return false;
    ArcDesc a = alpha_arc(d, g), b = beta_arc(d, g);
    return (a.interior_mask & b.interior_mask) == 0;
}

std::optional<Configuration> configuration(const Diagram& d, const Bicorn& g) {
    if (g.kind != Bicorn::Kind::Proper) return std::nullopt;
    return d.crossings[g.s].sign == d.crossings[g.e].sign ? Configuration::Same
                                                          : Configuration::Opposite;
}

int bicorn_crossings(const Diagram& d, const Bicorn& g1, const Bicorn& g2) {
    return crossings_between(carrier_masks(d, g1), carrier_masks(d, g2));
}

int curve_crossings(const Diagram& d, const Bicorn& g, CurveId c) {
    CarrierMasks cm = carrier_masks(d, g);
    int total = 0;
    for (int i = 0; i < 2; ++i)
        if (cm.curves[i] != c) total += std::popcount(cm.masks[i] & d.curve_mask(c));
    return total;
}

bool is_essential(const Diagram& d, const Bicorn& g) {
    if (g.kind == Bicorn::Kind::Wedge) return true;
    return diagram::is_essential_curve(d, bicorn_edges(d, g));
}

std::vector<Bicorn> enumerate_bicorns(const Diagram& d, CurveId a, CurveId b) {
    std::vector<Bicorn> out{full_alpha(a, b), full_beta(a, b)};
    std::uint64_t pair = d.pair_mask(a, b);
    std::vector<CrossingId> shared;
    for (int i = 0; i < d.crossing_count(); ++i)
        if (pair & (1ULL << i)) shared.push_back(i);
    if (shared.size() == 1) {
        out.push_back(make_wedge(a, b, shared[0], +1));
        out.push_back(make_wedge(a, b, shared[0], -1));
    }
    for (std::size_t i = 0; i < shared.size(); ++i)
        for (std::size_t j = i + 1; j < shared.size(); ++j)
            for (int da : {+1, -1})
                for (int db : {+1, -1}) {
                    Bicorn g = make_proper(a, b, shared[i], shared[j], da, db);
                    if (is_valid(d, g)) out.push_back(g);
                }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

namespace {

// Walk curve_b from just past `start_pos` in direction g; return the first
// crossing that lies in `hit_mask`, or -1 after a full loop.
CrossingId next_hit(const Diagram& d, CurveId cb, int start_pos, int g, std::uint64_t hit_mask) {
    const int m = d.curve_size(cb);
    for (int k = 1; k <= m; ++k) {
        CrossingId x = d.visit(cb, mod(start_pos + k * g, m));
        if (hit_mask & (1ULL << x)) return x;
    }
    return -1;
}

CrossingId lowest_pair_crossing(const Diagram& d, CurveId a, CurveId b,
                                const Strategy& strategy) {
    std::uint64_t pair = d.pair_mask(a, b);
    if (pair == 0)
        throw std::invalid_argument("bicorn path: the curves are disjoint, nothing to start from");
    if (strategy.start_file_id) {
        CrossingId x = d.crossing_by_file_id(*strategy.start_file_id);
        if (x < 0 || !(pair & (1ULL << x)))
            throw std::invalid_argument("strategy start crossing is not a crossing of the pair");
        return x;
    }
    CrossingId best = -1;
    for (int i = 0; i < d.crossing_count(); ++i)
        if (pair & (1ULL << i))
            if (best < 0 || d.crossings[i].file_id < d.crossings[best].file_id) best = i;
    return best;
}

// The documented default: keep the alpha side whose interior holds the
// lowest crossing file id; ties (both interiors empty) go positive.
int pick_alpha_side(const Diagram& d, CurveId a, CrossingId p, CrossingId m0,
                    Strategy::AlphaSide side) {
    if (side == Strategy::AlphaSide::Positive) return +1;
    if (side == Strategy::AlphaSide::Negative) return -1;
    ArcDesc plus = walk_arc(d, a, p, m0, +1, false);
    ArcDesc minus = walk_arc(d, a, p, m0, -1, false);
    long best_plus = -1, best_minus = -1;
    for (CrossingId x : plus.interior)
        if (best_plus < 0 || d.crossings[x].file_id < best_plus) best_plus = d.crossings[x].file_id;
    for (CrossingId x : minus.interior)
        if (best_minus < 0 || d.crossings[x].file_id < best_minus)
            best_minus = d.crossings[x].file_id;
    if (best_plus < 0 && best_minus < 0) return +1;
    if (best_plus < 0) return -1;
    if (best_minus < 0) return +1;
    return best_plus < best_minus ? +1 : -1;
}

struct PathEnds {
    CrossingId anchor;
    CrossingId moving;
    int dir_from_anchor_along_a;
};

// Recover the anchored orientation of a path step from its canonical form:
// the beta arc runs from e to s via dir_b, so with growth direction g the
// moving end is s when dir_b == g and e otherwise.
PathEnds path_ends(const Bicorn& g, int growth) {
    if (g.kind == Bicorn::Kind::Wedge) return {g.s, g.s, g.dir_a};
    if (g.dir_b == growth) return {g.e, g.s, -g.dir_a};
    return {g.s, g.e, g.dir_a};
}

}  // namespace

Bicorn initial_bicorn(const Diagram& d, CurveId a, CurveId b, const Strategy& strategy) {
    const int g = strategy.beta_direction >= 0 ? +1 : -1;
    CrossingId p = lowest_pair_crossing(d, a, b, strategy);
    std::uint64_t pair = d.pair_mask(a, b);
    CrossingId m0 = next_hit(d, b, d.position_of(b, p), g, pair);
    if (m0 == p) {
        // The pair crosses once: the minimal beta subarc is the whole loop.
        // The full alpha side gives the wedge; the empty side collapses to
        // beta itself.
        if (strategy.alpha_side == Strategy::AlphaSide::Negative) return full_beta(a, b);
        return make_wedge(a, b, p, g);
    }
    int da = pick_alpha_side(d, a, p, m0, strategy.alpha_side);
    Bicorn out = make_proper(a, b, p, m0, da, -g);
    if (!is_valid(d, out)) throw std::logic_error("initial bicorn failed validity");
    return out;
}

Bicorn extend_bicorn(const Diagram& d, const Bicorn& current, const Strategy& strategy) {
    if (current.kind == Bicorn::Kind::FullBeta)
        throw std::invalid_argument("extend_bicorn: already at beta, nothing to extend");
    if (current.kind == Bicorn::Kind::FullAlpha)
        throw std::invalid_argument("extend_bicorn: use initial_bicorn to leave alpha");
    const int g = strategy.beta_direction >= 0 ? +1 : -1;
    PathEnds ends = path_ends(current, g);
    ArcDesc a = alpha_arc(d, current);
    std::uint64_t hit_mask = a.interior_mask | (1ULL << ends.anchor);
    CrossingId f = next_hit(d, current.curve_b, d.position_of(current.curve_b, ends.moving), g,
                            hit_mask);
    if (f < 0) throw std::logic_error("extend_bicorn: no hit found");
    if (f == ends.anchor) return full_beta(current.curve_a, current.curve_b);
    Bicorn out = make_proper(current.curve_a, current.curve_b, ends.anchor, f,
                             ends.dir_from_anchor_along_a, -g);
    if (!is_valid(d, out)) throw std::logic_error("extend_bicorn produced an invalid bicorn");
    return out;
}

BicornPath bicorn_path(const Diagram& d, CurveId a, CurveId b, const Strategy& strategy) {
    BicornPath path;
    path.source = a;
    path.target = b;
    path.steps.push_back(full_alpha(a, b));
    if (d.crossing_free() || d.pair_mask(a, b) == 0) {
        path.steps.push_back(full_beta(a, b));
        return path;
    }
    Bicorn cur = initial_bicorn(d, a, b, strategy);
    int guard = d.crossing_count() + 2;
    while (cur.kind != Bicorn::Kind::FullBeta) {
        path.steps.push_back(cur);
        cur = extend_bicorn(d, cur, strategy);
        if (--guard < 0) throw std::logic_error("bicorn path failed to terminate");
    }
    path.steps.push_back(cur);
    return path;
}

PathCheck check_path_invariants(const Diagram& d, const BicornPath& path) {
    auto fail = [](std::string msg) { return PathCheck{false, std::move(msg)}; };
    if (path.steps.size() < 2) return fail("path has fewer than two steps");
    if (path.steps.front().kind != Bicorn::Kind::FullAlpha)
        return fail("path does not start at alpha");
    if (path.steps.back().kind != Bicorn::Kind::FullBeta) return fail("path does not end at beta");
    std::uint64_t pair = d.crossing_free() ? 0 : d.pair_mask(path.source, path.target);
    if (path.steps.size() > static_cast<std::size_t>(std::popcount(pair)) + 2)
        return fail("path longer than crossing number + 1 steps");
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const Bicorn& g = path.steps[i];
        if (!is_valid(d, g)) return fail("step " + std::to_string(i) + " is not a valid bicorn");
        if (!d.crossing_free() && !is_essential(d, g))
            return fail("step " + std::to_string(i) + " is not essential");
        if (i + 1 < path.steps.size()) {
            const Bicorn& h = path.steps[i + 1];
            int c = bicorn_crossings(d, g, h);
            if (c > 1)
                return fail("adjacent steps " + std::to_string(i) + "," + std::to_string(i + 1) +
                            " cross " + std::to_string(c) + " times");
            // strict growth of the beta arc
            bool grows = false;
            if (g.kind == Bicorn::Kind::FullAlpha)
                grows = h.kind != Bicorn::Kind::FullAlpha;
            else if (h.kind == Bicorn::Kind::FullBeta)
                grows = g.kind != Bicorn::Kind::FullBeta;
            else if (g.kind != Bicorn::Kind::FullBeta) {
                auto eg = beta_arc(d, g).edges;
                auto eh = beta_arc(d, h).edges;
                std::sort(eg.begin(), eg.end());
                std::sort(eh.begin(), eh.end());
                grows = eg.size() < eh.size() &&
                        std::includes(eh.begin(), eh.end(), eg.begin(), eg.end());
            }
            if (!grows)
                return fail("beta arc does not strictly grow at step " + std::to_string(i + 1));
        }
    }
    return PathCheck{};
}

// ---------------------------------------------------------------------------
// Slim witness
// ---------------------------------------------------------------------------

namespace {

struct GapCandidate {
    CrossingId from = -1, to = -1;  // hits of the host side on the third curve
    int other_hits = 0;             // other-side hits strictly inside the gap
    int width = 0;                  // interior visit count along the third curve
    int start_pos = 0;
};

// Gaps between consecutive host-side hits along the third curve, counting
// other-side hits inside each gap.
std::vector<GapCandidate> third_curve_gaps(const Diagram& d, CurveId third,
                                           std::uint64_t host_hits, std::uint64_t other_hits) {
    std::vector<int> hit_pos;
    const int m = d.curve_size(third);
    for (int pos = 0; pos < m; ++pos)
        if (host_hits & (1ULL << d.visit(third, pos))) hit_pos.push_back(pos);
    std::vector<GapCandidate> gaps;
    const int k = static_cast<int>(hit_pos.size());
    if (k < 2) return gaps;
    for (int i = 0; i < k; ++i) {
        int p0 = hit_pos[i], p1 = hit_pos[(i + 1) % k];
        GapCandidate gap;
        gap.from = d.visit(third, p0);
        gap.to = d.visit(third, p1);
        gap.start_pos = p0;
        for (int pos = mod(p0 + 1, m); pos != p1; pos = mod(pos + 1, m)) {
            ++gap.width;
            if (other_hits & (1ULL << d.visit(third, pos))) ++gap.other_hits;
        }
        gaps.push_back(gap);
    }
    return gaps;
}

// The subarc of `host` (an arc of the bicorn) between two crossings on it:
// travel from the arc's own start until the endpoints are met.
ArcDesc sub_arc_between(const Diagram& d, const ArcDesc& host, CrossingId x, CrossingId y) {
    CurveId c = host.curve;
    const int m = d.curve_size(c);
    if (host.full_curve) {
        // two choices; take the positive-direction arc from x to y
        return walk_arc(d, c, x, y, +1, false);
    }
    // order x, y along the host arc's traversal
    int px = d.position_of(c, x), py = d.position_of(c, y);
    int start = d.position_of(c, host.from);
    int ox = mod((px - start) * host.dir, m), oy = mod((py - start) * host.dir, m);
    if (ox <= oy) return walk_arc(d, c, x, y, host.dir, false);
    return walk_arc(d, c, y, x, host.dir, false);
}

std::optional<SlimWitness> try_side(const Diagram& d, const Bicorn& g, CurveId third, char side) {
    ArcDesc host = side == 'a' ? alpha_arc(d, g) : beta_arc(d, g);
    ArcDesc other = side == 'a' ? beta_arc(d, g) : alpha_arc(d, g);
    if (host.curve < 0 || host.edges.empty()) return std::nullopt;
    std::uint64_t host_hits = host.interior_mask & d.curve_mask(third);
    std::uint64_t other_hits = other.interior_mask & d.curve_mask(third);
    if (std::popcount(host_hits) < 2) return std::nullopt;
    auto gaps = third_curve_gaps(d, third, host_hits, other_hits);
    const GapCandidate* best = nullptr;
    for (const auto& gap : gaps) {
        if (gap.other_hits > 1) continue;
        if (!best || gap.width < best->width ||
            (gap.width == best->width && gap.start_pos < best->start_pos))
            best = &gap;
    }
    if (!best) return std::nullopt;

    SlimWitness w;
    w.side = side;
    w.c_arc = walk_arc(d, third, best->from, best->to, +1, false);
    ArcDesc hsub = sub_arc_between(d, host, best->from, best->to);
    w.new_bicorn = make_proper(host.curve, third, hsub.from, hsub.to, hsub.dir,
                               // the c arc runs from best->from to best->to in +1;
                               // stored from e back to s
                               hsub.from == best->from ? -1 : +1);
    if (!is_valid(d, w.new_bicorn)) return std::nullopt;
    w.crossings_with_g = bicorn_crossings(d, w.new_bicorn, g);
    return w;
}

}  // namespace

SlimResult slim_witness(const Diagram& d, const Bicorn& g, CurveId third) {
    SlimResult res;
    res.crossings_with_third = curve_crossings(d, g, third);
    if (res.crossings_with_third == 0) {
        res.status = SlimResult::Status::Disjoint;
        return res;
    }
    for (char side : {'a', 'b'}) {
        auto w = try_side(d, g, third, side);
        if (w && w->crossings_with_g <= 1) {
            res.status = SlimResult::Status::Witness;
            res.witness = std::move(w);
            return res;
        }
    }
    res.status = res.crossings_with_third >= 4 ? SlimResult::Status::NoWitness
                                               : SlimResult::Status::BelowThreshold;
    return res;
}

// ---------------------------------------------------------------------------
// Lemma-18 style evidence
// ---------------------------------------------------------------------------

Lemma18Evidence lemma18_evidence(const Diagram& d, const BicornPath& path, CurveId third) {
    Lemma18Evidence ev;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (curve_crossings(d, path.steps[i], third) < 4) {
            ev.applicable = false;
            ev.offending_step = static_cast<int>(i);
            return ev;
        }
    }
    ev.applicable = true;

    const int n = static_cast<int>(path.steps.size());
    std::vector<std::optional<SlimWitness>> wa(n), wb(n);
    for (int i = 0; i < n; ++i) {
        wa[i] = try_side(d, path.steps[i], third, 'a');
        if (wa[i] && wa[i]->crossings_with_g > 1) wa[i].reset();
        wb[i] = try_side(d, path.steps[i], third, 'b');
        if (wb[i] && wb[i]->crossings_with_g > 1) wb[i].reset();
    }

    int k = -1, k1 = -1;
    for (int i = 0; i < n && k < 0; ++i)
        if (wa[i] && wb[i]) { k = i; k1 = i; }  // same step, searched first
    if (k < 0) {
        for (int i = 0; i + 1 < n && k < 0; ++i)
            if (wa[i] && wb[i + 1]) { k = i; k1 = i + 1; }
    }
    if (k < 0) {
        ev.applicable = false;
        ev.offending_step = -1;
        return ev;
    }
    ev.k = k;
    ev.k1 = k1;
    ev.surgered_i = wa[k]->new_bicorn;
    ev.surgered_j = wb[k1]->new_bicorn;
    ev.delta_i = alpha_arc(d, ev.surgered_i);   // host-side subarc bounded by the c endpoints
    ev.delta_j = alpha_arc(d, ev.surgered_j);
    auto full_mask = [&](const ArcDesc& a) {
        std::uint64_t m = a.interior_mask;
        if (a.from >= 0) m |= 1ULL << a.from;
        if (a.to >= 0) m |= 1ULL << a.to;
        return m;
    };
    ev.deltas_disjoint = (full_mask(ev.delta_i) & full_mask(ev.delta_j)) == 0;
    return ev;
}

// ---------------------------------------------------------------------------
// Bound ledger
// ---------------------------------------------------------------------------

BoundLedger BoundLedger::derive(int hausdorff, int filling) {
    BoundLedger l;
    l.hausdorff_radius = hausdorff;
    l.filling_min = filling;
    l.threshold = hausdorff + filling;
    l.segment_cap = 2 * l.threshold;
    l.theorem_bound =
        l.lemma18_bound + l.lipschitz_step + l.segment_cap + l.lipschitz_step + l.lemma18_bound;
    return l;
}

void BoundLedger::check() const {
    if (threshold != hausdorff_radius + filling_min)
        throw std::logic_error("ledger: threshold != hausdorff_radius + filling_min");
    if (segment_cap != 2 * threshold)
        throw std::logic_error("ledger: segment_cap != 2 * threshold");
    if (theorem_bound !=
        lemma18_bound + lipschitz_step + segment_cap + lipschitz_step + lemma18_bound)
        throw std::logic_error("ledger: theorem_bound does not match its decomposition");
}

int compose_bound(const BoundLedger& ledger) {
    ledger.check();
    return ledger.lemma18_bound + ledger.lipschitz_step + ledger.segment_cap +
           ledger.lipschitz_step + ledger.lemma18_bound;
}

// ---------------------------------------------------------------------------
// Descriptions
// ---------------------------------------------------------------------------

namespace {

std::string arc_json(const Diagram& d, const ArcDesc& a) {
    std::ostringstream os;
    if (a.curve < 0 || (a.edges.empty() && !a.full_curve)) return "null";
    os << "{\"curve\": \"" << d.curve_names[a.curve] << "\"";
    if (a.full_curve) {
        os << ", \"full\": true";
    } else {
        os << ", \"start\": " << d.crossings[a.from].file_id
           << ", \"end\": " << d.crossings[a.to].file_id << ", \"orientation\": \""
           << (a.dir > 0 ? "+" : "-") << "\"";
        if (a.full_loop) os << ", \"full_loop\": true";
    }
    os << ", \"interior\": [";
    for (std::size_t i = 0; i < a.interior.size(); ++i)
        os << (i ? ", " : "") << d.crossings[a.interior[i]].file_id;
    os << "]}";
    return os.str();
}

}  // namespace

std::string describe(const Diagram& d, const ArcDesc& a) { return arc_json(d, a); }

std::string describe(const Diagram& d, const Bicorn& g) {
    std::ostringstream os;
    const char* kind = nullptr;
    switch (g.kind) {
        case Bicorn::Kind::FullAlpha: kind = "alpha"; break;
        case Bicorn::Kind::FullBeta: kind = "beta"; break;
        case Bicorn::Kind::Proper: kind = "proper"; break;
        case Bicorn::Kind::Wedge: kind = "wedge"; break;
    }
    os << "{\"kind\": \"" << kind << "\", \"alpha_arc\": " << arc_json(d, alpha_arc(d, g))
       << ", \"beta_arc\": " << arc_json(d, beta_arc(d, g));
    auto cfg = configuration(d, g);
    if (cfg)
        os << ", \"configuration\": \""
           << (*cfg == Configuration::Same ? "same" : "opposite") << "\"";
    os << "}";
    return os.str();
}

}  // namespace cgt::bicorn
