#pragma once

#include "cgt/diagram.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cgt::bicorn {

// A bicorn between two curves of a diagram: the union of one subarc of each,
// meeting only at their endpoint crossings.  The two carrier curves
// themselves are the degenerate members.  With exactly one shared crossing
// the two full-loop arcs also close up into an embedded curve (two corner
// smoothings); those are the wedge bicorns.
//
// Representation: the alpha arc runs from s to e in direction dir_a along
// curve_a's cyclic visit order; the beta arc runs from e back to s in
// direction dir_b along curve_b.  Canonical form: s < e for proper bicorns,
// and dir_a = +1 for wedges (s == e); (s,e,da,db) and (e,s,-da,-db) describe
// the same curve.
struct Bicorn {
    enum class Kind { FullAlpha, FullBeta, Proper, Wedge };

    Kind kind = Kind::FullAlpha;
    diagram::CurveId curve_a = -1;
    diagram::CurveId curve_b = -1;
    diagram::CrossingId s = -1;
    diagram::CrossingId e = -1;
    int dir_a = +1;
    int dir_b = +1;

    friend auto operator<=>(const Bicorn&, const Bicorn&) = default;

    bool degenerate() const { return kind == Kind::FullAlpha || kind == Kind::FullBeta; }
};

Bicorn full_alpha(diagram::CurveId a, diagram::CurveId b);
Bicorn full_beta(diagram::CurveId a, diagram::CurveId b);
// Canonicalizing constructors; they do not check the interior-disjointness
// invariant (see is_valid).
Bicorn make_proper(diagram::CurveId a, diagram::CurveId b, diagram::CrossingId s,
                   diagram::CrossingId e, int dir_a, int dir_b);
Bicorn make_wedge(diagram::CurveId a, diagram::CurveId b, diagram::CrossingId x, int smoothing);

// One subarc in diagram terms: carrier curve, endpoint crossings, direction.
struct ArcDesc {
    diagram::CurveId curve = -1;
    diagram::CrossingId from = -1;
    diagram::CrossingId to = -1;
    int dir = +1;
    bool full_curve = false;   // whole closed curve (degenerate bicorn side)
    bool full_loop = false;    // whole curve cut at one point (wedge side)
    std::vector<diagram::CrossingId> interior;  // crossings strictly inside
    std::vector<int> edges;                     // diagram edge indices
    std::uint64_t interior_mask = 0;
};

ArcDesc alpha_arc(const diagram::Diagram& d, const Bicorn& g);
ArcDesc beta_arc(const diagram::Diagram& d, const Bicorn& g);  // empty for FullAlpha etc.

// All edges of the bicorn as a closed curve.
std::vector<int> bicorn_edges(const diagram::Diagram& d, const Bicorn& g);

// The two subarcs share exactly their endpoints: no crossing is interior to
// both.  Degenerate bicorns are always valid; wedges require the carriers to
// cross exactly once.
bool is_valid(const diagram::Diagram& d, const Bicorn& g);

// Endpoint-sign classification of a proper bicorn (two crossing signs equal
// or opposite).
enum class Configuration { Same, Opposite };
std::optional<Configuration> configuration(const diagram::Diagram& d, const Bicorn& g);

// Transversal crossings of two bicorn curves in their inherited position:
// diagram crossings where the two pass on crossing strands (one interior to
// an arc on curve X, the other interior to an arc on curve Y != X).  Turns
// at endpoint crossings contribute nothing.
int bicorn_crossings(const diagram::Diagram& d, const Bicorn& g1, const Bicorn& g2);

// Crossings of a bicorn with a full curve of the diagram.
int curve_crossings(const diagram::Diagram& d, const Bicorn& g, diagram::CurveId c);

// Essentiality in the closed surface (no complementary disk).  Wedges are
// essential outright: a wedge meets its alpha carrier with algebraic
// intersection number +-1, so it is not null-homotopic.
bool is_essential(const diagram::Diagram& d, const Bicorn& g);

// Every bicorn between curve a and curve b: the two degenerate ones, all
// valid proper subarc pairs, and the wedges when the pair crosses once.
std::vector<Bicorn> enumerate_bicorns(const diagram::Diagram& d, diagram::CurveId a,
                                      diagram::CurveId b);

// ---------------------------------------------------------------------------
// Bicorn paths
// ---------------------------------------------------------------------------

struct Strategy {
    std::optional<long> start_file_id;  // default: the lowest pair-crossing file id
    int beta_direction = +1;
    enum class AlphaSide { Auto, Positive, Negative } alpha_side = AlphaSide::Auto;
};

struct BicornPath {
    diagram::CurveId source = -1;
    diagram::CurveId target = -1;
    std::vector<Bicorn> steps;  // steps.front() = alpha, steps.back() = beta
};

// The first bicorn: a minimal beta-subarc meeting alpha only at its
// endpoints, joined to the alpha side picked by the strategy.  Throws if the
// curves are disjoint.  With the Negative side on a once-crossing pair the
// construction collapses to beta itself.
Bicorn initial_bicorn(const diagram::Diagram& d, diagram::CurveId a, diagram::CurveId b,
                      const Strategy& strategy = {});

// One extension step: grow the beta arc along beta, in the path's fixed
// direction, to the next crossing with the current alpha arc; cut the alpha
// arc there.  Returns beta when the extension wraps back to the anchor.
// Throws when current is already beta.
Bicorn extend_bicorn(const diagram::Diagram& d, const Bicorn& current,
                     const Strategy& strategy = {});

BicornPath bicorn_path(const diagram::Diagram& d, diagram::CurveId a, diagram::CurveId b,
                       const Strategy& strategy = {});

// Path invariants: endpoints, strict beta-arc growth, adjacent-step crossing
// bound, essentiality of every step.
struct PathCheck {
    bool ok = true;
    std::string what;
};
PathCheck check_path_invariants(const diagram::Diagram& d, const BicornPath& path);

// ---------------------------------------------------------------------------
// Slim-triangle witness surgery
// ---------------------------------------------------------------------------

struct SlimWitness {
    char side = 'a';        // which side of g hosts the surgery arc's endpoints
    ArcDesc c_arc;          // minimal third-curve arc meeting that side only at its endpoints
    Bicorn new_bicorn;      // bicorn between the side's carrier and the third curve
    int crossings_with_g = 0;  // always <= 1
};

struct SlimResult {
    enum class Status { Witness, Disjoint, BelowThreshold, NoWitness };
    Status status = Status::NoWitness;
    int crossings_with_third = 0;
    std::optional<SlimWitness> witness;
};

// For a bicorn g between (a, b) inside a triple diagram: find a minimal arc
// c of the third curve meeting one side of g only at its two endpoints and
// crossing the other side at most once, and assemble the surgered bicorn.
// When g misses the third curve the disjointness itself realizes 1-slimness
// and is reported as such.
SlimResult slim_witness(const diagram::Diagram& d, const Bicorn& g, diagram::CurveId third);

// ---------------------------------------------------------------------------
// Disjoint-subarc evidence for the threshold lemma
// ---------------------------------------------------------------------------

struct Lemma18Evidence {
    bool applicable = false;
    int offending_step = -1;      // when not applicable: step crossing the third < 4 times
    int k = -1;                   // indices into the path (k1 == k allowed)
    int k1 = -1;
    Bicorn surgered_i, surgered_j;
    ArcDesc delta_i, delta_j;     // disjoint subarcs bounded by surgery-arc endpoints
    bool deltas_disjoint = false;
};

Lemma18Evidence lemma18_evidence(const diagram::Diagram& d, const BicornPath& path,
                                 diagram::CurveId third);

// ---------------------------------------------------------------------------
// The bound ledger
// ---------------------------------------------------------------------------

struct BoundLedger {
    int hausdorff_radius = 14;
    int filling_min = 4;
    int threshold = 18;      // hausdorff_radius + filling_min
    int segment_cap = 36;    // 2 * threshold
    int lemma18_bound = 3;
    int lipschitz_step = 1;
    int theorem_bound = 44;  // lemma18 + lipschitz + cap + lipschitz + lemma18
    int forcing_gap = 5;

    static BoundLedger derive(int hausdorff, int filling);
    void check() const;  // throws std::logic_error on inconsistent arithmetic
};

int compose_bound(const BoundLedger& ledger);

// JSON-ish description helpers for the CLI.
std::string describe(const diagram::Diagram& d, const Bicorn& g);
std::string describe(const diagram::Diagram& d, const ArcDesc& a);

}  // namespace cgt::bicorn
