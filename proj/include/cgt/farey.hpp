#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cgt::farey {

// A vertex of the Farey graph: a reduced rational p/q, or infinity stored
// canonically as 1/0.  Canonical form: gcd(|p|, q) = 1 and q >= 1, except
// infinity which is exactly (1, 0).  Equality on canonical slopes is plain
// field equality.
struct Slope {
    std::int64_t p = 1;
    std::int64_t q = 0;

    static Slope make(std::int64_t p, std::int64_t q);  // canonicalizes, throws on 0/0
    static Slope infinity() { return Slope{1, 0}; }

    bool is_infinity() const { return q == 0; }

    friend auto operator<=>(const Slope&, const Slope&) = default;

    std::string str() const;                              // "p/q", integers as "p/1", infinity as "inf"
    static std::optional<Slope> parse(std::string_view);  // accepts "inf", "p", "p/q"
};

// Edge test: |p_u q_v - p_v q_u| = 1.  Total, symmetric, irreflexive.
bool adjacent(const Slope& u, const Slope& v);

// Raised when a search would need to leave its slope box.  Callers must
// treat this as a hard failure, never as a truncated answer.
class SearchLimitError : public std::runtime_error {
public:
    explicit SearchLimitError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Link and annular projection
// ---------------------------------------------------------------------------

// The fixed element of SL(2,Z) that conjugates a pivot slope to infinity.
// For pivot p/q we take the Bezout pair (r, s) with p*s - q*r = 1 that
// minimizes |r| + |s| (ties broken toward r >= 0, then smaller |r|), and use
//   [ s  -r ]
//   [ -q  p ].
struct PivotFrame {
    std::int64_t a, b, c, d;  // row-major, determinant +1

    static PivotFrame for_pivot(const Slope& pivot);

    Slope apply(const Slope& u) const;    // frame * u
    Slope unapply(const Slope& x) const;  // frame^{-1} * x
};

// An integer coordinate in Link(pivot): index n decodes to frame^{-1}(n/1).
struct LinkCoordinate {
    Slope pivot;
    std::int64_t index = 0;
};

LinkCoordinate link_coordinate(const Slope& pivot, const Slope& u);  // throws if not adjacent
Slope link_decode(const Slope& pivot, std::int64_t index);

// Projection of u to the link of the pivot: map the pivot to infinity, write
// the image as x = a/b with b >= 1, and take {floor(x)} when x is an integer,
// {floor(x), floor(x)+1} otherwise.  Throws if u == pivot.
struct Projection {
    std::int64_t lo = 0;
    std::int64_t hi = 0;  // hi == lo (integral) or hi == lo + 1

    bool singleton() const { return lo == hi; }
};

Projection annular_projection(const Slope& pivot, const Slope& u);

// Diameter of annular_projection(pivot,u) union annular_projection(pivot,w)
// as a set of integers.
std::int64_t annular_distance(const Slope& pivot, const Slope& u, const Slope& w);

// ---------------------------------------------------------------------------
// Distances and geodesics
// ---------------------------------------------------------------------------

struct SearchOptions {
    std::int64_t box_factor = 4;   // box half-width = box_factor * max input size
    bool stability_check = true;   // re-run with a doubled box and compare
    std::int64_t max_box = 4096;   // refuse boxes wider than this (memory guard)
};

std::int64_t distance(const Slope& u, const Slope& v, const SearchOptions& opt = {});

struct Geodesic {
    std::vector<Slope> vertices;  // consecutive entries adjacent; size = distance + 1
};

// Every geodesic between u and v, canonically ordered.  Throws
// SearchLimitError if the search box cannot certify completeness.
std::vector<Geodesic> enumerate_geodesics(const Slope& u, const Slope& v,
                                          const SearchOptions& opt = {});

// ---------------------------------------------------------------------------
// Exhaustive sweep of the annular-projection bound
// ---------------------------------------------------------------------------

struct SweepOptions {
    std::int64_t max_denominator = 30;  // universe: slopes with |p| <= N, 0 <= q <= N
    std::int64_t box_factor = 4;
    int threads = 0;  // 0 = pick automatically
};

struct SweepViolation {
    Slope pivot, u, w;
    std::int64_t dv = 0;
    std::string kind;  // "bound" (avoidable pivot with dv > 4) or "forcing" (dv >= 5 not forced)
};

struct SweepReport {
    std::int64_t max_denominator = 0;
    std::int64_t universe_size = 0;
    std::uint64_t admissible_triples = 0;
    std::uint64_t checked_triples = 0;
    std::uint64_t avoidable_triples = 0;   // some geodesic avoids the pivot
    std::uint64_t forcing_triples = 0;     // dv >= forcing_gap
    std::int64_t max_dv_avoidable = 0;     // expected to reach exactly 4
    std::int64_t forcing_gap = 5;
    std::vector<SweepViolation> violations;
    std::string projection_convention;
    std::string universe_convention;
    std::string box_convention;
    double wall_seconds = 0.0;

    bool ok() const { return violations.empty(); }
    std::string to_json(bool with_timing = false) const;
};

SweepReport bgit_sweep(const SweepOptions& opt);

// All canonical slopes with |p| <= n and 0 <= q <= n (infinity included),
// sorted.  Exposed for the CLI coordinate dump and the tests.
std::vector<Slope> slope_universe(std::int64_t n);

}  // namespace cgt::farey
