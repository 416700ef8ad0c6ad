#pragma once

#include "cgt/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cgt::projection {

// A complementary side of a disjoint essential multicurve in a closed host
// diagram.  Sides are the regions of the complement, in the deterministic
// region order of split_along.
struct SubsurfaceSpec {
    const diagram::Diagram* host = nullptr;
    std::vector<diagram::CurveId> boundary;
    int side = 0;

    diagram::RegionSet decomposition;    // rel boundary edges
    std::vector<char> face_in_y;
    std::vector<char> edge_boundary;     // the boundary edge set
    std::vector<char> edge_in_y;         // interior edges of Y
    int chi = 0;
    int boundary_components = 0;
    int genus = 0;
    int xi = 0;                          // 3g + b - 3
};

int complement_side_count(const diagram::Diagram& d,
                          const std::vector<diagram::CurveId>& boundary);

// Throws std::invalid_argument when the boundary curves are not pairwise
// disjoint and essential, or the side index is out of range.
SubsurfaceSpec make_subsurface(const diagram::Diagram& d,
                               std::vector<diagram::CurveId> boundary, int side);

// ---------------------------------------------------------------------------
// pi_A: arcs of a curve inside the subsurface
// ---------------------------------------------------------------------------

struct ProjectedArc {
    diagram::CurveId curve = -1;
    bool whole_curve = false;
    diagram::CrossingId from = -1, to = -1;      // cut crossings on the boundary
    diagram::CurveId from_boundary = -1, to_boundary = -1;
    int start_pos = -1;                          // visit position of `from` on the curve
    std::vector<int> edges;
    std::vector<diagram::CrossingId> interior;
};

struct PiAResult {
    enum class Kind { Empty, WholeCurve, Arcs };
    Kind kind = Kind::Empty;
    std::vector<ProjectedArc> arcs;   // essential, one per parallelism class
    int total_segments = 0;
    int discarded_inessential = 0;
    int merged_parallel = 0;
};

// Requires xi(Y) >= 1, c not a boundary curve, and no bigons between c and
// any boundary curve (minimal position).
PiAResult pi_A(const SubsurfaceSpec& y, diagram::CurveId c);

// True iff cutting Y along the arc leaves no disk piece.
bool arc_essential_in_y(const SubsurfaceSpec& y, const ProjectedArc& arc);

// True iff the two disjoint arcs cobound a rectangle with the boundary
// (combinatorial isotopy rel the boundary).
bool arcs_parallel_in_y(const SubsurfaceSpec& y, const ProjectedArc& a,
                        const ProjectedArc& b);

// ---------------------------------------------------------------------------
// pi_0: closure of an arc to curves
// ---------------------------------------------------------------------------

struct Pi0Curve {
    bool essential = false;
    std::string klass;               // "essential", "disk" or "boundary_parallel"
    int piece = -1;                  // the side of Y \ arc the curve faces
    std::vector<diagram::SideRun> runs;  // carrier description of the walk
    std::vector<int> carrier_edges;
    std::uint64_t carrier_crossings = 0;
};

struct Pi0Result {
    std::vector<Pi0Curve> curves;    // the inner neighborhood boundary (1 or 2 walls)
    int essential_count = 0;         // essential isotopy classes among them
    bool parallel_walls = false;     // two essential walls cobounding an annulus piece
};

// Boundary curves of a regular neighborhood of arc plus the boundary
// components it touches; inessential components are classified and kept in
// the record but do not count.  Throws std::logic_error when every component
// tests inessential (the arc was not essential to begin with).
Pi0Result pi_0(const SubsurfaceSpec& y, const ProjectedArc& arc);

// ---------------------------------------------------------------------------
// Lipschitz witnesses
// ---------------------------------------------------------------------------

struct ArcLipschitzReport {
    bool hypothesis_ok = false;
    std::string reason;              // set when the hypothesis fails
    bool witness_found = false;
    ProjectedArc witness1, witness2; // disjoint representatives
};

// For disjoint curves c1, c2 both cutting Y: exhibits disjoint members of
// pi_A(c1) and pi_A(c2).
ArcLipschitzReport check_arc_lipschitz(const SubsurfaceSpec& y, diagram::CurveId c1,
                                       diagram::CurveId c2);

struct Pi0LipschitzReport {
    bool hypothesis_ok = false;
    std::string reason;
    bool ok = false;
    int chain_length = -1;   // 0, 1 or 2 links
    std::string method;      // identical | parallel | middle-curve | carrier-disjoint
    std::vector<std::string> chain;  // rendered curve descriptions
};

// For disjoint arcs in Y: exhibits a two-link witness chain from a curve of
// pi_0(a1) to a curve of pi_0(a2), through an essential boundary component
// of a neighborhood of a1 ∪ a2 ∪ ∂Y when one is needed.
Pi0LipschitzReport check_pi0_lipschitz(const SubsurfaceSpec& y, const ProjectedArc& a1,
                                       const ProjectedArc& a2);

std::string describe(const SubsurfaceSpec& y, const ProjectedArc& arc);

}  // namespace cgt::projection
