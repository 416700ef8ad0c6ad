#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgt::diagram {

// A diagram of 2 or more simple closed curves in minimal position on a
// closed oriented surface, encoded as a 4-valent ribbon graph.  Each
// crossing carries exactly two transversal strands of distinct curves; the
// rotation (counterclockwise order of the four edge ends) is determined by
// the crossing sign:
//   sign +1:  X-in, Y-in, X-out, Y-out
//   sign -1:  X-in, Y-out, X-out, Y-in
// Geometric slots are numbered 0..3 counterclockwise with X-in at slot 0 and
// X-out at slot 2.

using CurveId = int;
using CrossingId = int;  // dense internal index
using Dart = int;        // 4 * crossing + geometric slot

constexpr int kMaxCrossings = 64;  // interior-crossing sets are 64-bit masks

struct Crossing {
    long file_id = 0;
    CurveId x_curve = -1;
    CurveId y_curve = -1;
    int sign = +1;
};

struct Edge {
    CurveId curve = -1;
    int seq = 0;            // edge from visit seq to visit seq+1 along the curve
    CrossingId from = -1;
    CrossingId to = -1;
    Dart dart_out = -1;     // end at `from`
    Dart dart_in = -1;      // end at `to`
};

struct Face {
    std::vector<Dart> darts;  // orbit of sigma∘iota, in traced order
    int degree() const { return static_cast<int>(darts.size()); }
};

struct Violation {
    std::string message;
    int line = -1;  // source line when known
};

class Diagram {
public:
    int declared_genus = 0;
    std::vector<std::string> curve_names;
    std::vector<Crossing> crossings;
    std::vector<std::vector<CrossingId>> cycles;  // visit sequence per curve
    bool multicurve_flag = false;

    // --- derived state, built by finalize() ---

    int curve_count() const { return static_cast<int>(curve_names.size()); }
    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool crossing_free() const { return crossings.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    int computed_genus() const { return computed_genus_; }

    Dart opposite(Dart d) const { return opposite_[d]; }
    int edge_of_dart(Dart d) const { return edge_of_dart_[d]; }
    int face_of_dart(Dart d) const { return face_of_dart_[d]; }

    // Geometric slot layout at a crossing.
    Dart dart_at(CrossingId c, int slot) const { return 4 * c + slot; }
    int x_in_slot(CrossingId) const { return 0; }
    int x_out_slot(CrossingId) const { return 2; }
    int y_in_slot(CrossingId c) const { return crossings[c].sign > 0 ? 1 : 3; }
    int y_out_slot(CrossingId c) const { return crossings[c].sign > 0 ? 3 : 1; }

    CurveId curve_at_slot(CrossingId c, int slot) const {
        return (slot % 2 == 0) ? crossings[c].x_curve : crossings[c].y_curve;
    }

    int curve_index(std::string_view name) const;  // -1 if unknown

    // Visit bookkeeping.  Every crossing is visited exactly once by each of
    // its two strands.
    int curve_size(CurveId c) const { return static_cast<int>(cycles[c].size()); }
    CrossingId visit(CurveId c, int pos) const { return cycles[c][pos]; }
    int position_of(CurveId c, CrossingId x) const { return visit_pos_[x][role_index(c, x)]; }
    bool curve_is_x(CurveId c, CrossingId x) const { return crossings[x].x_curve == c; }

    // Edge from visit pos to visit pos+1 (cyclic) along curve c.
    int edge_index(CurveId c, int pos) const { return edge_start_[c] + pos; }

    // Bitmask over crossing ids of the crossings shared by two curves.
    std::uint64_t pair_mask(CurveId a, CurveId b) const;
    std::uint64_t curve_mask(CurveId c) const;  // all crossings on curve c

    CrossingId crossing_by_file_id(long id) const;  // -1 if unknown

    // Builds edges, darts, faces; appends any structural violations found.
    void finalize(std::vector<Violation>& out);

private:
    int role_index(CurveId c, CrossingId x) const { return crossings[x].x_curve == c ? 0 : 1; }

    std::vector<Edge> edges_;
    std::vector<int> edge_start_;          // first edge index per curve
    std::vector<Dart> opposite_;           // iota
    std::vector<int> edge_of_dart_;
    std::vector<int> face_of_dart_;
    std::vector<Face> faces_;
    std::vector<std::array<int, 2>> visit_pos_;  // per crossing: position on x-curve, y-curve
    int computed_genus_ = 0;
};

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

struct ParseOptions {
    int max_curves = 3;  // lifted by the multicurve flag in the file itself
};

struct ParseResult {
    std::optional<Diagram> diagram;  // present only when errors is empty
    std::vector<Violation> errors;   // every violated invariant, not just the first

    bool ok() const { return errors.empty(); }
};

ParseResult parse_diagram(std::string_view text, const ParseOptions& opt = {});
Diagram parse_diagram_or_throw(std::string_view text, const ParseOptions& opt = {});
ParseResult load_diagram(const std::string& path, const ParseOptions& opt = {});
Diagram load_diagram_or_throw(const std::string& path, const ParseOptions& opt = {});

// Byte-stable: crossings sorted by file id, cycles rotated to start at the
// smallest (file id, slot) visit.
std::string serialize(const Diagram& d);

// ---------------------------------------------------------------------------
// Complement regions
// ---------------------------------------------------------------------------

// Faces of the diagram merged across every edge NOT in the boundary set.
// Each region is a compact subsurface; chi is the Euler characteristic of
// its closure, with boundary walks traced along the kept edges.
struct RegionSet {
    struct Walk {
        std::vector<Dart> wall;  // darts of boundary edges, in boundary order
    };
    struct Region {
        std::vector<int> faces;
        std::vector<Walk> walks;
        int interior_edges = 0;
        int interior_vertices = 0;
        int chi = 0;
    };
    std::vector<Region> regions;
    std::vector<int> region_of_face;
};

RegionSet split_along(const Diagram& d, const std::vector<bool>& edge_is_boundary);

// Maximal runs of same-curve edges along a walk.
struct SideRun {
    CurveId curve = -1;
    std::vector<int> edges;
};
std::vector<SideRun> walk_runs(const Diagram& d, const RegionSet::Walk& walk);

// ---------------------------------------------------------------------------
// Minimal position and essentiality
// ---------------------------------------------------------------------------

// A bigon between c1 and c2: a disk region of the complement of c1 ∪ c2
// whose boundary is a single walk with exactly one run on each curve.
struct BigonWitness {
    std::vector<int> faces;  // host faces forming the disk
    SideRun side1, side2;
};

std::vector<BigonWitness> detect_bigons(const Diagram& d, CurveId c1, CurveId c2);

// Crossing count of the pair; requires no bigons (minimal position), in
// which case it equals the geometric intersection number.
int intersection_number(const Diagram& d, CurveId c1, CurveId c2);

// True iff no complementary component of the curve (given as the set of the
// edges it runs along) is a disk.  The curve must be a single embedded
// closed curve on the diagram.
bool is_essential_curve(const Diagram& d, const std::vector<int>& curve_edges);
bool is_essential_curve(const Diagram& d, CurveId c);

}  // namespace cgt::diagram
