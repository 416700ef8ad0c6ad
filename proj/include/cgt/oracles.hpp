#pragma once

// Verification-only reference algorithms.  Everything here recomputes a
// result of the main library by the most naive route available and is used
// solely by the test and verification targets; nothing in the library
// depends on this header.

#include "cgt/bicorn.hpp"
#include "cgt/diagram.hpp"
#include "cgt/farey.hpp"

#include <vector>

namespace cgt::oracles {

// Naive bicorn enumeration: walk the curves step by step, compare crossing
// lists pairwise.
std::vector<bicorn::Bicorn> brute_force_bicorns(const diagram::Diagram& d, diagram::CurveId a,
                                                diagram::CurveId b);

// Literal scan of the face list for degree-2 faces with one side on each
// curve (the textbook bigon test on a two-curve diagram).
std::vector<int> degree_two_face_scan(const diagram::Diagram& d, diagram::CurveId c1,
                                      diagram::CurveId c2);

// All simple paths between two slopes with the given number of edges, by
// exhaustive DFS over a slope box; only the adjacency predicate is used.
std::vector<std::vector<farey::Slope>> simple_paths(const farey::Slope& from,
                                                    const farey::Slope& to, int edges,
                                                    std::int64_t box);

}  // namespace cgt::oracles
