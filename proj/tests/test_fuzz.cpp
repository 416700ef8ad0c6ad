#include "cgt/bicorn.hpp"
#include "cgt/fuzz.hpp"

#include "doctest.h"

#include <algorithm>
#include <bit>

using namespace cgt;
using namespace cgt::fuzz;

TEST_CASE("fuzzer yields valid two-curve diagrams") {
    FuzzOptions opt;
    opt.seed = 42;
    opt.max_pair_crossings = 8;
    FuzzStats stats;
    auto diagrams = fuzz_diagrams(opt, 40, &stats);
    CHECK(stats.accepted == 40);
    CHECK(stats.attempts >= stats.accepted);

    bool saw_genus2 = false;
    for (const auto& d : diagrams) {
        CHECK(d.computed_genus() >= 1);
        CHECK(diagram::detect_bigons(d, 0, 1).empty());
        if (d.computed_genus() == 2) saw_genus2 = true;

        // round trip through the serializer
        auto r = diagram::parse_diagram(diagram::serialize(d));
        REQUIRE(r.ok());
        CHECK(diagram::serialize(*r.diagram) == diagram::serialize(d));
    }
    CHECK(saw_genus2);

    // same seed, same stream
    auto again = fuzz_diagrams(opt, 40, nullptr);
    for (std::size_t i = 0; i < diagrams.size(); ++i)
        CHECK(diagram::serialize(again[i]) == diagram::serialize(diagrams[i]));
}

TEST_CASE("path invariants hold over fuzzed diagrams") {
    FuzzOptions opt;
    opt.seed = 7;
    opt.max_pair_crossings = 12;
    for (const auto& d : fuzz_diagrams(opt, 120)) {
        auto path = bicorn::bicorn_path(d, 0, 1);
        auto pc = bicorn::check_path_invariants(d, path);
        CHECK_MESSAGE(pc.ok, pc.what, " in\n", diagram::serialize(d));
    }
}

TEST_CASE("enumeration matches the oracle count bound on fuzzed diagrams") {
    FuzzOptions opt;
    opt.seed = 11;
    opt.max_pair_crossings = 8;
    for (const auto& d : fuzz_diagrams(opt, 40)) {
        auto all = bicorn::enumerate_bicorns(d, 0, 1);
        for (const auto& g : all) {
            CHECK(bicorn::is_valid(d, g));
            CHECK(bicorn::is_essential(d, g));
            CHECK(bicorn::bicorn_crossings(d, g, g) == 0);
        }
    }
}

TEST_CASE("fuzzer yields valid triples without triple points") {
    FuzzOptions opt;
    opt.seed = 5;
    opt.curves = 3;
    opt.max_pair_crossings = 6;
    FuzzStats stats;
    auto triples = fuzz_diagrams(opt, 25, &stats);
    for (const auto& d : triples) {
        CHECK(d.curve_count() == 3);
        // no triple points: every crossing involves exactly two curves, and
        // the three pairwise families partition the crossing set
        int ab = std::popcount(d.pair_mask(0, 1));
        int ac = std::popcount(d.pair_mask(0, 2));
        int bc = std::popcount(d.pair_mask(1, 2));
        CHECK(ab + ac + bc == d.crossing_count());
        for (diagram::CurveId a = 0; a < 3; ++a)
            for (diagram::CurveId b = a + 1; b < 3; ++b)
                CHECK(diagram::detect_bigons(d, a, b).empty());
    }
}

TEST_CASE("slim witnesses on fuzzed triples") {
    FuzzOptions opt;
    opt.seed = 13;
    opt.curves = 3;
    opt.max_pair_crossings = 8;
    opt.min_pair_crossings = 1;
    int witnesses = 0, disjoint = 0, below = 0;
    for (const auto& d : fuzz_diagrams(opt, 60)) {
        for (const auto& g : bicorn::enumerate_bicorns(d, 0, 1)) {
            auto res = bicorn::slim_witness(d, g, 2);
            switch (res.status) {
                case bicorn::SlimResult::Status::Witness:
                    ++witnesses;
                    REQUIRE(res.witness.has_value());
                    CHECK(res.witness->crossings_with_g <= 1);
                    CHECK(bicorn::is_valid(d, res.witness->new_bicorn));
                    CHECK(bicorn::is_essential(d, res.witness->new_bicorn));
                    break;
                case bicorn::SlimResult::Status::Disjoint:
                    ++disjoint;
                    CHECK(res.crossings_with_third == 0);
                    break;
                case bicorn::SlimResult::Status::BelowThreshold:
                    ++below;
                    CHECK(res.crossings_with_third < 4);
                    break;
                case bicorn::SlimResult::Status::NoWitness:
                    // hypothesis satisfied but no witness: must never happen
                    FAIL("NoWitness with ", res.crossings_with_third, " crossings in\n",
                         diagram::serialize(d), "bicorn ", bicorn::describe(d, g));
            }
        }
    }
    CHECK(witnesses > 0);
    CHECK(disjoint + below + witnesses > 0);
}

TEST_CASE("threshold evidence on applicable fuzzed triples") {
    FuzzOptions opt;
    opt.seed = 23;
    opt.curves = 3;
    opt.pair_counts = {4, 6, 6};  // pair (A,B) small, both heavily crossing C
    int applicable = 0, checked = 0;
    for (const auto& d : fuzz_diagrams(opt, 80)) {
        auto path = bicorn::bicorn_path(d, 0, 1);
        auto ev = bicorn::lemma18_evidence(d, path, 2);
        ++checked;
        if (!ev.applicable) continue;
        ++applicable;
        CHECK(ev.k >= 0);
        CHECK(ev.k1 >= ev.k);
        CHECK(ev.k1 - ev.k <= 1);
        CHECK(ev.deltas_disjoint);
        CHECK(bicorn::is_valid(d, ev.surgered_i));
        CHECK(bicorn::is_valid(d, ev.surgered_j));
        CHECK(bicorn::bicorn_crossings(d, ev.surgered_i, path.steps[ev.k]) <= 1);
        CHECK(bicorn::bicorn_crossings(d, ev.surgered_j, path.steps[ev.k1]) <= 1);
    }
    CHECK(applicable > 0);
}
