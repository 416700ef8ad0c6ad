#include "cgt/farey.hpp"
#include "cgt/oracles.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace cgt::farey;

namespace {

Slope S(std::int64_t p, std::int64_t q) { return Slope::make(p, q); }

// Deterministic generator for property tests.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::int64_t below(std::int64_t n) { return static_cast<std::int64_t>(next() % n); }
};

}  // namespace

TEST_CASE("slope canonical form") {
    CHECK(S(2, 4) == S(1, 2));
    CHECK(S(-2, -4) == S(1, 2));
    CHECK(S(2, -4) == S(-1, 2));
    CHECK(S(5, 0) == Slope::infinity());
    CHECK(S(-3, 0) == Slope::infinity());
    CHECK(S(0, 7) == S(0, 1));
    CHECK_THROWS_AS(Slope::make(0, 0), std::invalid_argument);
    CHECK(Slope::parse("inf") == Slope::infinity());
    CHECK(Slope::parse("-1/2") == S(-1, 2));
    CHECK(Slope::parse("3") == S(3, 1));
    CHECK(!Slope::parse("2/").has_value());
    CHECK(S(1, 2).str() == "1/2");
    CHECK(Slope::infinity().str() == "inf");
}

TEST_CASE("farey adjacency") {
    CHECK(adjacent(S(0, 1), Slope::infinity()));
    CHECK_FALSE(adjacent(S(1, 2), S(1, 2)));
    CHECK(adjacent(S(1, 2), S(2, 3)));

    SplitMix rng{12345};
    auto random_slope = [&rng]() {
        std::int64_t p = rng.below(41) - 20, q = rng.below(20);
        if (p == 0 && q == 0) p = 1;
        return S(p, q);
    };
    for (int i = 0; i < 500; ++i) {
        Slope a = random_slope();
        Slope b = random_slope();
        CHECK(adjacent(a, b) == adjacent(b, a));
        CHECK_FALSE(adjacent(a, a));
    }
}

TEST_CASE("farey distance basics") {
    CHECK(distance(S(7, 3), S(7, 3)) == 0);
    CHECK(distance(S(0, 1), Slope::infinity()) == 1);

    // d(inf, 2/5) = 3: no integer n has |5n - 2| = 1, so no common neighbor
    // of inf and 2/5 exists, and inf - 0/1 - 1/2 - 2/5 is a path.
    for (std::int64_t nn = -30; nn <= 30; ++nn) CHECK(std::abs(5 * nn - 2) != 1);
    CHECK(adjacent(Slope::infinity(), S(0, 1)));
    CHECK(adjacent(S(0, 1), S(1, 2)));
    CHECK(adjacent(S(1, 2), S(2, 5)));
    CHECK(distance(Slope::infinity(), S(2, 5)) == 3);
}

TEST_CASE("farey distance properties") {
    // adjacent pairs have distance 1; sampled triangle inequality
    std::vector<Slope> uni = slope_universe(6);
    SplitMix rng{99};
    for (int i = 0; i < 120; ++i) {
        Slope a = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        Slope b = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        Slope c = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        if (adjacent(a, b)) CHECK(distance(a, b) == 1);
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
    }
}

TEST_CASE("slope universe restriction is connected for every N >= 1") {
    for (std::int64_t N = 1; N <= 8; ++N) {
        std::vector<Slope> uni = slope_universe(N);
        std::vector<char> seen(uni.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t visited = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < uni.size(); ++j) {
                if (!seen[j] && adjacent(uni[v], uni[j])) {
                    seen[j] = 1;
                    ++visited;
                    stack.push_back(j);
                }
            }
        }
        CHECK(visited == uni.size());
    }
}

TEST_CASE("geodesic enumeration") {
    auto gs = enumerate_geodesics(S(0, 1), Slope::infinity());
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].vertices == std::vector<Slope>{S(0, 1), Slope::infinity()});

    auto far = enumerate_geodesics(Slope::infinity(), S(2, 5));
    REQUIRE(!far.empty());
    for (const auto& g : far) {
        CHECK(g.vertices.size() == 4);  // length 3
        CHECK(g.vertices.front() == Slope::infinity());
        CHECK(g.vertices.back() == S(2, 5));
        for (std::size_t i = 0; i + 1 < g.vertices.size(); ++i)
            CHECK(adjacent(g.vertices[i], g.vertices[i + 1]));
    }

    // Independent oracle: exhaustive simple-path DFS at the geodesic length.
    auto oracle = cgt::oracles::simple_paths(Slope::infinity(), S(2, 5), 3, 20);
    CHECK(oracle.size() == far.size());

    CHECK_THROWS_AS(enumerate_geodesics(S(1, 2), S(1, 2)), std::invalid_argument);
}

TEST_CASE("link coordinates") {
    // The link of infinity is the integers under the identity frame.
    for (std::int64_t nn = -5; nn <= 5; ++nn)
        CHECK(link_coordinate(Slope::infinity(), S(nn, 1)).index == nn);

    CHECK(link_coordinate(S(0, 1), Slope::infinity()).index == 0);
    CHECK_THROWS_AS(link_coordinate(S(0, 1), S(2, 5)), std::invalid_argument);

    // Link of 0/1 as a set: {..., -1/2, -1/1, 1/0, 1/1, 1/2, ...}
    std::set<Slope> expect{S(-1, 2), S(-1, 1), Slope::infinity(), S(1, 1), S(1, 2)};
    std::set<Slope> got;
    for (std::int64_t i = -2; i <= 2; ++i) got.insert(link_decode(S(0, 1), i));
    CHECK(got == expect);

    // encode/decode round trip and fan adjacency, over several pivots
    std::vector<Slope> pivots{Slope::infinity(), S(0, 1), S(1, 2), S(-3, 5), S(7, 2)};
    for (const Slope& pv : pivots) {
        for (std::int64_t i = -6; i <= 6; ++i) {
            Slope u = link_decode(pv, i);
            CHECK(adjacent(pv, u));
            CHECK(link_coordinate(pv, u).index == i);
            CHECK(adjacent(link_decode(pv, i), link_decode(pv, i + 1)));
        }
    }
}

TEST_CASE("link restricted to a box is a consecutive integer interval") {
    std::vector<Slope> uni = slope_universe(12);
    std::vector<Slope> pivots{Slope::infinity(), S(0, 1), S(1, 3), S(-2, 5)};
    for (const Slope& pv : pivots) {
        std::vector<std::int64_t> idx;
        for (const Slope& u : uni)
            if (adjacent(pv, u)) idx.push_back(link_coordinate(pv, u).index);
        std::sort(idx.begin(), idx.end());
        REQUIRE(!idx.empty());
        for (std::size_t i = 0; i + 1 < idx.size(); ++i) CHECK(idx[i + 1] == idx[i] + 1);
    }
}

TEST_CASE("annular projection") {
    auto p1 = annular_projection(Slope::infinity(), S(3, 1));
    CHECK(p1.singleton());
    CHECK(p1.lo == 3);

    auto p2 = annular_projection(Slope::infinity(), S(2, 5));
    CHECK(p2.lo == 0);
    CHECK(p2.hi == 1);
    // both decoded slopes are adjacent to the pivot
    CHECK(adjacent(Slope::infinity(), link_decode(Slope::infinity(), p2.lo)));
    CHECK(adjacent(Slope::infinity(), link_decode(Slope::infinity(), p2.hi)));

    auto p3 = annular_projection(S(0, 1), Slope::infinity());
    CHECK(p3.singleton());

    CHECK_THROWS_AS(annular_projection(S(1, 2), S(1, 2)), std::invalid_argument);

    // projection of a link member contains its own link coordinate
    std::vector<Slope> pivots{Slope::infinity(), S(0, 1), S(2, 7)};
    for (const Slope& pv : pivots)
        for (std::int64_t i = -4; i <= 4; ++i) {
            Slope u = link_decode(pv, i);
            auto pr = annular_projection(pv, u);
            CHECK(pr.singleton());
            CHECK(pr.lo == i);
        }
}

TEST_CASE("annular distance") {
    CHECK(annular_distance(Slope::infinity(), S(0, 1), S(5, 1)) == 5);
    std::vector<Slope> uni = slope_universe(8);
    SplitMix rng{7};
    for (int i = 0; i < 200; ++i) {
        Slope v = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        Slope u = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        if (u == v) continue;
        CHECK(annular_distance(v, u, u) <= 1);
    }
}

TEST_CASE("annular distance is invariant under the Bezout choice") {
    // Any valid frame differs by an integer translation of the link, which
    // leaves diameters unchanged.
    std::vector<Slope> uni = slope_universe(7);
    SplitMix rng{41};
    for (int trial = 0; trial < 300; ++trial) {
        Slope v = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        Slope u = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        Slope w = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        if (u == v || w == v) continue;
        PivotFrame fr = PivotFrame::for_pivot(v);
        std::int64_t t = rng.below(9) - 4;
        // shifted Bezout pair: r' = r + t*p, s' = s + t*q
        PivotFrame shifted{fr.a + t * v.q, fr.b - t * v.p, fr.c, fr.d};
        auto proj = [&](const PivotFrame& f, const Slope& x) {
            Slope y = f.apply(x);
            std::int64_t fl = y.p >= 0 ? y.p / y.q : -((-y.p + y.q - 1) / y.q);
            return std::pair<std::int64_t, std::int64_t>{fl, y.q == 1 ? fl : fl + 1};
        };
        auto [ulo1, uhi1] = proj(fr, u);
        auto [wlo1, whi1] = proj(fr, w);
        auto [ulo2, uhi2] = proj(shifted, u);
        auto [wlo2, whi2] = proj(shifted, w);
        CHECK(std::max(uhi1, whi1) - std::min(ulo1, wlo1) ==
              std::max(uhi2, whi2) - std::min(ulo2, wlo2));
    }
}

TEST_CASE("bgit sweep at tiny scale") {
    SweepOptions opt;
    opt.max_denominator = 2;
    SweepReport rep = bgit_sweep(opt);
    CHECK(rep.ok());
    CHECK(rep.checked_triples == rep.admissible_triples);
    CHECK(rep.max_dv_avoidable <= 4);
    CHECK_THROWS_AS(bgit_sweep(SweepOptions{1, 4, 0}), std::invalid_argument);
}

TEST_CASE("bgit sweep at moderate scale finds the sharp bound") {
    SweepOptions opt;
    opt.max_denominator = 8;
    SweepReport rep = bgit_sweep(opt);
    CHECK(rep.ok());
    CHECK(rep.checked_triples == rep.admissible_triples);
    CHECK(rep.max_dv_avoidable == 4);
    CHECK(rep.forcing_triples > 0);
}

TEST_CASE("searches refuse to run past the box limit instead of truncating") {
    SearchOptions opt;
    opt.max_box = 64;
    CHECK_THROWS_AS(distance(S(1000001, 1000000), S(999999, 1000000), opt), SearchLimitError);
    CHECK_THROWS_AS(enumerate_geodesics(S(1000001, 1000000), S(2, 1000001), opt),
                    SearchLimitError);
}

TEST_CASE("annular projection decodes to slopes adjacent to the pivot") {
    std::vector<Slope> uni = slope_universe(6);
    SplitMix rng{2718};
    for (int i = 0; i < 300; ++i) {
        Slope v = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        Slope u = uni[rng.below(static_cast<std::int64_t>(uni.size()))];
        if (u == v) continue;
        auto pr = annular_projection(v, u);
        CHECK(adjacent(v, link_decode(v, pr.lo)));
        CHECK(adjacent(v, link_decode(v, pr.hi)));
        CHECK(pr.hi - pr.lo <= 1);
    }
}
