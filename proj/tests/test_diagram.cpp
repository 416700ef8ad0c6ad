#include "cgt/diagram.hpp"
#include "cgt/oracles.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace cgt::diagram;

namespace {

// The standard one-crossing torus diagram: curves of slope (1,0) and (0,1).
const char* kTorusSquare = R"(# one-crossing torus diagram
genus 1
curves A B
x 0 A B 1
cycle A 0:0
cycle B 0:1
)";

std::vector<int> curve_edges(const Diagram& d, CurveId c) {
    std::vector<int> out;
    for (std::size_t i = 0; i < d.edges().size(); ++i)
        if (d.edges()[i].curve == c) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

TEST_CASE("torus square diagram") {
    ParseResult r = parse_diagram(kTorusSquare);
    REQUIRE(r.ok());
    const Diagram& d = *r.diagram;
    CHECK(d.crossing_count() == 1);
    CHECK(d.edge_count() == 2);
    CHECK(d.faces().size() == 1);
    CHECK(d.faces()[0].degree() == 4);
    CHECK(d.computed_genus() == 1);

    CHECK(detect_bigons(d, 0, 1).empty());
    CHECK(intersection_number(d, 0, 1) == 1);

    // alpha on the torus is essential; its complement is an annulus
    CHECK(is_essential_curve(d, 0));
    CHECK(is_essential_curve(d, 1));

    std::vector<bool> boundary(d.edge_count(), false);
    for (int e : curve_edges(d, 0)) boundary[e] = true;
    RegionSet rs = split_along(d, boundary);
    REQUIRE(rs.regions.size() == 1);
    CHECK(rs.regions[0].chi == 0);
    CHECK(rs.regions[0].walks.size() == 2);
}

TEST_CASE("corner count identity") {
    ParseResult r = parse_diagram(kTorusSquare);
    REQUIRE(r.ok());
    const Diagram& d = *r.diagram;
    int corners = 0;
    for (const Face& f : d.faces()) corners += f.degree();
    CHECK(corners == 4 * d.crossing_count());
}

TEST_CASE("serialization round trip is byte stable") {
    ParseResult r = parse_diagram(kTorusSquare);
    REQUIRE(r.ok());
    std::string s1 = serialize(*r.diagram);
    ParseResult r2 = parse_diagram(s1);
    REQUIRE(r2.ok());
    CHECK(serialize(*r2.diagram) == s1);
}

TEST_CASE("json mirror accepts the same diagram") {
    const char* json = R"({
      "genus": 1,
      "curves": ["A", "B"],
      "x": [{"id": 0, "curves": ["A", "B"], "sign": 1}],
      "cycle": {"A": ["0:0"], "B": ["0:1"]}
    })";
    ParseResult r = parse_diagram(json);
    REQUIRE(r.ok());
    CHECK(serialize(*r.diagram) == serialize(parse_diagram(kTorusSquare).diagram.value()));
}

TEST_CASE("validation reports every violated invariant") {
    // wrong genus, unknown curve in a crossing, bad sign: all reported
    const char* bad = R"(genus 2
curves A B
x 0 A C 1
x 1 A B 7
cycle A 0:0 1:0
cycle B 1:1
)";
    ParseResult r = parse_diagram(bad);
    CHECK(!r.ok());
    CHECK(r.errors.size() >= 2);

    // Euler mismatch: the torus diagram declared as genus 2
    std::string wrong_genus = kTorusSquare;
    wrong_genus.replace(wrong_genus.find("genus 1"), 7, "genus 2");
    ParseResult r2 = parse_diagram(wrong_genus);
    CHECK(!r2.ok());
    bool mentions_euler = false;
    for (const auto& v : r2.errors)
        if (v.message.find("Euler") != std::string::npos) mentions_euler = true;
    CHECK(mentions_euler);

    // a curve visiting a crossing twice is a self-touch: rejected
    const char* selfvisit = R"(genus 1
curves A B
x 0 A B 1
x 1 A B 1
cycle A 0:0 1:0 0:0
cycle B 0:1 1:1
)";
    CHECK(!parse_diagram(selfvisit).ok());

    // more than three curves requires the multicurve flag
    const char* four = R"(genus 1
curves A B C D
)";
    CHECK(!parse_diagram(four).ok());
}

TEST_CASE("crossing-free two-curve diagram is accepted") {
    const char* disjoint = R"(genus 2
curves A B
cycle A
cycle B
)";
    ParseResult r = parse_diagram(disjoint);
    REQUIRE(r.ok());
    CHECK(r.diagram->crossing_free());
    CHECK(r.diagram->declared_genus == 2);
}

TEST_CASE("wiggled diagram has exactly one bigon") {
    // A genus-2 pair with one cancelling crossing pair folded in.
    const char* wiggled = R"(genus 2
curves A B
x 0 A B 1
x 1 A B -1
x 2 A B -1
x 3 A B -1
cycle A 0:0 1:0 2:0 3:0
cycle B 0:1 1:1 3:1 2:1
)";
    ParseResult r = parse_diagram(wiggled);
    REQUIRE(r.ok());
    const Diagram& d = *r.diagram;
    auto bigons = detect_bigons(d, 0, 1);
    REQUIRE(bigons.size() == 1);

    // detect_bigons agrees with the brute-force degree-2 face scan
    auto faces = cgt::oracles::degree_two_face_scan(d, 0, 1);
    CHECK(faces.size() == 1);
    REQUIRE(bigons[0].faces.size() == 1);
    CHECK(bigons[0].faces[0] == faces[0]);

    // the bigon boundary bounds a disk, hence is inessential
    std::vector<int> boundary_edges = bigons[0].side1.edges;
    boundary_edges.insert(boundary_edges.end(), bigons[0].side2.edges.begin(),
                          bigons[0].side2.edges.end());
    CHECK_FALSE(is_essential_curve(d, boundary_edges));

    // intersection_number refuses non-minimal input
    CHECK_THROWS_AS(intersection_number(d, 0, 1), std::invalid_argument);
}

TEST_CASE("same-orientation two-crossing torus pair") {
    // slopes (1,0) and (1,2): two crossings of equal sign, no bigons
    const char* fig = R"(genus 1
curves A B
x 0 A B 1
x 1 A B 1
cycle A 0:0 1:0
cycle B 0:1 1:1
)";
    ParseResult r = parse_diagram(fig);
    REQUIRE(r.ok());
    const Diagram& d = *r.diagram;
    CHECK(detect_bigons(d, 0, 1).empty());
    CHECK(intersection_number(d, 0, 1) == 2);
    CHECK(d.faces().size() == 2);
    for (const Face& f : d.faces()) CHECK(f.degree() == 4);
    CHECK(is_essential_curve(d, 0));
    CHECK(is_essential_curve(d, 1));
}

TEST_CASE("opposite-orientation two-crossing diagrams always have a bigon") {
    // Both sign assignments with opposite orientations produce a bigon, so a
    // minimal-position pair with exactly two opposite crossings cannot be
    // encoded on any closed surface.
    for (auto [s0, s1] : {std::pair{1, -1}, std::pair{-1, 1}}) {
        std::string text = "genus 1\ncurves A B\n";
        text += "x 0 A B " + std::to_string(s0) + "\n";
        text += "x 1 A B " + std::to_string(s1) + "\n";
        text += "cycle A 0:0 1:0\ncycle B 0:1 1:1\n";
        ParseResult r = parse_diagram(text);
        if (!r.ok()) continue;  // genus mismatch variants are fine too
        CHECK(!detect_bigons(*r.diagram, 0, 1).empty());
    }
}
