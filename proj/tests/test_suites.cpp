#include "cgt/suites.hpp"

#include "doctest.h"

#include <stdexcept>

#include <cstdlib>

using namespace cgt::verify;

namespace {

std::string fixture_dir() {
    if (const char* env = std::getenv("CGT_FIXTURE_DIR")) return env;
    return "fixtures";
}

}  // namespace

TEST_CASE("manifest loads and every fixture satisfies its expected values") {
    auto entries = load_manifest(fixture_dir());
    CHECK(entries.size() >= 11);
    for (const auto& e : entries) {
        CHECK((e.origin == "encoded-figure" || e.origin == "constructed"));
        CHECK_NOTHROW(validate_fixture_expectations(fixture_dir(), e));
    }
}

TEST_CASE("unknown suite id is rejected") {
    SuiteOptions opt;
    opt.fixture_dir = fixture_dir();
    CHECK_THROWS_AS(run_suite("no-such-suite", opt), std::invalid_argument);
}

TEST_CASE("ledger suite reproduces the composed bound") {
    SuiteOptions opt;
    opt.fixture_dir = fixture_dir();
    SuiteReport rep = run_suite("ledger", opt);
    CHECK(rep.ok);
    CHECK(rep.stats.at("theorem_bound") == 44);
    CHECK(rep.stats.at("threshold") == 18);
    CHECK(rep.stats.at("segment_cap") == 36);
    // violations empty <=> ok
    CHECK(rep.violations.empty() == rep.ok);
}

TEST_CASE("same seed gives byte-identical reports") {
    SuiteOptions opt;
    opt.fixture_dir = fixture_dir();
    opt.seed = 17;
    opt.fuzz_count = 60;
    opt.fuzz_max_crossings = 8;
    SuiteReport a = run_suite("bicorn-paths", opt);
    SuiteReport b = run_suite("bicorn-paths", opt);
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(a.to_csv() == b.to_csv());

    opt.seed = 18;
    SuiteReport c = run_suite("bicorn-paths", opt);
    CHECK(a.to_json(false) != c.to_json(false));
}

TEST_CASE("small farey suite passes end to end") {
    SuiteOptions opt;
    opt.fixture_dir = fixture_dir();
    opt.farey_max_denominator = 6;
    SuiteReport rep = run_suite("farey-bgit", opt);
    CHECK(rep.ok);
    CHECK(rep.stats.at("max_dv_avoidable") <= 4);
    CHECK(rep.stats.at("checked_triples") == rep.stats.at("admissible_triples"));
}
