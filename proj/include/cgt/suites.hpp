#pragma once

#include "cgt/diagram.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cgt::verify {

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::string fixture_dir = "fixtures";
    std::string report_dir;          // empty: no files written
    bool timing = false;             // include wall time in report files

    std::int64_t farey_max_denominator = 30;
    int fuzz_count = 1000;           // two-curve path diagrams
    int fuzz_max_crossings = 12;
    int oracle_max_crossings = 8;
    int triple_count = 120;          // pairwise-minimal triples
    int triple_max_pair = 10;
    int projection_hosts = 40;
    int threads = 0;
};

struct SuiteReport {
    std::string suite;
    bool ok = false;
    std::vector<std::string> violations;
    std::map<std::string, std::int64_t> stats;
    std::vector<std::pair<std::string, std::string>> conventions;
    double wall_seconds = 0.0;

    std::string to_json(bool with_timing) const;
    std::string to_csv() const;
};

const std::vector<std::string>& suite_names();  // the six suite ids

// Runs one named suite deterministically for the seed; writes JSON and CSV
// reports when report_dir is set.  Throws std::invalid_argument on an
// unknown suite id and std::runtime_error on fixture/manifest failures.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<SuiteReport> run_all(const SuiteOptions& opt);

// ---------------------------------------------------------------------------
// Fixture manifest
// ---------------------------------------------------------------------------

struct ManifestEntry {
    std::string name;
    std::string file;
    int genus = 0;
    std::vector<std::string> curves;
    std::string origin;       // encoded-figure | constructed
    std::string expected_json;  // raw expected-value block
};

// Parses and validates the manifest: every fixture parses, declares the
// stated genus and curves, and every tagged expected value holds.  Throws on
// the first offending fixture with its locus.
std::vector<ManifestEntry> load_manifest(const std::string& fixture_dir);
diagram::Diagram load_fixture(const std::string& fixture_dir, const ManifestEntry& entry);
void validate_fixture_expectations(const std::string& fixture_dir, const ManifestEntry& entry);

}  // namespace cgt::verify
