// Verification entry point: runs the named suite (or all of them)
// deterministically for a seed and writes JSON/CSV reports.

#include "cgt/suites.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace cgt::verify;

namespace {

void print_summary(const SuiteReport& rep) {
    std::cout << rep.suite << ": " << (rep.ok ? "ok" : "FAILED") << " ("
              << rep.violations.size() << " violation(s), " << rep.wall_seconds << " s)\n";
    for (const auto& v : rep.violations) std::cout << "  - " << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suites"};

    SuiteOptions opt;
    if (const char* env = std::getenv("CGT_FIXTURE_DIR")) opt.fixture_dir = env;
    if (const char* env = std::getenv("CGT_REPORT_DIR")) opt.report_dir = env;

    std::string suite = "all";
    app.add_option("SUITE", suite,
                   "one of: all, ledger, farey-bgit, bicorn-paths, slim-triangles, lemma18, "
                   "projections");
    app.add_option("--seed", opt.seed, "seed for every random stream");
    app.add_option("--report-dir", opt.report_dir, "write per-suite JSON and CSV here");
    app.add_option("--fixture-dir", opt.fixture_dir, "fixture directory");
    app.add_option("--max-denominator", opt.farey_max_denominator, "farey sweep bound");
    app.add_option("--fuzz-count", opt.fuzz_count, "fuzzed two-curve diagrams");
    app.add_option("--fuzz-max-crossings", opt.fuzz_max_crossings);
    app.add_option("--triple-count", opt.triple_count, "fuzzed triples");
    app.add_option("--triple-max-pair", opt.triple_max_pair);
    app.add_option("--projection-hosts", opt.projection_hosts);
    app.add_option("--threads", opt.threads, "sweep worker threads (0 = auto)");
    app.add_flag("--timing", opt.timing, "include wall time in report files");

    CLI11_PARSE(app, argc, argv);

    try {
        bool all_ok = true;
        if (suite == "all") {
            for (const auto& rep : run_all(opt)) {
                print_summary(rep);
                all_ok = all_ok && rep.ok;
            }
        } else {
            SuiteReport rep = run_suite(suite, opt);
            print_summary(rep);
            all_ok = rep.ok;
        }
        return all_ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
