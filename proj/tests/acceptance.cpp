// Acceptance gate: every criterion at its stated scale, one verdict line
// each.  Exit status 0 only when all criteria hold.

#include "cgt/bicorn.hpp"
#include "cgt/farey.hpp"
#include "cgt/suites.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace cgt;

namespace {

int failures = 0;

void verdict(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << " (" << name << "): " << (pass ? "PASS" : "FAIL")
              << "  [" << detail << "]\n";
    if (!pass) ++failures;
}

long count_matching(const std::vector<std::string>& violations, const std::string& needle) {
    long n = 0;
    for (const auto& v : violations)
        if (v.find(needle) != std::string::npos) ++n;
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    verify::SuiteOptions opt;
    if (const char* env = std::getenv("CGT_FIXTURE_DIR")) opt.fixture_dir = env;
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--fixture-dir") opt.fixture_dir = argv[i + 1];
    opt.seed = 1;
    opt.farey_max_denominator = 30;  // exhaustive sweep bound
    opt.fuzz_count = 1000;           // fuzzed two-curve diagrams
    opt.fuzz_max_crossings = 12;
    opt.triple_count = 120;          // fuzzed triples, pairwise <= 10 crossings
    opt.triple_max_pair = 10;

    std::cout << "acceptance suite (seed " << opt.seed << ", fixtures from " << opt.fixture_dir
              << ")\n";

    try {
        // Criteria 1 and 2: the exhaustive annular-projection sweep.
        {
            farey::SweepOptions so;
            so.max_denominator = opt.farey_max_denominator;
            farey::SweepReport sweep = farey::bgit_sweep(so);
            long bound_violations = 0, forcing_violations = 0;
            for (const auto& v : sweep.violations)
                (v.kind == "bound" ? bound_violations : forcing_violations) += 1;
            verdict(1, "annular projection bound <= 4 on geodesic-avoidable pivots",
                    bound_violations == 0 && sweep.checked_triples == sweep.admissible_triples,
                    "max avoidable d_v = " + std::to_string(sweep.max_dv_avoidable) + " over " +
                        std::to_string(sweep.checked_triples) + " triples at denominator <= " +
                        std::to_string(sweep.max_denominator));
            verdict(2, "d_v >= 5 forces the pivot onto every geodesic", forcing_violations == 0,
                    std::to_string(sweep.forcing_triples) + " forcing triples, " +
                        std::to_string(forcing_violations) + " violations");
        }

        // Criterion 3: ledger arithmetic.
        {
            bicorn::BoundLedger ledger = bicorn::BoundLedger::derive(14, 4);
            bool ok = bicorn::compose_bound(ledger) == 44 && ledger.threshold == 18 &&
                      ledger.segment_cap == 36 &&
                      44 == ledger.lemma18_bound + ledger.lipschitz_step + ledger.segment_cap +
                                ledger.lipschitz_step + ledger.lemma18_bound;
            verdict(3, "bound composition 3 + 1 + 36 + 1 + 3 = 44 with 18 = 14 + 4, 36 = 2*18",
                    ok, "theorem bound = " + std::to_string(bicorn::compose_bound(ledger)));
        }

        // Criteria 4 and 5: the path suite and the oracle equivalences.
        {
            verify::SuiteReport rep = verify::run_suite("bicorn-paths", opt);
            long path_viol = count_matching(rep.violations, "path invariant");
            long oracle_viol = count_matching(rep.violations, "differs") +
                               count_matching(rep.violations, "round trip");
            verdict(4, "bicorn paths terminate, grow, stay 1-close and essential",
                    path_viol == 0,
                    std::to_string(rep.stats.at("paths_checked")) + " paths over " +
                        std::to_string(rep.stats.at("fuzz_accepted")) +
                        " fuzzed diagrams and the fixtures; max steps " +
                        std::to_string(rep.stats.at("max_path_steps")));
            verdict(5, "enumeration and bigon detection match the brute-force oracles",
                    oracle_viol == 0,
                    std::to_string(rep.stats.at("oracle_pairs_checked")) +
                        " enumerations and " + std::to_string(rep.stats.at("bigon_scans")) +
                        " bigon scans compared");
        }

        // Criterion 6: slim triangles.
        {
            verify::SuiteReport rep = verify::run_suite("slim-triangles", opt);
            verdict(6, "every bicorn is slim against the third curve", rep.ok,
                    std::to_string(rep.stats.at("witnesses")) + " witnesses, " +
                        std::to_string(rep.stats.at("disjoint")) + " disjoint, " +
                        std::to_string(rep.stats.at("below_threshold")) +
                        " below threshold over " +
                        std::to_string(rep.stats.at("bicorns_checked")) + " bicorns");
        }

        // Criterion 7: threshold surgery evidence.
        {
            verify::SuiteReport rep = verify::run_suite("lemma18", opt);
            verdict(7, "disjoint-subarc evidence on every applicable triple", rep.ok,
                    std::to_string(rep.stats.at("applicable")) + " applicable, " +
                        std::to_string(rep.stats.at("inapplicable")) + " gated out");
        }

        // Criterion 8: projection lemma witnesses.
        {
            verify::SuiteReport rep = verify::run_suite("projections", opt);
            verdict(8, "arc and closure Lipschitz witnesses always found", rep.ok,
                    std::to_string(rep.stats.at("arc_lipschitz_cases")) + " arc cases, " +
                        std::to_string(rep.stats.at("pi0_lipschitz_cases")) +
                        " closure cases, all witnessed");
        }
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << "\n";
        return 2;
    }

    std::cout << (failures == 0 ? "RESULT: all 8 criteria PASS\n"
                                : "RESULT: " + std::to_string(8 - failures) + "/8 criteria pass\n");
    return failures == 0 ? 0 : 1;
}
