// Bicorn machinery on diagram files: enumeration, paths, slim-triangle
// surgery, threshold evidence, and the bound arithmetic.

#include "cgt/bicorn.hpp"
#include "cgt/diagram.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace cgt;
using namespace cgt::bicorn;

namespace {

diagram::Diagram load(const std::string& path) { return diagram::load_diagram_or_throw(path); }

Strategy strategy_from(const std::string& text) {
    // "start:DIR:SIDE" with start = crossing id or "lo", DIR = +|-,
    // SIDE = auto|pos|neg
    Strategy st;
    if (text.empty()) return st;
    std::istringstream is(text);
    std::string tok;
    int field = 0;
    while (std::getline(is, tok, ':')) {
        switch (field++) {
            case 0:
                if (tok != "lo" && !tok.empty()) st.start_file_id = std::stol(tok);
                break;
            case 1:
                st.beta_direction = (tok == "-") ? -1 : +1;
                break;
            case 2:
                if (tok == "pos") st.alpha_side = Strategy::AlphaSide::Positive;
                else if (tok == "neg") st.alpha_side = Strategy::AlphaSide::Negative;
                break;
        }
    }
    return st;
}

std::pair<diagram::CurveId, diagram::CurveId> pick_pair(const diagram::Diagram& d,
                                                        const std::string& spec) {
    if (spec.empty()) return {0, 1};
    auto comma = spec.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("pair must be 'A,B'");
    int a = d.curve_index(spec.substr(0, comma));
    int b = d.curve_index(spec.substr(comma + 1));
    if (a < 0 || b < 0) throw std::invalid_argument("unknown curve in pair '" + spec + "'");
    return {a, b};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicorn curves, paths and surgeries"};
    app.require_subcommand(1);

    std::string file, pair_spec, strategy_spec, third_name = "C";
    int hausdorff = 14, filling = 4;

    auto* enumerate = app.add_subcommand("enumerate", "all bicorns between a curve pair");
    enumerate->add_option("FILE", file)->required();
    enumerate->add_option("--pair", pair_spec, "curve pair, e.g. A,B (default first two)");

    auto* path = app.add_subcommand("path", "the bicorn path between a curve pair");
    path->add_option("FILE", file)->required();
    path->add_option("--pair", pair_spec);
    path->add_option("--strategy", strategy_spec, "start:dir:side, e.g. lo:+:auto");

    auto* slim = app.add_subcommand("slim", "slim-triangle witnesses on a triple diagram");
    slim->add_option("FILE", file)->required();
    slim->add_option("--pair", pair_spec);
    slim->add_option("--third", third_name, "the third curve (default C)");

    auto* lemma = app.add_subcommand("lemma18", "disjoint-subarc evidence on a triple diagram");
    lemma->add_option("FILE", file)->required();
    lemma->add_option("--pair", pair_spec);
    lemma->add_option("--third", third_name);
    lemma->add_option("--strategy", strategy_spec);

    auto* bound = app.add_subcommand("bound", "compose the theorem bound from the ledger");
    bound->add_option("--hausdorff", hausdorff, "neighborhood radius (default 14)");
    bound->add_option("--filling", filling, "minimal filling intersection number (default 4)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) {
            diagram::Diagram d = load(file);
            auto [a, b] = pick_pair(d, pair_spec);
            auto all = enumerate_bicorns(d, a, b);
            std::cout << "[";
            for (std::size_t i = 0; i < all.size(); ++i) {
                std::cout << (i ? ",\n " : "\n ") << describe(d, all[i]);
            }
            std::cout << "\n]\n";
            std::cerr << all.size() << " bicorn(s)\n";
        } else if (*path) {
            diagram::Diagram d = load(file);
            auto [a, b] = pick_pair(d, pair_spec);
            auto p = bicorn_path(d, a, b, strategy_from(strategy_spec));
            auto pc = check_path_invariants(d, p);
            std::cout << "[";
            for (std::size_t i = 0; i < p.steps.size(); ++i)
                std::cout << (i ? ",\n " : "\n ") << describe(d, p.steps[i]);
            std::cout << "\n]\n";
            std::cerr << p.steps.size() << " steps, invariants "
                      << (pc.ok ? "ok" : ("FAILED: " + pc.what)) << "\n";
            return pc.ok ? 0 : 1;
        } else if (*slim) {
            diagram::Diagram d = load(file);
            auto [a, b] = pick_pair(d, pair_spec);
            int third = d.curve_index(third_name);
            if (third < 0) throw std::invalid_argument("unknown curve " + third_name);
            bool all_ok = true;
            for (const auto& g : enumerate_bicorns(d, a, b)) {
                auto res = slim_witness(d, g, third);
                std::cout << "{\"bicorn\": " << describe(d, g) << ", \"third_crossings\": "
                          << res.crossings_with_third << ", \"status\": ";
                switch (res.status) {
                    case SlimResult::Status::Witness:
                        std::cout << "\"witness\", \"side\": \"" << res.witness->side
                                  << "\", \"c_arc\": " << describe(d, res.witness->c_arc)
                                  << ", \"new_bicorn\": " << describe(d, res.witness->new_bicorn)
                                  << ", \"crossings_with_source\": "
                                  << res.witness->crossings_with_g;
                        break;
                    case SlimResult::Status::Disjoint:
                        std::cout << "\"disjoint\"";
                        break;
                    case SlimResult::Status::BelowThreshold:
                        std::cout << "\"below-threshold\"";
                        break;
                    case SlimResult::Status::NoWitness:
                        std::cout << "\"NO-WITNESS\"";
                        all_ok = false;
                        break;
                }
                std::cout << "}\n";
            }
            return all_ok ? 0 : 1;
        } else if (*lemma) {
            diagram::Diagram d = load(file);
            auto [a, b] = pick_pair(d, pair_spec);
            int third = d.curve_index(third_name);
            if (third < 0) throw std::invalid_argument("unknown curve " + third_name);
            auto p = bicorn_path(d, a, b, strategy_from(strategy_spec));
            auto ev = lemma18_evidence(d, p, third);
            if (!ev.applicable) {
                if (ev.offending_step >= 0)
                    std::cout << "{\"applicable\": false, \"offending_step\": "
                              << ev.offending_step << ", \"bicorn\": "
                              << describe(d, p.steps[ev.offending_step]) << "}\n";
                else
                    std::cout << "{\"applicable\": false}\n";
                return 1;
            }
            std::cout << "{\"applicable\": true, \"k\": " << ev.k << ", \"k1\": " << ev.k1
                      << ",\n \"surgered_i\": " << describe(d, ev.surgered_i)
                      << ",\n \"surgered_j\": " << describe(d, ev.surgered_j)
                      << ",\n \"delta_i\": " << describe(d, ev.delta_i)
                      << ",\n \"delta_j\": " << describe(d, ev.delta_j)
                      << ",\n \"deltas_disjoint\": " << (ev.deltas_disjoint ? "true" : "false")
                      << "}\n";
            return ev.deltas_disjoint ? 0 : 1;
        } else if (*bound) {
            BoundLedger ledger = BoundLedger::derive(hausdorff, filling);
            std::cout << "{\"hausdorff_radius\": " << ledger.hausdorff_radius
                      << ", \"filling_min\": " << ledger.filling_min
                      << ", \"threshold\": " << ledger.threshold
                      << ", \"segment_cap\": " << ledger.segment_cap
                      << ", \"lemma18_bound\": " << ledger.lemma18_bound
                      << ", \"lipschitz_step\": " << ledger.lipschitz_step
                      << ", \"theorem_bound\": " << compose_bound(ledger)
                      << ", \"forcing_gap\": " << ledger.forcing_gap << "}\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
