// Subsurface projections: arcs of a curve in a complementary side of a
// boundary multicurve, their closures to curves, and the Lipschitz witnesses.

#include "cgt/diagram.hpp"
#include "cgt/projection.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace cgt;
using namespace cgt::projection;

namespace {

std::vector<diagram::CurveId> parse_boundary(const diagram::Diagram& d,
                                             const std::string& spec) {
    std::vector<diagram::CurveId> out;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int c = d.curve_index(tok);
        if (c < 0) throw std::invalid_argument("unknown boundary curve '" + tok + "'");
        out.push_back(c);
    }
    if (out.empty()) throw std::invalid_argument("empty boundary multicurve");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subsurface projections"};
    app.require_subcommand(1);

    std::string file, boundary_spec, curve_name, curve2_name;
    int side = 0, arc_index = 0, arc2_index = -1;

    auto* arcs = app.add_subcommand("arcs", "pi_A: essential arcs of a curve in the subsurface");
    arcs->add_option("FILE", file)->required();
    arcs->add_option("--subsurface", boundary_spec, "boundary multicurve, e.g. C or C,D")
        ->required();
    arcs->add_option("--side", side, "complement side index (default 0)");
    arcs->add_option("--curve", curve_name, "curve to project")->required();

    auto* pi0 = app.add_subcommand("pi0", "closure of an arc to curves");
    pi0->add_option("FILE", file)->required();
    pi0->add_option("--subsurface", boundary_spec)->required();
    pi0->add_option("--side", side);
    pi0->add_option("--curve", curve_name)->required();
    pi0->add_option("--arc", arc_index, "index into the pi_A arc list (default 0)");

    auto* lip = app.add_subcommand("lipschitz", "disjointness witnesses for the two lemmas");
    lip->add_option("FILE", file)->required();
    lip->add_option("--subsurface", boundary_spec)->required();
    lip->add_option("--side", side);
    lip->add_option("--curve", curve_name, "first curve")->required();
    lip->add_option("--curve2", curve2_name, "second curve (arc lemma; omit for pi0 lemma)");
    lip->add_option("--arc", arc_index, "first arc index (pi0 lemma)");
    lip->add_option("--arc2", arc2_index, "second arc index (pi0 lemma)");

    CLI11_PARSE(app, argc, argv);

    try {
        diagram::Diagram d = diagram::load_diagram_or_throw(file);
        auto boundary = parse_boundary(d, boundary_spec);
        SubsurfaceSpec y = make_subsurface(d, boundary, side);
        std::cerr << "subsurface: genus " << y.genus << ", " << y.boundary_components
                  << " boundary component(s), xi = " << y.xi << " (complement has "
                  << complement_side_count(d, boundary) << " side(s))\n";

        if (*arcs) {
            int c = d.curve_index(curve_name);
            if (c < 0) throw std::invalid_argument("unknown curve " + curve_name);
            auto pa = pi_A(y, c);
            if (pa.kind == PiAResult::Kind::Empty) {
                std::cout << "{\"kind\": \"empty\"}\n";
            } else if (pa.kind == PiAResult::Kind::WholeCurve) {
                std::cout << "{\"kind\": \"whole-curve\", \"curve\": \"" << curve_name
                          << "\"}\n";
            } else {
                std::cout << "{\"kind\": \"arcs\", \"total_segments\": " << pa.total_segments
                          << ", \"discarded_inessential\": " << pa.discarded_inessential
                          << ", \"merged_parallel\": " << pa.merged_parallel
                          << ", \"arcs\": [";
                for (std::size_t i = 0; i < pa.arcs.size(); ++i)
                    std::cout << (i ? ",\n  " : "\n  ") << describe(y, pa.arcs[i]);
                std::cout << "\n]}\n";
            }
        } else if (*pi0) {
            int c = d.curve_index(curve_name);
            auto pa = pi_A(y, c);
            if (arc_index < 0 || arc_index >= static_cast<int>(pa.arcs.size()))
                throw std::invalid_argument("arc index out of range (pi_A gave " +
                                            std::to_string(pa.arcs.size()) + " arcs)");
            auto q = pi_0(y, pa.arcs[arc_index]);
            std::cout << "{\"arc\": " << describe(y, pa.arcs[arc_index])
                      << ", \"essential_classes\": " << q.essential_count
                      << ", \"parallel_walls\": " << (q.parallel_walls ? "true" : "false")
                      << ", \"curves\": [";
            for (std::size_t i = 0; i < q.curves.size(); ++i) {
                const auto& pc = q.curves[i];
                std::cout << (i ? ",\n  " : "\n  ") << "{\"class\": \"" << pc.klass
                          << "\", \"runs\": [";
                for (std::size_t r = 0; r < pc.runs.size(); ++r)
                    std::cout << (r ? ", " : "") << "{\"curve\": \""
                              << d.curve_names[pc.runs[r].curve]
                              << "\", \"edges\": " << pc.runs[r].edges.size() << "}";
                std::cout << "]}";
            }
            std::cout << "\n]}\n";
        } else if (*lip) {
            int c1 = d.curve_index(curve_name);
            if (!curve2_name.empty()) {
                int c2 = d.curve_index(curve2_name);
                auto rep = check_arc_lipschitz(y, c1, c2);
                if (!rep.hypothesis_ok) {
                    std::cout << "{\"hypothesis\": false, \"reason\": \"" << rep.reason
                              << "\"}\n";
                    return 1;
                }
                std::cout << "{\"hypothesis\": true, \"witness_disjoint\": "
                          << (rep.witness_found ? "true" : "false")
                          << ", \"arc1\": " << describe(y, rep.witness1)
                          << ", \"arc2\": " << describe(y, rep.witness2) << "}\n";
                return rep.witness_found ? 0 : 1;
            }
            auto pa = pi_A(y, c1);
            if (arc2_index < 0) arc2_index = arc_index;
            if (arc_index >= static_cast<int>(pa.arcs.size()) ||
                arc2_index >= static_cast<int>(pa.arcs.size()))
                throw std::invalid_argument("arc index out of range");
            auto rep = check_pi0_lipschitz(y, pa.arcs[arc_index], pa.arcs[arc2_index]);
            if (!rep.hypothesis_ok) {
                std::cout << "{\"hypothesis\": false, \"reason\": \"" << rep.reason << "\"}\n";
                return 1;
            }
            std::cout << "{\"hypothesis\": true, \"ok\": " << (rep.ok ? "true" : "false")
                      << ", \"chain_length\": " << rep.chain_length << ", \"method\": \""
                      << rep.method << "\", \"chain\": [";
            for (std::size_t i = 0; i < rep.chain.size(); ++i)
                std::cout << (i ? ",\n  " : "\n  ") << rep.chain[i];
            std::cout << "\n]}\n";
            return rep.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
