#include "cgt/suites.hpp"

#include "cgt/bicorn.hpp"
#include "cgt/farey.hpp"
#include "cgt/fuzz.hpp"
#include "cgt/oracles.hpp"
#include "cgt/projection.hpp"

#include "json.hpp"

#include <array>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cgt::verify {

using diagram::CurveId;
using diagram::Diagram;
using nlohmann::json;

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void note(SuiteReport& rep, const std::string& key, std::int64_t v) { rep.stats[key] = v; }

void violate(SuiteReport& rep, std::string what) { rep.violations.push_back(std::move(what)); }

}  // namespace

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

std::vector<ManifestEntry> load_manifest(const std::string& fixture_dir) {
    std::ifstream f(fixture_dir + "/manifest.json");
    if (!f) throw std::runtime_error("cannot open " + fixture_dir + "/manifest.json");
    json j = json::parse(f);
    std::vector<ManifestEntry> out;
    for (const auto& fx : j.at("fixtures")) {
        ManifestEntry e;
        e.name = fx.at("name").get<std::string>();
        e.file = fx.at("file").get<std::string>();
        e.genus = fx.at("genus").get<int>();
        for (const auto& c : fx.at("curves")) e.curves.push_back(c.get<std::string>());
        e.origin = fx.at("origin").get<std::string>();
        if (e.origin != "encoded-figure" && e.origin != "constructed")
            throw std::runtime_error("manifest: fixture " + e.name +
                                     " has unknown origin tag '" + e.origin + "'");
        e.expected_json = fx.at("expected").dump();
        out.push_back(std::move(e));
    }
    return out;
}

Diagram load_fixture(const std::string& fixture_dir, const ManifestEntry& entry) {
    return diagram::load_diagram_or_throw(fixture_dir + "/" + entry.file);
}

void validate_fixture_expectations(const std::string& fixture_dir, const ManifestEntry& entry) {
    Diagram d = load_fixture(fixture_dir, entry);
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("fixture " + entry.name + ": " + what);
    };
    if (d.declared_genus != entry.genus) fail("genus differs from manifest");
    if (d.curve_names != entry.curves) fail("curve labels differ from manifest");

    json exp = json::parse(entry.expected_json);
    auto curve = [&](const json& name) {
        int c = d.curve_index(name.get<std::string>());
        if (c < 0) fail("expected value names unknown curve " + name.get<std::string>());
        return c;
    };
    if (exp.contains("intersections"))
        for (const auto& it : exp.at("intersections")) {
            int a = curve(it.at("curves").at(0)), b = curve(it.at("curves").at(1));
            int got = d.crossing_free() ? 0 : std::popcount(d.pair_mask(a, b));
            if (got != it.at("value").get<int>())
                fail("pair crossing count mismatch for " + it.at("curves").dump());
        }
    if (exp.contains("bigon_free_pairs"))
        for (const auto& pr : exp.at("bigon_free_pairs"))
            if (!diagram::detect_bigons(d, curve(pr.at(0)), curve(pr.at(1))).empty())
                fail("pair " + pr.dump() + " is not bigon-free");
    if (exp.contains("bigons"))
        for (const auto& it : exp.at("bigons")) {
            auto got = diagram::detect_bigons(d, curve(it.at("curves").at(0)),
                                              curve(it.at("curves").at(1)));
            if (static_cast<int>(got.size()) != it.at("value").get<int>())
                fail("bigon count mismatch");
        }
    if (exp.contains("essential_curves") && !d.crossing_free())
        for (const auto& c : exp.at("essential_curves"))
            if (!diagram::is_essential_curve(d, curve(c))) fail("curve not essential");
    if (exp.contains("faces")) {
        auto want = exp.at("faces");
        if (static_cast<int>(d.faces().size()) != want.at("count").get<int>())
            fail("face count mismatch");
        std::vector<int> degrees;
        for (const auto& fc : d.faces()) degrees.push_back(fc.degree());
        std::sort(degrees.begin(), degrees.end());
        std::vector<int> want_deg = want.at("degrees").get<std::vector<int>>();
        std::sort(want_deg.begin(), want_deg.end());
        if (degrees != want_deg) fail("face degrees mismatch");
    }
    if (exp.contains("bicorn_count")) {
        auto want = exp.at("bicorn_count");
        auto all = bicorn::enumerate_bicorns(d, curve(want.at("pair").at(0)),
                                             curve(want.at("pair").at(1)));
        if (static_cast<int>(all.size()) != want.at("value").get<int>())
            fail("bicorn count mismatch");
    }
    if (exp.contains("proper_bicorns")) {
        int proper = 0;
        for (const auto& g : bicorn::enumerate_bicorns(d, 0, 1))
            if (g.kind == bicorn::Bicorn::Kind::Proper) ++proper;
        if (proper != exp.at("proper_bicorns").at("value").get<int>())
            fail("proper bicorn count mismatch");
    }
    if (exp.contains("configurations")) {
        int same = 0, opp = 0;
        for (const auto& g : bicorn::enumerate_bicorns(d, 0, 1)) {
            auto c = bicorn::configuration(d, g);
            if (c == bicorn::Configuration::Same) ++same;
            if (c == bicorn::Configuration::Opposite) ++opp;
        }
        if (same != exp.at("configurations").at("same").get<int>() ||
            opp != exp.at("configurations").at("opposite").get<int>())
            fail("configuration counts mismatch");
    }
    if (exp.contains("default_path_steps")) {
        auto path = bicorn::bicorn_path(d, 0, 1);
        if (static_cast<int>(path.steps.size()) !=
            exp.at("default_path_steps").at("value").get<int>())
            fail("default path length mismatch");
    }
    if (exp.contains("slim")) {
        int witnesses = 0, disjoint = 0;
        for (const auto& g : bicorn::enumerate_bicorns(d, 0, 1)) {
            auto res = bicorn::slim_witness(d, g, 2);
            if (res.status == bicorn::SlimResult::Status::Witness) ++witnesses;
            if (res.status == bicorn::SlimResult::Status::Disjoint) ++disjoint;
            if (res.status == bicorn::SlimResult::Status::NoWitness)
                fail("slim witness missing on a hypothesis-satisfying bicorn");
        }
        if (witnesses < exp.at("slim").at("witnesses_at_least").get<int>())
            fail("fewer slim witnesses than expected");
        if (disjoint < exp.at("slim").at("disjoint_at_least").get<int>())
            fail("fewer disjoint bicorns than expected");
    }
    if (exp.contains("threshold_applicable")) {
        int third = curve(exp.at("threshold_applicable").at("third"));
        auto path = bicorn::bicorn_path(d, 0, 1);
        auto ev = bicorn::lemma18_evidence(d, path, third);
        if (ev.applicable != exp.at("threshold_applicable").at("value").get<bool>())
            fail("threshold applicability mismatch");
    }
    if (exp.contains("subsurface")) {
        auto want = exp.at("subsurface");
        std::vector<CurveId> boundary;
        for (const auto& b : want.at("boundary")) boundary.push_back(curve(b));
        int sides = projection::complement_side_count(d, boundary);
        if (want.contains("sides") && sides != want.at("sides").get<int>())
            fail("complement side count mismatch");
        if (want.contains("side0")) {
            auto y = projection::make_subsurface(d, boundary, 0);
            if (y.genus != want.at("side0").at("genus").get<int>() ||
                y.boundary_components != want.at("side0").at("boundary_components").get<int>() ||
                y.xi != want.at("side0").at("xi").get<int>())
                fail("side-0 topology mismatch");
        }
        if (want.contains("piA_arcs_side0")) {
            auto y = projection::make_subsurface(d, boundary, 0);
            for (auto it = want.at("piA_arcs_side0").begin();
                 it != want.at("piA_arcs_side0").end(); ++it) {
                auto pa = projection::pi_A(y, curve(json(it.key())));
                if (static_cast<int>(pa.arcs.size()) != it.value().get<int>())
                    fail("pi_A arc count mismatch for curve " + it.key());
            }
        }
        if (want.contains("cross_component_arc")) {
            bool found = false;
            for (int side = 0; side < sides; ++side) {
                auto y = projection::make_subsurface(d, boundary, side);
                if (y.xi < 1) continue;
                for (const auto& arc : projection::pi_A(y, 0).arcs)
                    if (!arc.whole_curve && arc.from_boundary != arc.to_boundary) found = true;
            }
            if (found != want.at("cross_component_arc").get<bool>())
                fail("cross-component arc expectation mismatch");
        }
    }
    (void)fixture_dir;
}

// ---------------------------------------------------------------------------
// Individual suites
// ---------------------------------------------------------------------------

namespace {

std::vector<ManifestEntry> validated_manifest(const SuiteOptions& opt) {
    auto entries = load_manifest(opt.fixture_dir);
    for (const auto& e : entries) validate_fixture_expectations(opt.fixture_dir, e);
    return entries;
}

ManifestEntry find_entry(const std::vector<ManifestEntry>& entries, const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw std::runtime_error("manifest has no fixture named " + name);
}

SuiteReport suite_ledger(const SuiteOptions&) {
    SuiteReport rep;
    rep.suite = "ledger";
    bicorn::BoundLedger def;
    if (bicorn::compose_bound(def) != 44) violate(rep, "default ledger does not compose to 44");
    if (def.threshold != def.hausdorff_radius + def.filling_min)
        violate(rep, "threshold is not hausdorff_radius + filling_min");
    if (def.segment_cap != 2 * def.threshold)
        violate(rep, "segment cap is not twice the threshold");
    auto derived = bicorn::BoundLedger::derive(14, 4);
    if (derived.threshold != 18 || derived.segment_cap != 36 ||
        bicorn::compose_bound(derived) != 44)
        violate(rep, "derivation from (14, 4) does not reproduce 18, 36, 44");
    note(rep, "theorem_bound", bicorn::compose_bound(def));
    note(rep, "threshold", def.threshold);
    note(rep, "segment_cap", def.segment_cap);
    note(rep, "lemma18_bound", def.lemma18_bound);
    note(rep, "forcing_gap", def.forcing_gap);
    return rep;
}

SuiteReport suite_farey(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "farey-bgit";
    farey::SweepOptions so;
    so.max_denominator = opt.farey_max_denominator;
    so.threads = opt.threads;
    farey::SweepReport sweep = farey::bgit_sweep(so);
    rep.conventions.emplace_back("projection", sweep.projection_convention);
    rep.conventions.emplace_back("universe", sweep.universe_convention);
    rep.conventions.emplace_back("search", sweep.box_convention);
    note(rep, "max_denominator", sweep.max_denominator);
    note(rep, "universe_size", sweep.universe_size);
    note(rep, "admissible_triples", static_cast<std::int64_t>(sweep.admissible_triples));
    note(rep, "checked_triples", static_cast<std::int64_t>(sweep.checked_triples));
    note(rep, "avoidable_triples", static_cast<std::int64_t>(sweep.avoidable_triples));
    note(rep, "forcing_triples", static_cast<std::int64_t>(sweep.forcing_triples));
    note(rep, "max_dv_avoidable", sweep.max_dv_avoidable);
    if (sweep.checked_triples != sweep.admissible_triples)
        violate(rep, "checked triple count differs from the admissible count");
    for (const auto& v : sweep.violations)
        violate(rep, v.kind + " violation at pivot " + v.pivot.str() + " u=" + v.u.str() +
                         " w=" + v.w.str() + " dv=" + std::to_string(v.dv));

    // cross-check the geodesic enumeration against the exhaustive DFS oracle
    // on a small deterministic sample
    std::int64_t oracle_pairs = 0;
    std::vector<farey::Slope> sample = farey::slope_universe(4);
    for (std::size_t i = 0; i < sample.size(); i += 7)
        for (std::size_t j = i + 3; j < sample.size(); j += 11) {
            auto gs = farey::enumerate_geodesics(sample[i], sample[j]);
            auto oracle = oracles::simple_paths(sample[i], sample[j],
                                                static_cast<int>(gs.front().vertices.size()) - 1,
                                                20);
            if (gs.size() != oracle.size())
                violate(rep, "geodesic count between " + sample[i].str() + " and " +
                                 sample[j].str() + " differs from the DFS oracle");
            ++oracle_pairs;
        }
    note(rep, "geodesic_oracle_pairs", oracle_pairs);
    return rep;
}

SuiteReport suite_bicorn_paths(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "bicorn-paths";
    auto entries = validated_manifest(opt);
    note(rep, "fixtures", static_cast<std::int64_t>(entries.size()));

    std::int64_t paths = 0, max_steps = 0, oracle_checked = 0, bigon_scans = 0;
    auto run_paths = [&](const Diagram& d, bool all_strategies) {
        std::vector<bicorn::Strategy> strategies;
        if (all_strategies && !d.crossing_free()) {
            for (int i = 0; i < d.crossing_count(); ++i) {
                if (!(d.pair_mask(0, 1) >> i & 1)) continue;
                for (int dir : {+1, -1})
                    for (auto side : {bicorn::Strategy::AlphaSide::Auto,
                                      bicorn::Strategy::AlphaSide::Positive,
                                      bicorn::Strategy::AlphaSide::Negative}) {
                        bicorn::Strategy st;
                        st.start_file_id = d.crossings[i].file_id;
                        st.beta_direction = dir;
                        st.alpha_side = side;
                        strategies.push_back(st);
                    }
            }
        }
        if (strategies.empty()) strategies.push_back(bicorn::Strategy{});
        for (const auto& st : strategies) {
            auto path = bicorn::bicorn_path(d, 0, 1, st);
            ++paths;
            max_steps = std::max<std::int64_t>(max_steps,
                                               static_cast<std::int64_t>(path.steps.size()));
            auto pc = bicorn::check_path_invariants(d, path);
            if (!pc.ok) violate(rep, "path invariant failed: " + pc.what);
        }
    };
    auto run_oracles = [&](const Diagram& d) {
        if (d.crossing_free()) return;
        if (d.crossing_count() <= opt.oracle_max_crossings) {
            for (CurveId a = 0; a < d.curve_count(); ++a)
                for (CurveId b = a + 1; b < d.curve_count(); ++b) {
                    if (d.pair_mask(a, b) == 0) continue;
                    if (!diagram::detect_bigons(d, a, b).empty()) continue;
                    if (bicorn::enumerate_bicorns(d, a, b) !=
                        oracles::brute_force_bicorns(d, a, b))
                        violate(rep, "bicorn enumeration differs from the brute-force oracle");
                    ++oracle_checked;
                }
        }
        if (d.curve_count() == 2) {
            // on a two-curve diagram the complement regions are the faces,
            // so the merged-region bigon test must agree with the literal
            // degree-2 face scan
            auto bigons = diagram::detect_bigons(d, 0, 1);
            auto faces = oracles::degree_two_face_scan(d, 0, 1);
            if (bigons.size() != faces.size())
                violate(rep, "bigon detection differs from the degree-2 face scan");
            ++bigon_scans;
        }
    };

    for (const auto& e : entries) {
        Diagram d = load_fixture(opt.fixture_dir, e);
        run_oracles(d);
        if (d.curve_count() != 2) continue;
        if (!d.crossing_free() && !diagram::detect_bigons(d, 0, 1).empty()) continue;
        run_paths(d, true);
    }

    fuzz::FuzzOptions fo;
    fo.seed = opt.seed;
    fo.max_pair_crossings = opt.fuzz_max_crossings;
    fuzz::FuzzStats stats;
    auto diagrams = fuzz::fuzz_diagrams(fo, opt.fuzz_count, &stats);
    note(rep, "fuzz_attempts", stats.attempts);
    note(rep, "fuzz_accepted", stats.accepted);
    for (const auto& d : diagrams) {
        run_paths(d, false);
        run_oracles(d);
        // serializer round trip on every fuzzed diagram
        auto r = diagram::parse_diagram(diagram::serialize(d));
        if (!r.ok() || diagram::serialize(*r.diagram) != diagram::serialize(d))
            violate(rep, "serializer round trip failed");
    }
    note(rep, "paths_checked", paths);
    note(rep, "max_path_steps", max_steps);
    note(rep, "oracle_pairs_checked", oracle_checked);
    note(rep, "bigon_scans", bigon_scans);
    return rep;
}

SuiteReport suite_slim(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "slim-triangles";
    auto entries = validated_manifest(opt);
    std::int64_t witnesses = 0, disjoint = 0, below = 0, bicorns = 0;

    auto sweep_triple = [&](const Diagram& d) {
        const std::array<std::array<CurveId, 3>, 3> roles = {
            std::array<CurveId, 3>{0, 1, 2}, std::array<CurveId, 3>{0, 2, 1},
            std::array<CurveId, 3>{1, 2, 0}};
        for (const auto& role : roles) {
            if (d.pair_mask(role[0], role[1]) == 0) continue;
            for (const auto& g : bicorn::enumerate_bicorns(d, role[0], role[1])) {
                ++bicorns;
                auto res = bicorn::slim_witness(d, g, role[2]);
                switch (res.status) {
                    case bicorn::SlimResult::Status::Witness:
                        ++witnesses;
                        if (res.witness->crossings_with_g > 1)
                            violate(rep, "surgered bicorn crosses its source more than once");
                        if (!bicorn::is_essential(d, res.witness->new_bicorn))
                            violate(rep, "surgered bicorn is not essential");
                        break;
                    case bicorn::SlimResult::Status::Disjoint: ++disjoint; break;
                    case bicorn::SlimResult::Status::BelowThreshold: ++below; break;
                    case bicorn::SlimResult::Status::NoWitness:
                        violate(rep, "no slim witness for a bicorn crossing the third curve " +
                                         std::to_string(res.crossings_with_third) + " times");
                        break;
                }
            }
        }
    };

    sweep_triple(load_fixture(opt.fixture_dir, find_entry(entries, "triple_slim")));

    fuzz::FuzzOptions fo;
    fo.seed = opt.seed + 0x511;
    fo.curves = 3;
    fo.max_pair_crossings = opt.triple_max_pair;
    fuzz::FuzzStats stats;
    auto triples = fuzz::fuzz_diagrams(fo, opt.triple_count, &stats);
    for (const auto& d : triples) sweep_triple(d);

    note(rep, "triples", static_cast<std::int64_t>(triples.size()) + 1);
    note(rep, "bicorns_checked", bicorns);
    note(rep, "witnesses", witnesses);
    note(rep, "disjoint", disjoint);
    note(rep, "below_threshold", below);
    return rep;
}

SuiteReport suite_lemma18(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "lemma18";
    auto entries = validated_manifest(opt);
    std::int64_t applicable = 0, inapplicable = 0;

    auto check_triple = [&](const Diagram& d) {
        auto path = bicorn::bicorn_path(d, 0, 1);
        auto ev = bicorn::lemma18_evidence(d, path, 2);
        if (!ev.applicable) {
            if (ev.offending_step < 0)
                violate(rep, "applicable path without surgery evidence");
            else
                ++inapplicable;
            return;
        }
        ++applicable;
        if (!ev.deltas_disjoint) violate(rep, "extracted subarcs are not disjoint");
        if (ev.k1 - ev.k > 1) violate(rep, "surgery steps are not adjacent");
        if (!bicorn::is_valid(d, ev.surgered_i) || !bicorn::is_valid(d, ev.surgered_j))
            violate(rep, "surgered bicorns are invalid");
        if (bicorn::bicorn_crossings(d, ev.surgered_i, path.steps[ev.k]) > 1 ||
            bicorn::bicorn_crossings(d, ev.surgered_j, path.steps[ev.k1]) > 1)
            violate(rep, "surgered bicorn crosses its path step more than once");
    };

    check_triple(load_fixture(opt.fixture_dir, find_entry(entries, "triple_threshold")));

    fuzz::FuzzOptions fo;
    fo.seed = opt.seed + 0x18;
    fo.curves = 3;
    fo.pair_counts = {3, 6, 6};
    fuzz::FuzzStats stats;
    auto triples = fuzz::fuzz_diagrams(fo, std::max(1, opt.triple_count / 2), &stats);
    for (const auto& d : triples) check_triple(d);

    note(rep, "triples", static_cast<std::int64_t>(triples.size()) + 1);
    note(rep, "applicable", applicable);
    note(rep, "inapplicable", inapplicable);
    if (applicable < 1) violate(rep, "no applicable case was exercised");
    return rep;
}

SuiteReport suite_projections(const SuiteOptions& opt) {
    SuiteReport rep;
    rep.suite = "projections";
    auto entries = validated_manifest(opt);
    std::int64_t arc_cases = 0, pi0_cases = 0, sides_checked = 0;
    std::map<std::string, std::int64_t> methods;

    auto drive_host = [&](const Diagram& d, const std::vector<CurveId>& boundary,
                          const std::vector<CurveId>& projectable) {
        int sides = projection::complement_side_count(d, boundary);
        for (int side = 0; side < sides; ++side) {
            projection::SubsurfaceSpec y = projection::make_subsurface(d, boundary, side);
            if (y.xi < 1) continue;
            ++sides_checked;
            if (projectable.size() == 2) {
                auto rep1 = projection::check_arc_lipschitz(y, projectable[0], projectable[1]);
                if (rep1.hypothesis_ok) {
                    ++arc_cases;
                    if (!rep1.witness_found)
                        violate(rep, "no disjoint projected-arc witness for disjoint curves");
                }
            }
            std::vector<projection::ProjectedArc> pool;
            for (CurveId c : projectable) {
                auto pa = projection::pi_A(y, c);
                pool.insert(pool.end(), pa.arcs.begin(), pa.arcs.end());
            }
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (!pool[i].whole_curve) {
                    auto q = projection::pi_0(y, pool[i]);
                    if (q.essential_count < 1)
                        violate(rep, "pi_0 returned no essential curve for an essential arc");
                }
                for (std::size_t j = i; j < pool.size(); ++j) {
                    auto rep2 = projection::check_pi0_lipschitz(y, pool[i], pool[j]);
                    if (!rep2.hypothesis_ok) continue;
                    ++pi0_cases;
                    ++methods[rep2.method];
                    if (!rep2.ok)
                        violate(rep, "pi_0 lipschitz chain not found (method " + rep2.method +
                                         ")");
                }
            }
        }
    };

    {
        Diagram d = load_fixture(opt.fixture_dir, find_entry(entries, "separated_host"));
        drive_host(d, {2}, {0, 1});
    }
    {
        Diagram d = load_fixture(opt.fixture_dir, find_entry(entries, "two_boundary_host"));
        drive_host(d, {1, 2}, {0});
    }

    fuzz::FuzzOptions fo;
    fo.curves = 3;
    fo.min_pair_crossings = 0;
    int hosts = 0;
    for (int k = 0; k < opt.projection_hosts; ++k) {
        fo.seed = opt.seed + 0xA0 + k;
        fuzz::Rng rng{fo.seed};
        fo.pair_counts = {0, 2 + k % 4, 2 + k % 3};  // disjoint pair, both cutting C
        for (int att = 0; att < 50000; ++att) {
            auto maybe = fuzz::try_random_diagram(rng, fo);
            if (!maybe) continue;
            ++hosts;
            drive_host(*maybe, {2}, {0, 1});
            break;
        }
    }
    note(rep, "fixture_hosts", 2);
    note(rep, "fuzz_hosts", hosts);
    note(rep, "sides_checked", sides_checked);
    note(rep, "arc_lipschitz_cases", arc_cases);
    note(rep, "pi0_lipschitz_cases", pi0_cases);
    for (const auto& [method, count] : methods) note(rep, "pi0_method_" + method, count);
    if (arc_cases < 1) violate(rep, "no arc-lipschitz case was exercised");
    if (pi0_cases < 1) violate(rep, "no pi0-lipschitz case was exercised");
    return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dispatch and reports
// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ledger",        "farey-bgit", "bicorn-paths",
                                                "slim-triangles", "lemma18",    "projections"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    Timer timer;
    SuiteReport rep;
    if (name == "ledger")
        rep = suite_ledger(opt);
    else if (name == "farey-bgit")
        rep = suite_farey(opt);
    else if (name == "bicorn-paths")
        rep = suite_bicorn_paths(opt);
    else if (name == "slim-triangles")
        rep = suite_slim(opt);
    else if (name == "lemma18")
        rep = suite_lemma18(opt);
    else if (name == "projections")
        rep = suite_projections(opt);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    std::sort(rep.violations.begin(), rep.violations.end());
    rep.ok = rep.violations.empty();
    rep.wall_seconds = timer.seconds();
    if (!opt.report_dir.empty()) {
        std::filesystem::create_directories(opt.report_dir);
        std::ofstream js(opt.report_dir + "/" + rep.suite + ".json");
        js << rep.to_json(opt.timing);
        std::ofstream cs(opt.report_dir + "/" + rep.suite + ".csv");
        cs << rep.to_csv();
    }
    return rep;
}

std::vector<SuiteReport> run_all(const SuiteOptions& opt) {
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

std::string SuiteReport::to_json(bool with_timing) const {
    json j;
    j["suite"] = suite;
    j["ok"] = ok;
    json conv = json::object();
    for (const auto& [k, v] : conventions) conv[k] = v;
    j["conventions"] = conv;
    json st = json::object();
    for (const auto& [k, v] : stats) st[k] = v;
    j["stats"] = st;
    j["violations"] = violations;
    if (with_timing) j["wall_seconds"] = wall_seconds;
    return j.dump(2) + "\n";
}

std::string SuiteReport::to_csv() const {
    std::ostringstream os;
    os << "suite,key,value\n";
    for (const auto& [k, v] : stats) os << suite << ',' << k << ',' << v << "\n";
    os << suite << ",violations," << violations.size() << "\n";
    os << suite << ",ok," << (ok ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace cgt::verify
