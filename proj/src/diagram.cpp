#include "cgt/diagram.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cgt::diagram {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

int Diagram::curve_index(std::string_view name) const {
    for (int i = 0; i < curve_count(); ++i)
        if (curve_names[i] == name) return i;
    return -1;
}

std::uint64_t Diagram::pair_mask(CurveId a, CurveId b) const {
    std::uint64_t m = 0;
    for (int i = 0; i < crossing_count(); ++i) {
        const Crossing& x = crossings[i];
        if ((x.x_curve == a && x.y_curve == b) || (x.x_curve == b && x.y_curve == a))
            m |= 1ULL << i;
    }
    return m;
}

std::uint64_t Diagram::curve_mask(CurveId c) const {
    std::uint64_t m = 0;
    for (int i = 0; i < crossing_count(); ++i)
        if (crossings[i].x_curve == c || crossings[i].y_curve == c) m |= 1ULL << i;
    return m;
}

CrossingId Diagram::crossing_by_file_id(long id) const {
    for (int i = 0; i < crossing_count(); ++i)
        if (crossings[i].file_id == id) return i;
    return -1;
}

void Diagram::finalize(std::vector<Violation>& out) {
    const int V = crossing_count();
    const int C = curve_count();

    if (V > kMaxCrossings) {
        out.push_back({"diagram has " + std::to_string(V) + " crossings; limit is " +
                       std::to_string(kMaxCrossings)});
        return;
    }

    // Visit table: each crossing must be visited exactly once by each strand.
    visit_pos_.assign(V, {-1, -1});
    bool visits_ok = true;
    for (CurveId c = 0; c < C; ++c) {
        for (int pos = 0; pos < static_cast<int>(cycles[c].size()); ++pos) {
            CrossingId x = cycles[c][pos];
            int role = (crossings[x].x_curve == c) ? 0 : (crossings[x].y_curve == c ? 1 : -1);
            if (role < 0) {
                out.push_back({"cycle of curve " + curve_names[c] + " visits crossing " +
                               std::to_string(crossings[x].file_id) +
                               " which does not involve that curve"});
                visits_ok = false;
                continue;
            }
            if (visit_pos_[x][role] != -1) {
                out.push_back({"curve " + curve_names[c] + " visits crossing " +
                               std::to_string(crossings[x].file_id) +
                               " more than once (curves must be simple)"});
                visits_ok = false;
                continue;
            }
            visit_pos_[x][role] = pos;
        }
    }
    for (CrossingId x = 0; x < V; ++x) {
        for (int role = 0; role < 2; ++role) {
            if (visit_pos_[x][role] == -1) {
                CurveId c = role == 0 ? crossings[x].x_curve : crossings[x].y_curve;
                out.push_back({"crossing " + std::to_string(crossings[x].file_id) +
                               " is never visited by curve " + curve_names[c]});
                visits_ok = false;
            }
        }
    }
    if (!visits_ok) return;

    if (V == 0) {
        // Disjoint curves; no ribbon structure to build.  Accepted for
        // two-curve diagrams (the degenerate bicorn path case).
        if (C != 2)
            out.push_back({"a crossing-free diagram must have exactly two curves"});
        if (declared_genus < 1)
            out.push_back({"a crossing-free diagram needs declared genus >= 1"});
        computed_genus_ = declared_genus;
        return;
    }

    for (CurveId c = 0; c < C; ++c) {
        if (cycles[c].empty())
            out.push_back({"curve " + curve_names[c] + " has no crossings but the diagram is "
                           "not crossing-free (disconnected diagram)"});
    }
    if (!out.empty()) return;

    // Edges: one per consecutive visit pair along each curve.
    edges_.clear();
    edge_start_.assign(C, 0);
    opposite_.assign(4 * V, -1);
    edge_of_dart_.assign(4 * V, -1);
    for (CurveId c = 0; c < C; ++c) {
        edge_start_[c] = static_cast<int>(edges_.size());
        const auto& cyc = cycles[c];
        const int m = static_cast<int>(cyc.size());
        for (int t = 0; t < m; ++t) {
            CrossingId a = cyc[t];
            CrossingId b = cyc[(t + 1) % m];
            Edge e;
            e.curve = c;
            e.seq = t;
            e.from = a;
            e.to = b;
            e.dart_out = dart_at(a, curve_is_x(c, a) ? x_out_slot(a) : y_out_slot(a));
            e.dart_in = dart_at(b, curve_is_x(c, b) ? x_in_slot(b) : y_in_slot(b));
            int idx = static_cast<int>(edges_.size());
            edges_.push_back(e);
            opposite_[e.dart_out] = e.dart_in;
            opposite_[e.dart_in] = e.dart_out;
            edge_of_dart_[e.dart_out] = idx;
            edge_of_dart_[e.dart_in] = idx;
        }
    }
    for (Dart d = 0; d < 4 * V; ++d) {
        if (opposite_[d] == -1) {
            out.push_back({"internal: dart " + std::to_string(d) + " not covered by any edge"});
            return;
        }
    }

    // Connectivity over crossings via edges.
    {
        std::vector<char> seen(V, 0);
        std::vector<CrossingId> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            CrossingId v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                const Edge& e = edges_[edge_of_dart_[dart_at(v, s)]];
                for (CrossingId nb : {e.from, e.to}) {
                    if (!seen[nb]) {
                        seen[nb] = 1;
                        ++visited;
                        stack.push_back(nb);
                    }
                }
            }
        }
        if (visited != V) out.push_back({"diagram is disconnected"});
    }
    if (!out.empty()) return;

    // Faces: orbits of sigma∘iota, sigma = +1 counterclockwise slot step.
    faces_.clear();
    face_of_dart_.assign(4 * V, -1);
    for (Dart d0 = 0; d0 < 4 * V; ++d0) {
        if (face_of_dart_[d0] != -1) continue;
        Face f;
        Dart d = d0;
        do {
            face_of_dart_[d] = static_cast<int>(faces_.size());
            f.darts.push_back(d);
            Dart o = opposite_[d];
            d = 4 * (o / 4) + ((o % 4) + 1) % 4;
        } while (d != d0);
        faces_.push_back(std::move(f));
    }

    // Euler characteristic: V - E + F with E = 2V.
    const int F = static_cast<int>(faces_.size());
    const int chi = V - 2 * V + F;
    if (chi % 2 != 0) {
        out.push_back({"internal: odd Euler characteristic"});
        return;
    }
    computed_genus_ = (2 - chi) / 2;
    if (computed_genus_ != declared_genus)
        out.push_back({"Euler characteristic check failed: faces give genus " +
                       std::to_string(computed_genus_) + " but the header declares genus " +
                       std::to_string(declared_genus)});
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct RawCrossing {
    long id;
    std::string x, y;
    int sign;
    int line;
};

struct RawCycle {
    std::string curve;
    std::vector<std::pair<long, int>> visits;  // (crossing file id, slot 0|1)
    int line;
};

struct RawDiagram {
    std::optional<int> genus;
    std::vector<std::string> curves;
    bool multicurve = false;
    std::vector<RawCrossing> crossings;
    std::vector<RawCycle> cycles;
};

bool parse_json_raw(std::string_view text, RawDiagram& raw, std::vector<Violation>& errors) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        errors.push_back({std::string("JSON parse error: ") + e.what()});
        return false;
    }
    try {
        if (j.contains("genus")) raw.genus = j.at("genus").get<int>();
        if (j.contains("curves"))
            for (const auto& c : j.at("curves")) raw.curves.push_back(c.get<std::string>());
        if (j.contains("flags"))
            for (const auto& f : j.at("flags"))
                if (f.get<std::string>() == "multicurve") raw.multicurve = true;
        if (j.contains("x")) {
            for (const auto& xr : j.at("x")) {
                RawCrossing rc;
                rc.id = xr.at("id").get<long>();
                rc.x = xr.at("curves").at(0).get<std::string>();
                rc.y = xr.at("curves").at(1).get<std::string>();
                rc.sign = xr.at("sign").get<int>();
                rc.line = -1;
                raw.crossings.push_back(rc);
            }
        }
        if (j.contains("cycle")) {
            for (auto it = j.at("cycle").begin(); it != j.at("cycle").end(); ++it) {
                RawCycle cy;
                cy.curve = it.key();
                cy.line = -1;
                for (const auto& v : it.value()) {
                    std::string s = v.get<std::string>();
                    auto colon = s.find(':');
                    if (colon == std::string::npos) {
                        errors.push_back({"bad cycle entry '" + s + "' for curve " + cy.curve});
                        continue;
                    }
                    cy.visits.emplace_back(std::stol(s.substr(0, colon)),
                                           std::stoi(s.substr(colon + 1)));
                }
                raw.cycles.push_back(std::move(cy));
            }
        }
    } catch (const std::exception& e) {
        errors.push_back({std::string("JSON field error: ") + e.what()});
        return false;
    }
    return true;
}

bool parse_text_raw(std::string_view text, RawDiagram& raw, std::vector<Violation>& errors) {
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "genus") {
            if (toks.size() != 2) {
                errors.push_back({"genus line needs one integer", lineno});
                continue;
            }
            if (raw.genus) errors.push_back({"duplicate genus line", lineno});
            try {
                raw.genus = std::stoi(toks[1]);
            } catch (...) {
                errors.push_back({"bad genus value '" + toks[1] + "'", lineno});
            }
        } else if (head == "curves") {
            for (std::size_t i = 1; i < toks.size(); ++i) raw.curves.push_back(toks[i]);
        } else if (head == "flags") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                if (toks[i] == "multicurve") raw.multicurve = true;
        } else if (head == "x") {
            if (toks.size() != 5) {
                errors.push_back({"crossing line needs: x <id> <curveX> <curveY> <sign>", lineno});
                continue;
            }
            RawCrossing rc;
            try {
                rc.id = std::stol(toks[1]);
                rc.x = toks[2];
                rc.y = toks[3];
                rc.sign = std::stoi(toks[4]);
            } catch (...) {
                errors.push_back({"bad crossing fields", lineno});
                continue;
            }
            rc.line = lineno;
            raw.crossings.push_back(rc);
        } else if (head == "cycle") {
            if (toks.size() < 2) {
                errors.push_back({"cycle line needs a curve label", lineno});
                continue;
            }
            RawCycle cy;
            cy.curve = toks[1];
            cy.line = lineno;
            bool bad = false;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto colon = toks[i].find(':');
                if (colon == std::string::npos) {
                    errors.push_back({"bad visit '" + toks[i] + "' (expected id:slot)", lineno});
                    bad = true;
                    break;
                }
                try {
                    cy.visits.emplace_back(std::stol(toks[i].substr(0, colon)),
                                           std::stoi(toks[i].substr(colon + 1)));
                } catch (...) {
                    errors.push_back({"bad visit '" + toks[i] + "'", lineno});
                    bad = true;
                    break;
                }
            }
            if (!bad) raw.cycles.push_back(std::move(cy));
        } else {
            errors.push_back({"unknown directive '" + head + "'", lineno});
        }
    }
    return true;
}

}  // namespace

ParseResult parse_diagram(std::string_view text, const ParseOptions& opt) {
    ParseResult res;
    RawDiagram raw;

    std::size_t first = text.find_first_not_of(" \t\r\n");
    bool is_json = first != std::string_view::npos && text[first] == '{';
    if (is_json) {
        if (!parse_json_raw(text, raw, res.errors)) return res;
    } else {
        parse_text_raw(text, raw, res.errors);
    }

    if (!raw.genus) res.errors.push_back({"missing genus header"});
    if (raw.curves.size() < 2) res.errors.push_back({"need at least two curves"});
    {
        std::vector<std::string> sorted = raw.curves;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            res.errors.push_back({"duplicate curve label"});
    }
    if (static_cast<int>(raw.curves.size()) > opt.max_curves && !raw.multicurve)
        res.errors.push_back({"more than " + std::to_string(opt.max_curves) +
                              " curves requires the multicurve flag"});
    if (raw.genus && *raw.genus < 0) res.errors.push_back({"genus must be non-negative"});

    Diagram d;
    d.declared_genus = raw.genus.value_or(0);
    d.curve_names = raw.curves;
    d.multicurve_flag = raw.multicurve;

    std::map<long, CrossingId> by_id;
    for (const RawCrossing& rc : raw.crossings) {
        Crossing x;
        x.file_id = rc.id;
        x.x_curve = d.curve_index(rc.x);
        x.y_curve = d.curve_index(rc.y);
        x.sign = rc.sign;
        if (x.x_curve < 0)
            res.errors.push_back({"crossing " + std::to_string(rc.id) + ": unknown curve '" +
                                  rc.x + "'", rc.line});
        if (x.y_curve < 0)
            res.errors.push_back({"crossing " + std::to_string(rc.id) + ": unknown curve '" +
                                  rc.y + "'", rc.line});
        if (x.x_curve >= 0 && x.x_curve == x.y_curve)
            res.errors.push_back({"crossing " + std::to_string(rc.id) +
                                  ": self-crossing (both strands on curve '" + rc.x +
                                  "'); curves must be simple", rc.line});
        if (rc.sign != 1 && rc.sign != -1)
            res.errors.push_back({"crossing " + std::to_string(rc.id) + ": sign must be 1 or -1",
                                  rc.line});
        if (by_id.count(rc.id))
            res.errors.push_back({"duplicate crossing id " + std::to_string(rc.id), rc.line});
        else {
            by_id[rc.id] = static_cast<CrossingId>(d.crossings.size());
            d.crossings.push_back(x);
        }
    }

    d.cycles.assign(d.curve_names.size(), {});
    std::vector<bool> cycle_seen(d.curve_names.size(), false);
    for (const RawCycle& cy : raw.cycles) {
        int c = d.curve_index(cy.curve);
        if (c < 0) {
            res.errors.push_back({"cycle for unknown curve '" + cy.curve + "'", cy.line});
            continue;
        }
        if (cycle_seen[c]) {
            res.errors.push_back({"duplicate cycle for curve '" + cy.curve + "'", cy.line});
            continue;
        }
        cycle_seen[c] = true;
        for (auto [id, slot] : cy.visits) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                res.errors.push_back({"cycle of " + cy.curve + " references unknown crossing " +
                                      std::to_string(id), cy.line});
                continue;
            }
            CrossingId x = it->second;
            if (slot != 0 && slot != 1) {
                res.errors.push_back({"cycle of " + cy.curve + ": slot must be 0 or 1", cy.line});
                continue;
            }
            CurveId expect = slot == 0 ? d.crossings[x].x_curve : d.crossings[x].y_curve;
            if (expect != c) {
                res.errors.push_back({"cycle of " + cy.curve + ": crossing " + std::to_string(id) +
                                      " slot " + std::to_string(slot) +
                                      " belongs to a different curve", cy.line});
                continue;
            }
            d.cycles[c].push_back(x);
        }
    }
    for (std::size_t c = 0; c < d.curve_names.size(); ++c)
        if (!cycle_seen[c] && !raw.crossings.empty())
            res.errors.push_back({"missing cycle line for curve '" + d.curve_names[c] + "'"});

    if (!res.errors.empty()) return res;

    d.finalize(res.errors);
    if (!res.errors.empty()) return res;
    res.diagram = std::move(d);
    return res;
}

Diagram parse_diagram_or_throw(std::string_view text, const ParseOptions& opt) {
    ParseResult r = parse_diagram(text, opt);
    if (!r.ok()) {
        std::string msg = "invalid diagram:";
        for (const auto& v : r.errors) {
            msg += "\n  ";
            if (v.line >= 0) msg += "line " + std::to_string(v.line) + ": ";
            msg += v.message;
        }
        throw std::runtime_error(msg);
    }
    return *std::move(r.diagram);
}

ParseResult load_diagram(const std::string& path, const ParseOptions& opt) {
    std::ifstream f(path);
    if (!f) {
        ParseResult r;
        r.errors.push_back({"cannot open '" + path + "'"});
        return r;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_diagram(buf.str(), opt);
}

Diagram load_diagram_or_throw(const std::string& path, const ParseOptions& opt) {
    ParseResult r = load_diagram(path, opt);
    if (!r.ok()) {
        std::string msg = "invalid diagram '" + path + "':";
        for (const auto& v : r.errors) {
            msg += "\n  ";
            if (v.line >= 0) msg += "line " + std::to_string(v.line) + ": ";
            msg += v.message;
        }
        throw std::runtime_error(msg);
    }
    return *std::move(r.diagram);
}

std::string serialize(const Diagram& d) {
    std::ostringstream os;
    os << "genus " << d.declared_genus << "\n";
    if (d.multicurve_flag) os << "flags multicurve\n";
    os << "curves";
    for (const auto& name : d.curve_names) os << ' ' << name;
    os << "\n";

    std::vector<int> order(d.crossings.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return d.crossings[a].file_id < d.crossings[b].file_id;
    });
    for (int i : order) {
        const Crossing& x = d.crossings[i];
        os << "x " << x.file_id << ' ' << d.curve_names[x.x_curve] << ' '
           << d.curve_names[x.y_curve] << ' ' << x.sign << "\n";
    }
    for (int c = 0; c < d.curve_count(); ++c) {
        os << "cycle " << d.curve_names[c];
        const auto& cyc = d.cycles[c];
        if (!cyc.empty()) {
            // rotate to the smallest (file id, slot) visit
            int best = 0;
            auto key = [&](int pos) {
                CrossingId x = cyc[pos];
                int slot = d.curve_is_x(c, x) ? 0 : 1;
                return std::make_pair(d.crossings[x].file_id, slot);
            };
            for (int pos = 1; pos < static_cast<int>(cyc.size()); ++pos)
                if (key(pos) < key(best)) best = pos;
            for (int k = 0; k < static_cast<int>(cyc.size()); ++k) {
                int pos = (best + k) % static_cast<int>(cyc.size());
                CrossingId x = cyc[pos];
                os << ' ' << d.crossings[x].file_id << ':' << (d.curve_is_x(c, x) ? 0 : 1);
            }
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

RegionSet split_along(const Diagram& d, const std::vector<bool>& edge_is_boundary) {
    RegionSet rs;
    const int F = static_cast<int>(d.faces().size());
    rs.region_of_face.assign(F, -1);

    // Union faces across non-boundary edges.
    std::vector<int> parent(F);
    for (int i = 0; i < F; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const Edge& e : d.edges()) {
        int idx = d.edge_of_dart(e.dart_out);
        if (edge_is_boundary[idx]) continue;
        int fa = find(d.face_of_dart(e.dart_out));
        int fb = find(d.face_of_dart(e.dart_in));
        parent[find(fa)] = find(fb);
    }
    std::map<int, int> root_to_region;
    for (int f = 0; f < F; ++f) {
        int r = find(f);
        auto it = root_to_region.try_emplace(r, static_cast<int>(root_to_region.size())).first;
        rs.region_of_face[f] = it->second;
    }
    rs.regions.resize(root_to_region.size());
    for (int f = 0; f < F; ++f) rs.regions[rs.region_of_face[f]].faces.push_back(f);

    // Interior edges and vertices.
    for (std::size_t ei = 0; ei < d.edges().size(); ++ei) {
        if (edge_is_boundary[ei]) continue;
        const Edge& e = d.edges()[ei];
        rs.regions[rs.region_of_face[d.face_of_dart(e.dart_out)]].interior_edges += 1;
    }
    for (CrossingId v = 0; v < d.crossing_count(); ++v) {
        bool interior = true;
        for (int s = 0; s < 4 && interior; ++s)
            if (edge_is_boundary[d.edge_of_dart(d.dart_at(v, s))]) interior = false;
        if (interior)
            rs.regions[rs.region_of_face[d.face_of_dart(d.dart_at(v, 0))]].interior_vertices += 1;
    }

    // Boundary walks.  A wall dart stands for one side-passage of a boundary
    // edge; the walk traverses the edge to its far end and then rotates
    // around that crossing, passing interior edge-ends (their strands leave
    // into the region and merely touch the walk), until the next boundary
    // edge-end.
    auto next_wall = [&](Dart x) {
        Dart o = d.opposite(x);
        int w = o / 4, s = o % 4;
        do {
            s = (s + 1) % 4;
        } while (!edge_is_boundary[d.edge_of_dart(4 * w + s)]);
        return 4 * w + s;
    };
    std::vector<char> used(4 * d.crossing_count(), 0);
    for (Dart d0 = 0; d0 < 4 * d.crossing_count(); ++d0) {
        if (used[d0] || !edge_is_boundary[d.edge_of_dart(d0)]) continue;
        RegionSet::Walk walk;
        Dart cur = d0;
        do {
            used[cur] = 1;
            walk.wall.push_back(cur);
            cur = next_wall(cur);
        } while (cur != d0);
        int region = rs.region_of_face[d.face_of_dart(d0)];
        rs.regions[region].walks.push_back(std::move(walk));
    }

    for (auto& r : rs.regions)
        r.chi = static_cast<int>(r.faces.size()) - r.interior_edges + r.interior_vertices;
    return rs;
}

std::vector<SideRun> walk_runs(const Diagram& d, const RegionSet::Walk& walk) {
    std::vector<SideRun> runs;
    for (Dart dart : walk.wall) {
        int e = d.edge_of_dart(dart);
        CurveId c = d.edges()[e].curve;
        if (runs.empty() || runs.back().curve != c) runs.push_back(SideRun{c, {}});
        runs.back().edges.push_back(e);
    }
    // merge cyclic wrap-around
    if (runs.size() > 1 && runs.front().curve == runs.back().curve) {
        runs.back().edges.insert(runs.back().edges.end(), runs.front().edges.begin(),
                                 runs.front().edges.end());
        runs.front() = std::move(runs.back());
        runs.pop_back();
    }
    return runs;
}

// ---------------------------------------------------------------------------
// Bigons, intersection number, essentiality
// ---------------------------------------------------------------------------

std::vector<BigonWitness> detect_bigons(const Diagram& d, CurveId c1, CurveId c2) {
    std::vector<BigonWitness> out;
    if (d.crossing_free()) return out;
    std::vector<bool> boundary(d.edges().size(), false);
    for (std::size_t i = 0; i < d.edges().size(); ++i)
        if (d.edges()[i].curve == c1 || d.edges()[i].curve == c2) boundary[i] = true;
    RegionSet rs = split_along(d, boundary);
    for (const auto& r : rs.regions) {
        if (r.chi != 1 || r.walks.size() != 1) continue;
        auto runs = walk_runs(d, r.walks[0]);
        if (runs.size() != 2) continue;
        if ((runs[0].curve == c1 && runs[1].curve == c2) ||
            (runs[0].curve == c2 && runs[1].curve == c1)) {
            BigonWitness w;
            w.faces = r.faces;
            w.side1 = runs[0];
            w.side2 = runs[1];
            out.push_back(std::move(w));
        }
    }
    return out;
}

int intersection_number(const Diagram& d, CurveId c1, CurveId c2) {
    if (!detect_bigons(d, c1, c2).empty())
        throw std::invalid_argument("intersection_number: curves " + d.curve_names[c1] + ", " +
                                    d.curve_names[c2] +
                                    " are not in minimal position (bigon present)");
    return static_cast<int>(std::popcount(d.pair_mask(c1, c2)));
}

bool is_essential_curve(const Diagram& d, const std::vector<int>& curve_edges) {
    std::vector<bool> boundary(d.edges().size(), false);
    for (int e : curve_edges) boundary[e] = true;
    RegionSet rs = split_along(d, boundary);
    for (const auto& r : rs.regions)
        if (r.chi == 1) return false;  // the curve bounds a disk
    return true;
}

bool is_essential_curve(const Diagram& d, CurveId c) {
    std::vector<int> es;
    for (std::size_t i = 0; i < d.edges().size(); ++i)
        if (d.edges()[i].curve == c) es.push_back(static_cast<int>(i));
    return is_essential_curve(d, es);
}

}  // namespace cgt::diagram
