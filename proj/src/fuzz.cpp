#include "cgt/fuzz.hpp"

#include <algorithm>
#include <numeric>

namespace cgt::fuzz {

using diagram::CurveId;
using diagram::Diagram;

namespace {

// Assemble a diagram from per-pair crossing counts and random cyclic visit
// orders; genus is whatever the rotation system produces.
std::optional<Diagram> assemble(Rng& rng, int curves, const std::array<int, 3>& counts) {
    Diagram d;
    if (curves == 2)
        d.curve_names = {"A", "B"};
    else
        d.curve_names = {"A", "B", "C"};

    const std::array<std::pair<CurveId, CurveId>, 3> pair_of = {
        std::make_pair(0, 1), std::make_pair(0, 2), std::make_pair(1, 2)};
    int total = 0;
    for (int p = 0; p < (curves == 2 ? 1 : 3); ++p) {
        for (int k = 0; k < counts[p]; ++k) {
            diagram::Crossing x;
            x.file_id = total++;
            x.x_curve = pair_of[p].first;
            x.y_curve = pair_of[p].second;
            x.sign = rng.below(2) ? +1 : -1;
            d.crossings.push_back(x);
        }
    }
    if (total > diagram::kMaxCrossings) return std::nullopt;

    d.cycles.assign(curves, {});
    for (CurveId c = 0; c < curves; ++c) {
        for (int i = 0; i < total; ++i)
            if (d.crossings[i].x_curve == c || d.crossings[i].y_curve == c)
                d.cycles[c].push_back(i);
        rng.shuffle(d.cycles[c]);
    }

    std::vector<diagram::Violation> errs;
    d.declared_genus = 0;
    d.finalize(errs);
    bool only_euler = !errs.empty();
    for (const auto& v : errs)
        if (v.message.find("Euler characteristic") == std::string::npos) only_euler = false;
    if (!errs.empty() && !only_euler) return std::nullopt;
    if (only_euler) {
        d.declared_genus = d.computed_genus();
        errs.clear();
        d.finalize(errs);
        if (!errs.empty()) return std::nullopt;
    }
    return d;
}

}  // namespace

std::optional<Diagram> try_random_diagram(Rng& rng, const FuzzOptions& opt) {
    std::array<int, 3> counts{0, 0, 0};
    const int pairs = opt.curves == 2 ? 1 : 3;
    for (int p = 0; p < pairs; ++p) {
        counts[p] = opt.pair_counts[p] >= 0
                        ? opt.pair_counts[p]
                        : rng.range(opt.min_pair_crossings, opt.max_pair_crossings);
    }
    // A curve with no crossings at all cannot be embedded in the assembly.
    if (opt.curves == 3) {
        if (counts[0] + counts[1] == 0 || counts[0] + counts[2] == 0 ||
            counts[1] + counts[2] == 0)
            return std::nullopt;
    } else if (counts[0] == 0) {
        return std::nullopt;
    }

    auto maybe = assemble(rng, opt.curves, counts);
    if (!maybe) return std::nullopt;
    Diagram& d = *maybe;

    if (d.computed_genus() < 1) return std::nullopt;
    for (CurveId a = 0; a < opt.curves; ++a)
        for (CurveId b = a + 1; b < opt.curves; ++b)
            if (!diagram::detect_bigons(d, a, b).empty()) return std::nullopt;
    if (opt.require_essential)
        for (CurveId c = 0; c < opt.curves; ++c)
            if (!diagram::is_essential_curve(d, c)) return std::nullopt;
    return maybe;
}

std::vector<Diagram> fuzz_diagrams(const FuzzOptions& opt, int count, FuzzStats* stats) {
    std::vector<Diagram> out;
    Rng rng{opt.seed};
    FuzzStats local;
    while (static_cast<int>(out.size()) < count) {
        ++local.attempts;
        if (local.attempts > 1000 * count + 10000)
            throw std::runtime_error("fuzz_diagrams: acceptance rate too low");
        auto d = try_random_diagram(rng, opt);
        if (d) {
            ++local.accepted;
            out.push_back(std::move(*d));
        }
    }
    if (stats) *stats = local;
    return out;
}

}  // namespace cgt::fuzz
