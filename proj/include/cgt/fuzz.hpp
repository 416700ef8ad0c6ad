#pragma once

#include "cgt/diagram.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cgt::fuzz {

// Deterministic splitmix64; all suite randomness flows from one seed, and no
// standard-library distribution is involved, so streams are identical across
// platforms.
struct Rng {
    std::uint64_t state = 1;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }
};

struct FuzzOptions {
    std::uint64_t seed = 1;
    int curves = 2;             // 2 or 3
    int max_pair_crossings = 8; // cap on each pair's crossing count
    int min_pair_crossings = 1;
    bool require_essential = true;
    // Exact per-pair counts (ab, ag, bg) instead of random ones; -1 = random.
    std::array<int, 3> pair_counts{-1, -1, -1};
};

struct FuzzStats {
    int attempts = 0;
    int accepted = 0;
};

// One attempt at a random rotation-system assembly.  The result, when
// present, is a validated diagram: connected, correct Euler genus, every
// curve pair bigon-free, every curve essential (three-curve diagrams have no
// triple points by construction).
std::optional<diagram::Diagram> try_random_diagram(Rng& rng, const FuzzOptions& opt);

// Exactly `count` accepted diagrams; rejected candidates are counted, never
// repaired.
std::vector<diagram::Diagram> fuzz_diagrams(const FuzzOptions& opt, int count,
                                            FuzzStats* stats = nullptr);

}  // namespace cgt::fuzz
