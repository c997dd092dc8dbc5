#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace hopbench {

// Deterministic RNG utilities. Scenario generation must be byte-identical
// across platforms and parallelism levels, so no std::*_distribution here:
// those are implementation-defined. Everything below is fully specified.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

constexpr std::uint64_t mix(std::uint64_t a, std::string_view tag) {
    return mix(a, fnv1a64(tag));
}

// Counter-mode stream over splitmix64. Cheap to fork: child streams are
// independent of how much the parent has been consumed, which is what lets
// one seed drive several concerns (entities, placement, distractors)
// without cross-perturbation.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(splitmix64(seed)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Fixed-point multiply keeps the mapping portable.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1) return 0;
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) { return unit() < p; }

    RngStream fork(std::string_view tag) const {
        return RngStream(mix(state_, tag));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = bounded(i);
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t state_;
};

// One-shot uniform roll in [0,1) keyed by arbitrary inputs; used where a
// decision must be reproducible from its identifying context alone.
inline double keyed_unit(std::uint64_t key) {
    return static_cast<double>(splitmix64(key) >> 11) * 0x1.0p-53;
}

}  // namespace hopbench
