#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace aggmdp {

/// splitmix64 step; derives independent per-instance seeds from (seed, index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// mt19937_64 with hand-rolled draw helpers. The std distribution classes are
/// implementation-defined, so they are avoided: instances must be
/// bit-identical for a given seed on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as an unnormalized positive weight.
    double positive01() { return 1.0 - uniform01(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Unbiased uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % n;
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// `count` distinct values from [0, n), via partial Fisher-Yates.
    std::vector<int> distinct(int count, int n) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> picked;
        picked.reserve(static_cast<std::size_t>(count));
        for (int k = 0; k < count; ++k) {
            const int at = k + static_cast<int>(below(static_cast<std::uint64_t>(n - k)));
            std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(at)]);
            picked.push_back(pool[static_cast<std::size_t>(k)]);
        }
        return picked;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace aggmdp
