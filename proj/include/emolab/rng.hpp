#pragma once

#include <cstdint>
#include <random>

namespace emolab {

/// Seeded random stream backed by std::mt19937_64.
///
/// The engine's output sequence is fixed by the C++ standard, and all
/// derived quantities (unit reals, bounded integers) are computed here rather
/// than through <random> distributions, whose algorithms vary between
/// standard library implementations. Runs are therefore bit-reproducible
/// across toolchains.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform real in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// True with probability p.
    bool bernoulli(double p) { return uniform01() < p; }

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child seed for a stream identified by (master, key). For a fixed master
/// this is injective in key.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t key) noexcept {
    return mix64(mix64(master) ^ mix64(key));
}

}  // namespace emolab
