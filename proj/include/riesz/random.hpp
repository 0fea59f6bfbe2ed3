#pragma once

#include <cstdint>
#include <random>

namespace riesz {

/// Portable seeded generator. Raw bits come from std::mt19937_64, whose output
/// sequence is fixed by the standard; the uniform and Gaussian transforms are
/// implemented here so results do not depend on the standard library vendor.
///
/// Stream splitting: substream(k) seeds a fresh engine with
/// splitmix64(seed + k * golden_gamma), so streams for distinct k are
/// decorrelated and can be consumed in any order or concurrently.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t seed() const noexcept { return seed_; }

    Rng substream(std::uint64_t k) const {
        return Rng(seed_ + (k + 1) * 0x9E3779B97F4A7C15ULL);
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal variate (Marsaglia polar method).
    double normal();

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace riesz
