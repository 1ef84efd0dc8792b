#pragma once

#include <cmath>
#include <cstdint>

namespace assoc {

/// SplitMix64 — a small, portable, seedable generator. The same seed
/// yields the same stream on every platform, which all Monte Carlo
/// determinism contracts in this library rely on.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 bits of precision.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one value per call, no caching,
    /// so the stream position stays predictable).
    double next_gaussian() {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    uint64_t state_;
};

}  // namespace assoc
