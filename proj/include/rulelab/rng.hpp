#pragma once

// Deterministic random number generation used everywhere in the library.
// The generator is xoshiro256++ seeded from a single 64-bit value via
// SplitMix64, so the same seed produces the same stream on every platform.
// All distributions are hand-rolled on top of the raw stream; the standard
// library distributions are not used because their output is
// implementation-defined.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rulelab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // SplitMix64 expansion of the seed into the four state words.
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n) {
        // Rejection to avoid modulo bias.
        if (n == 0) throw std::invalid_argument("uniform_below: n must be > 0");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    /// Exponential with unit mean.
    double exponential() { return -std::log1p(-uniform()); }

    /// Standard normal via Box-Muller (second variate discarded).
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
    }

    /// Poisson draw; exact for any mu >= 0.
    long long poisson(double mu) {
        if (mu < 0.0) throw std::invalid_argument("poisson: mu must be >= 0");
        if (mu == 0.0) return 0;
        // Knuth's product method for small mu; for larger mu split the rate
        // in half recursively and add the two halves (a Poisson sum is
        // Poisson in the summed rate).
        if (mu > 30.0) return poisson(mu / 2.0) + poisson(mu - mu / 2.0);
        const double limit = std::exp(-mu);
        long long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static constexpr double pi = 3.14159265358979323846;

    std::uint64_t state_[4];
};

}  // namespace rulelab
