#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace mvs {

// Deterministic splitmix64 generator. We own the distribution code so that
// identical seeds give bit-identical streams on every platform and compiler;
// std::normal_distribution and friends are implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    // Stable sub-stream derivation: hash (seed, purpose, index) together so
    // independent pipeline stages never share a stream.
    static Rng substream(uint64_t seed, std::string_view purpose, uint64_t index = 0) {
        uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
        for (char c : purpose) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        Rng r(mix(mix(seed) ^ h) ^ mix(index + 0x9e3779b97f4a7c15ull));
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t uniform_index(uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller. Consumes two uniforms per draw.
    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

}  // namespace mvs
