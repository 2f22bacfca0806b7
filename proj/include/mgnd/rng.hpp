#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Seeded random streams. Every consumer receives an explicit stream, and
// substreams are derived by hashing (seed, ids...) so that independent
// tasks (multi-start fits, simulation replicates) get reproducible,
// well-separated generators regardless of scheduling.

namespace mgnd {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic substream seed from a base seed and up to three ids.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64(s);
    s ^= a + 0x165667b19e3779f9ULL;
    h ^= splitmix64(s);
    s ^= b + 0x27d4eb2f165667c5ULL;
    h ^= splitmix64(s);
    s ^= c + 0x85ebca6b9e3779b9ULL;
    h ^= splitmix64(s);
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller. Consumes exactly two uniforms per
    // draw (the paired deviate is discarded) to keep stream consumption
    // predictable.
    double normal() {
        const double u1 = 1.0 - uniform01();  // in (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // Gamma(shape, scale 1), Marsaglia-Tsang. Shapes below 1 are boosted
    // through Gamma(shape + 1) * U^(1/shape).
    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = 1.0 - uniform01();  // in (0, 1]
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v;
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace mgnd
