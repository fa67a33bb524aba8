#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "gfdm/types.hpp"

namespace gfdm {

// splitmix64 step; used to derive independent stream seeds from a master seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-(trial, block) stream seed. Reproducible under any
// parallel schedule because each consumer owns its own Rng.
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t s = master;
    uint64_t h = splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    s ^= b + 0xd1b54a32d192ed03ULL;
    h ^= splitmix64(s);
    s ^= c + 0x8cb92ba72f3d8dd7ULL;
    h ^= splitmix64(s);
    return h;
}

// Seeded random stream. Gaussians via explicit Box-Muller so draws do not
// depend on the standard library's unspecified normal_distribution algorithm.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }

    double uniform() {  // [0, 1)
        return (eng_() >> 11) * 0x1.0p-53;
    }

    double gauss() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
    }

    // Circular complex Gaussian with E|z|^2 = variance.
    cdouble cgauss(double variance) {
        double s = std::sqrt(variance * 0.5);
        return {s * gauss(), s * gauss()};
    }

    uint8_t bit() { return static_cast<uint8_t>(eng_() >> 63); }

private:
    std::mt19937_64 eng_;
};

}  // namespace gfdm
