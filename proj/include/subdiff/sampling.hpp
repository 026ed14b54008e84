#pragma once

#include <cstdint>
#include <vector>

#include "subdiff/common.hpp"

namespace subdiff {

// splitmix64; the single PRNG feeding every randomized sweep.
struct SeededRng {
    uint64_t state;
    explicit SeededRng(uint64_t seed) : state(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }
};

// Radical-inverse base 2 with a seed-dependent digit scramble.
inline double van_der_corput(uint64_t i, uint64_t scramble) {
    uint64_t bits = 0;
    uint64_t n = i + 1;
    for (int b = 0; b < 64 && n; ++b) {
        bits |= (n & 1ULL) << (63 - b);
        n >>= 1;
    }
    bits ^= scramble;
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double kGoldenFrac = 0.6180339887498948482;

// Deterministic low-discrepancy point set in the 2D annulus r_in <= |x - c| <= r_out.
// Angle by Kronecker rotation, radius area-uniform by scrambled van der Corput;
// prefixes of the sequence are themselves low-discrepancy (budget monotonicity).
std::vector<Vec> annulus_points_2d(const Vec& center, double r_in, double r_out, int count,
                                   uint64_t seed);

// Two-sided 1D annulus {x : r_in <= |x - c| <= r_out}: low-discrepancy offsets plus
// every dyadic rational of level <= level_cap inside the annulus (capped). The dyadic
// probes are what let the estimator see the rational spike centers of the 1D
// constructions; they are function-agnostic.
std::vector<double> annulus_points_1d(double center, double r_in, double r_out, int count,
                                      uint64_t seed, int level_cap = 40, int dyadic_cap = 512);

}  // namespace subdiff
