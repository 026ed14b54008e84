#include "subdiff/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace subdiff {

std::vector<Vec> annulus_points_2d(const Vec& center, double r_in, double r_out, int count,
                                   uint64_t seed) {
    require(center.size() == 2, errc::invalid_argument, "annulus_points_2d: dim != 2");
    require(r_out > r_in && r_in >= 0.0, errc::invalid_argument,
            "annulus_points_2d: bad radii");
    SeededRng rng(seed);
    const double theta0 = rng.next_double();
    const uint64_t scramble = rng.next_u64();
    std::vector<Vec> pts;
    pts.reserve(count);
    const double a2 = r_in * r_in, b2 = r_out * r_out;
    for (int i = 0; i < count; ++i) {
        const double u = std::fmod(theta0 + kGoldenFrac * i, 1.0);
        const double theta = 2.0 * std::numbers::pi * u;
        const double v = van_der_corput(static_cast<uint64_t>(i), scramble);
        const double r = std::sqrt(a2 + (b2 - a2) * v);
        pts.push_back({center[0] + r * std::cos(theta), center[1] + r * std::sin(theta)});
    }
    return pts;
}

namespace {

// Dyadic rationals k/2^L inside (lo, hi), coarsest level first.
void collect_dyadics(double lo, double hi, int level_cap, int cap, std::vector<double>& out) {
    if (hi <= lo) return;
    for (int level = 1; level <= level_cap; ++level) {
        const double step = std::ldexp(1.0, -level);
        // odd multiples of 2^-level are the level-`level` dyadics
        double k = std::floor(lo / step);
        for (double m = k; m * step < hi; m += 1.0) {
            const double x = m * step;
            if (x <= lo || x >= hi) continue;
            const long long mi = static_cast<long long>(std::llround(m));
            if (mi % 2 == 0) continue;  // belongs to a coarser level
            out.push_back(x);
            if (static_cast<int>(out.size()) >= cap) return;
        }
        if (step < (hi - lo) / (2.0 * cap)) break;  // finer levels cannot all fit
    }
}

}  // namespace

std::vector<double> annulus_points_1d(double center, double r_in, double r_out, int count,
                                      uint64_t seed, int level_cap, int dyadic_cap) {
    require(r_out > r_in && r_in >= 0.0, errc::invalid_argument, "annulus_points_1d: bad radii");
    SeededRng rng(seed);
    const uint64_t scr_l = rng.next_u64();
    const uint64_t scr_r = rng.next_u64();
    std::vector<double> pts;
    pts.reserve(count + 2 * dyadic_cap);
    const int half = count / 2;
    for (int i = 0; i < half; ++i) {
        const double v = van_der_corput(static_cast<uint64_t>(i), scr_l);
        pts.push_back(center - (r_in + (r_out - r_in) * v));
    }
    for (int i = 0; i < count - half; ++i) {
        const double v = van_der_corput(static_cast<uint64_t>(i), scr_r);
        pts.push_back(center + (r_in + (r_out - r_in) * v));
    }
    std::vector<double> dy;
    collect_dyadics(center - r_out, center - r_in, level_cap, dyadic_cap, dy);
    collect_dyadics(center + r_in, center + r_out, level_cap, dyadic_cap, dy);
    pts.insert(pts.end(), dy.begin(), dy.end());
    return pts;
}

}  // namespace subdiff
