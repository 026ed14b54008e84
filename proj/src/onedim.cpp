#include "subdiff/onedim.hpp"

#include <algorithm>
#include <cmath>

namespace subdiff {

double sigma(double nu) {
    require(nu > 0.0 && nu <= 1.0, errc::invalid_argument, "sigma: nu outside (0,1]");
    auto psi = [nu](double y) {
        return (1.0 + std::pow(y, 1.0 + nu)) / ((1.0 + nu) * (1.0 + y));
    };
    const double inv_phi = 0.6180339887498949;
    double a = 0.0, b = 1.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = psi(c), fd = psi(d);
    while (b - a > 1e-13) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = psi(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = psi(d);
        }
    }
    const double m = std::min({psi(0.5 * (a + b)), psi(a), psi(b)});
    return 1.0 - m;
}

double root_average(double x, double h, double nu) {
    require(h != 0.0, errc::invalid_argument, "root_average: h = 0");
    require(nu > 0.0 && nu <= 1.0, errc::invalid_argument, "root_average: nu outside (0,1]");
    auto F = [nu](double t) {
        const double a = std::pow(std::abs(t), 1.0 + nu) / (1.0 + nu);
        return t >= 0.0 ? a : -a;
    };
    return (F(x + h) - F(x)) / h;
}

double truncated_root_average(double x, double h, double d, double eps, double m, double nu) {
    require(h != 0.0, errc::invalid_argument, "truncated_root_average: h = 0");
    require(eps > 0.0 && m > 0.0, errc::invalid_argument,
            "truncated_root_average: eps, m must be positive");
    require(nu > 0.0 && nu <= 1.0, errc::invalid_argument,
            "truncated_root_average: nu outside (0,1]");
    const double w = eps * m;  // |t-d| >= w is the clipped region
    const double mnu = std::pow(m, nu);
    auto A = [&](double s) {  // antiderivative of R(d + s) in s, A(0) = 0
        const double as = std::abs(s);
        double v;
        if (as <= w)
            v = eps / (1.0 + nu) * std::pow(as / eps, 1.0 + nu);
        else
            v = eps / (1.0 + nu) * std::pow(m, 1.0 + nu) + (as - w) * mnu;
        return s >= 0.0 ? v : -v;
    };
    return (A(x + h - d) - A(x - d)) / h;
}

// ---- spike schedules -----------------------------------------------------------

double dyadic_enumeration(int n) {
    require(n >= 1, errc::invalid_argument, "dyadic_enumeration: n < 1");
    // m >= 0 with 2^m - 1 < n <= 2^(m+1) - 1, i = n - (2^m - 1)
    int m = 0;
    while ((1LL << (m + 1)) - 1 < n) ++m;
    const long long i = n - ((1LL << m) - 1);
    return static_cast<double>(2 * i - 1) / static_cast<double>(1LL << (m + 1));
}

long long dyadic_index(int level, long long i) {
    return ((1LL << (level - 1)) - 1) + i;
}

std::vector<RootSpikeParams> paper_spikes(int cutoff) {
    require(cutoff >= 1, errc::invalid_argument, "spikes: cutoff < 1");
    std::vector<RootSpikeParams> s;
    s.reserve(cutoff);
    for (int n = 1; n <= cutoff; ++n) {
        RootSpikeParams p;
        p.index = n;
        p.center = dyadic_enumeration(n);
        p.width = 1.0 / (static_cast<double>(n) * std::ldexp(1.0, n + 2));
        p.exponent = std::ldexp(1.0, -n);
        s.push_back(p);
    }
    return s;
}

std::vector<RootSpikeParams> acceptance_spikes(int cutoff) {
    require(cutoff >= 1, errc::invalid_argument, "spikes: cutoff < 1");
    std::vector<RootSpikeParams> s;
    s.reserve(cutoff);
    for (int n = 1; n <= cutoff; ++n) {
        RootSpikeParams p;
        p.index = n;
        p.center = dyadic_enumeration(n);
        if (n <= 20) {
            p.width = 0.2 / (n + 19.0);  // 0.01 down to ~0.00513, sum ~ 0.145
            p.exponent = 0.7;
        } else {
            p.width = 1.0 / (static_cast<double>(n) * std::ldexp(1.0, n + 2));
            p.exponent = std::ldexp(1.0, -(n - 20));
        }
        s.push_back(p);
    }
    return s;
}

std::vector<std::pair<double, double>> spike_gaps(const std::vector<RootSpikeParams>& spikes) {
    std::vector<std::pair<double, double>> g;
    g.reserve(spikes.size());
    for (const auto& s : spikes) g.push_back({s.center - s.width, s.center + s.width});
    return g;
}

// ---- DifferentiableFunction ------------------------------------------------------

DifferentiableFunction::DifferentiableFunction(CantorExtension ext,
                                               std::vector<RootSpikeParams> spikes,
                                               OneDimConfig cfg)
    : ext_(std::move(ext)), spikes_(std::move(spikes)), cfg_(std::move(cfg)) {
    double total = 0.0;
    double prev = 1e300;
    for (const auto& s : spikes_) {
        require(s.width > 0.0 && s.width < prev + 1e-18, errc::invalid_argument,
                "spike widths must be positive and nonincreasing");
        prev = s.width;
        total += s.width;
        require(s.exponent > 0.0 && s.exponent <= 1.0, errc::invalid_argument,
                "spike exponents must lie in (0,1]");
    }
    require(total < 0.5, errc::invalid_argument, "spike widths must sum below 1/2");
    std::sort(spikes_.begin(), spikes_.end(),
              [](const auto& a, const auto& b) { return a.center < b.center; });
    centers_.reserve(spikes_.size());
    max_width_ = 0.0;
    for (const auto& s : spikes_) {
        centers_.push_back(s.center);
        max_width_ = std::max(max_width_, s.width);
    }
}

double DifferentiableFunction::raw_alpha(double x) const {
    return triangle_curve(ext_(x), cfg_.curve_depth).a;
}

double DifferentiableFunction::raw_beta(double x) const {
    return triangle_curve(ext_(x), cfg_.curve_depth).b;
}

double DifferentiableFunction::alpha(double x) const {
    const double v = raw_alpha(x);
    return cfg_.tilde ? 2.0 * v - 1.0 : v;
}

double DifferentiableFunction::beta(double x) const {
    const double v = raw_beta(x);
    return cfg_.tilde ? 2.0 * v - 1.0 : v;
}

namespace {

// r(x) for one spike, stable for tiny exponents.
double spike_value(const RootSpikeParams& s, double x) {
    const double q = std::abs(x - s.center) / s.width;
    if (q == 0.0) return 0.0;
    return std::exp(s.exponent * std::log(q));
}

// Is x the dyadic rational k/2^L with L <= cap? Exact on doubles.
bool dyadic_of_level(double x, int cap, int* level_out) {
    if (x <= 0.0 || x >= 1.0) return false;
    double scaled = x;
    for (int level = 1; level <= cap; ++level) {
        scaled *= 2.0;
        if (scaled == std::floor(scaled)) {
            *level_out = level;
            return true;
        }
    }
    return false;
}

}  // namespace

double DifferentiableFunction::raw_g_ae(double x) const {
    const double b = raw_beta(x);
    const double a = raw_alpha(x);
    // only spikes whose width-radius neighborhood reaches x can dip below beta
    double rmin = 1e300;
    auto it = std::lower_bound(centers_.begin(), centers_.end(), x - max_width_);
    for (size_t i = it - centers_.begin(); i < spikes_.size(); ++i) {
        const auto& s = spikes_[i];
        if (s.center - max_width_ > x) break;
        if (std::abs(x - s.center) <= s.width) rmin = std::min(rmin, spike_value(s, x));
    }
    if (rmin == 1e300) return b;  // r >= 1 outside every spike neighborhood
    return std::min(b, a + rmin);
}

double DifferentiableFunction::raw_g(double x) const {
    int level = 0;
    if (dyadic_of_level(x, cfg_.dyadic_level_cap, &level)) return raw_alpha(x);
    return raw_g_ae(x);
}

double DifferentiableFunction::g(double x, double tol) const {
    require(tol > 0.0, errc::invalid_argument, "g: tol <= 0");
    const double v = raw_g(x);
    return cfg_.tilde ? 2.0 * v - 1.0 : v;
}

double DifferentiableFunction::g_ae(double x) const {
    const double v = raw_g_ae(x);
    return cfg_.tilde ? 2.0 * v - 1.0 : v;
}

// Exact integral of min(beta, alpha + min_n r_n) over a cell inside one coding leaf
// (alpha, beta constant there). Spike deficits have closed forms; overlapping spike
// neighborhoods fall back to adaptive refinement.
double DifferentiableFunction::leaf_cell_integral(double a, double b, double al,
                                                  double be) const {
    const double base = be * (b - a);
    const double bound = be - al;  // dip depth
    if (bound <= 0.0) return base;
    // collect spike neighborhoods meeting [a,b]
    struct Seg { double lo, hi; size_t n; };
    std::vector<Seg> segs;
    auto it = std::lower_bound(centers_.begin(), centers_.end(), a - max_width_);
    for (size_t i = it - centers_.begin(); i < spikes_.size(); ++i) {
        const auto& s = spikes_[i];
        if (s.center - max_width_ >= b) break;
        const double lo = std::max(a, s.center - s.width);
        const double hi = std::min(b, s.center + s.width);
        if (hi > lo && s.width > 1e-16) segs.push_back({lo, hi, i});
    }
    double deficit = 0.0;
    for (size_t k = 0; k < segs.size();) {
        // merge a maximal run of mutually overlapping neighborhoods
        size_t end = k + 1;
        double hi = segs[k].hi;
        while (end < segs.size() && segs[end].lo < hi) {
            hi = std::max(hi, segs[end].hi);
            ++end;
        }
        if (end == k + 1) {
            const auto& s = spikes_[segs[k].n];
            // integral of max(0, bound - r_n) over the neighborhood piece
            const double reach =
                s.width * std::exp(std::log(bound) / s.exponent);  // r_n <= bound radius
            const double lo2 = std::max(segs[k].lo, s.center - reach);
            const double hi2 = std::min(segs[k].hi, s.center + reach);
            if (hi2 > lo2) {
                auto prim = [&](double t) {  // antiderivative of r_n at s.center + t
                    if (t == 0.0) return 0.0;
                    const double q = std::abs(t) / s.width;
                    const double v = s.width / (1.0 + s.exponent) *
                                     std::exp((1.0 + s.exponent) * std::log(q));
                    return t >= 0.0 ? v : -v;
                };
                const double rint = prim(hi2 - s.center) - prim(lo2 - s.center);
                deficit += bound * (hi2 - lo2) - rint;
            }
        } else {
            // overlapping wide spikes: integrate max(0, bound - min_n r_n) pointwise
            const double lo2 = segs[k].lo;
            double acc = 0.0;
            const int steps = 2048;
            const double w = (hi - lo2) / steps;
            for (int j = 0; j < steps; ++j) {
                const double t = lo2 + (j + 0.5) * w;
                double rmin = 1e300;
                for (size_t q = k; q < end; ++q)
                    rmin = std::min(rmin, spike_value(spikes_[segs[q].n], t));
                acc += std::max(0.0, bound - rmin);
            }
            deficit += acc * w;
        }
        k = end;
    }
    return base - deficit;
}

// Adaptive Simpson of the raw a.e. integrand on [a,b] (gap cells).
double DifferentiableFunction::adaptive_cell(double a, double b, double tol, int depth) const {
    const double m = 0.5 * (a + b);
    const double fa = raw_g_ae(a), fm = raw_g_ae(m), fb = raw_g_ae(b);
    auto simpson = [](double x0, double x2, double f0, double f1, double f2) {
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2);
    };
    struct Frame { double a, b, fa, fm, fb, whole; int depth; };
    double total = 0.0;
    std::vector<Frame> stack;
    stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), depth});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (fr.a + fr.b);
        const double lm = 0.5 * (fr.a + mid), rm = 0.5 * (mid + fr.b);
        const double flm = raw_g_ae(lm), frm = raw_g_ae(rm);
        const double left = simpson(fr.a, mid, fr.fa, flm, fr.fm);
        const double right = simpson(mid, fr.b, fr.fm, frm, fr.fb);
        const double err = left + right - fr.whole;
        if (std::abs(err) < 15.0 * tol * (fr.b - fr.a) || fr.depth >= 28) {
            total += left + right + err / 15.0;
        } else {
            stack.push_back({fr.a, mid, fr.fa, flm, fr.fm, left, fr.depth + 1});
            stack.push_back({mid, fr.b, fr.fm, frm, fr.fb, right, fr.depth + 1});
        }
    }
    return total;
}

double DifferentiableFunction::raw_delta(double a, double b, double tol) const {
    if (b <= a) return b == a ? 0.0 : -raw_delta(b, a, tol);
    // breakpoints: leaf boundaries inside [a,b]
    const auto& leaves = ext_.approx().leaves;
    std::vector<double> cuts{a};
    for (const auto& l : leaves) {
        if (l.first > a && l.first < b) cuts.push_back(l.first);
        if (l.second > a && l.second < b) cuts.push_back(l.second);
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (hi <= lo) continue;
        const double mid = 0.5 * (lo + hi);
        const int leaf = ext_.approx().leaf_containing(mid);
        if (leaf >= 0) {
            total += leaf_cell_integral(lo, hi, raw_alpha(mid), raw_beta(mid));
        } else {
            total += adaptive_cell(lo, hi, tol, 0);
        }
    }
    return total;
}

double DifferentiableFunction::f_delta(double x, double y, double tol) const {
    require(tol > 0.0, errc::invalid_argument, "f_delta: tol <= 0");
    const double raw = raw_delta(x, y, tol);
    return cfg_.tilde ? 2.0 * raw - (y - x) : raw;
}

double DifferentiableFunction::f(double x, double tol) const {
    return f_delta(0.0, x, tol);
}

ConvexBody DifferentiableFunction::predict_subdiff(double x) const {
    return ConvexBody::segment_1d(alpha(x), beta(x));
}

DifferentiableFunction DifferentiableFunction::tilde() const {
    require(!cfg_.tilde, errc::invalid_argument, "tilde: already applied");
    OneDimConfig c = cfg_;
    c.tilde = true;
    DifferentiableFunction out(ext_, spikes_, c);
    return out;
}

DifferentiableFunction build_differentiable(const OneDimConfig& cfg) {
    require(cfg.cutoff >= 1 && cfg.cutoff <= (1 << 12), errc::invalid_argument,
            "build: cutoff outside [1, 4096]");
    require(cfg.coding_depth >= 1 && cfg.coding_depth <= 16, errc::invalid_argument,
            "build: coding depth outside [1,16]");
    require(cfg.schedule == "paper" || cfg.schedule == "acceptance", errc::invalid_argument,
            "build: unknown spike schedule '" + cfg.schedule + "'");
    auto spikes = cfg.schedule == "acceptance" ? acceptance_spikes(cfg.cutoff)
                                               : paper_spikes(cfg.cutoff);
    auto cantor = build_cantor_in(spike_gaps(spikes), cfg.coding_depth);
    OneDimConfig base_cfg = cfg;
    base_cfg.tilde = false;
    DifferentiableFunction f(CantorExtension(std::move(cantor)), std::move(spikes), base_cfg);
    return cfg.tilde ? f.tilde() : f;
}

CodedPoint code_target_interval(const DifferentiableFunction& F, double a, double b) {
    require(a <= b, errc::invalid_argument, "code_target_interval: a > b");
    const int depth = F.config().coding_depth;
    const int leaves = 1 << depth;
    CodedPoint best;
    best.coding_error = 1e300;
    for (int k = 0; k < leaves; ++k) {
        const double code = std::ldexp(static_cast<double>(k), -depth);
        const CurvePoint2D p = triangle_curve(code, F.config().curve_depth);
        const double err = std::max(std::abs(p.a - a), std::abs(p.b - b));
        if (err < best.coding_error) {
            best.leaf = k;
            best.code = code;
            best.alpha = p.a;
            best.beta = p.b;
            best.coding_error = err;
        }
    }
    const auto& leaf = F.extension().approx().leaves[best.leaf];
    best.x = 0.5 * (leaf.first + leaf.second);
    return best;
}

// ---- NonsmoothFunction -----------------------------------------------------------

NonsmoothFunction::NonsmoothFunction(SplittingSet A, int curve_depth, bool tilde)
    : A_(std::move(A)), curve_depth_(curve_depth), tilde_(tilde) {}

NonsmoothFunction NonsmoothFunction::constant_curve(SplittingSet A, double ca, double cb) {
    NonsmoothFunction f(std::move(A), 20);
    f.const_curve_ = true;
    f.ca_ = ca;
    f.cb_ = cb;
    return f;
}

double NonsmoothFunction::a(double t) const {
    const double v = const_curve_ ? ca_ : triangle_curve(t, curve_depth_).a;
    return tilde_ ? 2.0 * v - 1.0 : v;
}

double NonsmoothFunction::b(double t) const {
    const double v = const_curve_ ? cb_ : triangle_curve(t, curve_depth_).b;
    return tilde_ ? 2.0 * v - 1.0 : v;
}

double NonsmoothFunction::f(double x, double tol) const {
    require(tol > 0.0, errc::invalid_argument, "nonsmooth eval: tol <= 0");
    require(tol >= (const_curve_ ? 1e-8 : 5e-3), errc::precision,
            "nonsmooth eval: tol below the supported resolution");
    require(x >= 0.0 && x <= 1.0, errc::invalid_argument, "nonsmooth eval: x outside [0,1]");
    if (x == 0.0) return 0.0;
    // integral of b - (b - a) 1_A over [0, x]; midpoint values per cell, cell width
    // from the curve's Hoelder-1/2 modulus (constant 3): per-cell error
    // <= 2 * 2 * int 3 sqrt(|s|) <= 6 w^1.5, total 6 x sqrt(w) <= tol/2.
    double w;
    if (const_curve_) {
        w = x;  // constant integrand needs one cell
    } else {
        const double rw = tol / (12.0 * x);
        w = rw * rw;
        w = std::max(w, 1e-9);
    }
    const int cells = std::max(1, static_cast<int>(std::ceil(x / w)));
    const double cw = x / cells;
    const double mtol = 0.5 * tol / cells;
    double total = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double lo = i * cw, hi = lo + cw;
        const double mid = 0.5 * (lo + hi);
        const double bm = const_curve_ ? cb_ : triangle_curve(mid, curve_depth_).b;
        const double am = const_curve_ ? ca_ : triangle_curve(mid, curve_depth_).a;
        total += bm * cw - (bm - am) * A_.measure_in(lo, hi, mtol);
    }
    return tilde_ ? 2.0 * total - x : total;
}

ConvexBody NonsmoothFunction::predict_subdiff(double x) const {
    return ConvexBody::segment_1d(a(x), b(x));
}

NonsmoothFunction NonsmoothFunction::tilde() const {
    require(!tilde_, errc::invalid_argument, "tilde: already applied");
    NonsmoothFunction out = *this;
    out.tilde_ = true;
    return out;
}

}  // namespace subdiff
