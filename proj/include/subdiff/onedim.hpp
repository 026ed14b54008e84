#pragma once

#include <memory>
#include <string>
#include <vector>

#include "subdiff/coding.hpp"
#include "subdiff/splitting.hpp"

namespace subdiff {

// sigma(nu) = 1 - min over y in [0,1] of (1 + y^(1+nu)) / ((1+nu)(1+y)).
// Golden-section minimization of the unimodal objective, to 1e-12.
double sigma(double nu);

// (1/h) * integral over [x, x+h] of |t|^nu, via the sign-split antiderivative.
double root_average(double x, double h, double nu);

// (1/h) * integral over [x, x+h] of min(m^nu, (|t-d|/eps)^nu), closed form.
double truncated_root_average(double x, double h, double d, double eps, double m, double nu);

// One root-type spike: r_n(x) = (|x - center| / width)^exponent.
struct RootSpikeParams {
    int index = 0;
    double center = 0.0;
    double width = 0.0;
    double exponent = 0.0;
};

// n-th element of the dyadic enumeration d_1 = 1/2, d_n = (2 i - 1) / 2^(m+1).
double dyadic_enumeration(int n);
// Enumeration index of the level-`level` dyadic (2i-1)/2^level.
long long dyadic_index(int level, long long i);

// Default schedule: width 1/(n 2^(n+2)), exponent 2^-n.
std::vector<RootSpikeParams> paper_spikes(int cutoff);
// Desk schedule used by the acceptance runs: the first 20 spikes are wide and have
// exponent 0.7 so that 1e-5-scale probes resolve them; the tail reverts to the
// default schedule. Same invariants (widths strictly decreasing and summing below
// 1/2, sigma-series finite).
std::vector<RootSpikeParams> acceptance_spikes(int cutoff);

std::vector<std::pair<double, double>> spike_gaps(const std::vector<RootSpikeParams>& spikes);

struct OneDimConfig {
    std::string schedule = "paper";  // "paper" | "acceptance"
    int coding_depth = 10;
    int curve_depth = 26;
    int cutoff = 64;
    int dyadic_level_cap = 40;
    bool tilde = false;
};

// The differentiable 1D construction: g = min(beta, alpha + inf_n r_n) with
// (alpha, beta) the folded Hilbert curve composed with the Cantor extension, and
// f its primitive. Pointwise g evaluates the machine-precision model: dyadic
// inputs of level <= dyadic_level_cap take the exact spike-center value alpha(x);
// all integration uses the a.e. value (spikes dip on a null set).
class DifferentiableFunction {
public:
    DifferentiableFunction(CantorExtension ext, std::vector<RootSpikeParams> spikes,
                           OneDimConfig cfg);

    const OneDimConfig& config() const { return cfg_; }
    const CantorExtension& extension() const { return ext_; }
    const std::vector<RootSpikeParams>& spikes() const { return spikes_; }
    bool is_tilde() const { return cfg_.tilde; }

    double alpha(double x) const;  // tilde-adjusted
    double beta(double x) const;

    double g(double x, double tol = 1e-9) const;     // pointwise derivative value
    double g_ae(double x) const;                     // a.e. value (no dyadic fast path)
    double f(double x, double tol = 1e-9) const;
    // integral of g over [x, y]; exact closed forms on coding leaves
    double f_delta(double x, double y, double tol = 1e-9) const;

    ConvexBody predict_subdiff(double x) const;  // 1D body [alpha(x), beta(x)]

    DifferentiableFunction tilde() const;

private:
    CantorExtension ext_;
    std::vector<RootSpikeParams> spikes_;  // sorted by center
    OneDimConfig cfg_;
    std::vector<double> centers_;  // sorted centers for range queries
    double max_width_ = 0.0;

    double raw_alpha(double x) const;
    double raw_beta(double x) const;
    double raw_g_ae(double x) const;
    double raw_g(double x) const;
    double raw_delta(double a, double b, double tol) const;
    double leaf_cell_integral(double a, double b, double alpha, double beta) const;
    double adaptive_cell(double a, double b, double tol, int depth) const;
};

DifferentiableFunction build_differentiable(const OneDimConfig& cfg);

// Pick the leaf whose code best matches a target interval [a,b] of the folded
// square: searches coding-depth dyadic parameters for the closest curve vertex.
struct CodedPoint {
    double x = 0.0;          // probe point (leaf midpoint)
    int leaf = 0;            // word value
    double code = 0.0;       // leaf code = leaf * 2^-depth
    double alpha = 0.0;      // realized endpoints at the coded point (pre-tilde)
    double beta = 0.0;
    double coding_error = 0.0;  // max(|alpha-a|, |beta-b|)
};
CodedPoint code_target_interval(const DifferentiableFunction& F, double a, double b);

// The nonsmooth construction of the exhaustive Lipschitz function:
// f(x) = integral of a(t) 1_A + b(t) 1_[0,1]\A with (a,b) the folded Hilbert curve.
class NonsmoothFunction {
public:
    NonsmoothFunction(SplittingSet A, int curve_depth, bool tilde = false);

    double a(double t) const;  // tilde-adjusted curve components
    double b(double t) const;
    double f(double x, double tol) const;
    ConvexBody predict_subdiff(double x) const;
    NonsmoothFunction tilde() const;
    bool is_tilde() const { return tilde_; }
    const SplittingSet& splitting() const { return A_; }

    // Overrides for the degenerate-curve tests: evaluate with constant a/b.
    static NonsmoothFunction constant_curve(SplittingSet A, double ca, double cb);

private:
    SplittingSet A_;
    int curve_depth_ = 20;
    bool tilde_ = false;
    bool const_curve_ = false;
    double ca_ = 0.0, cb_ = 0.0;
};

}  // namespace subdiff
