#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subdiff/geometry.hpp"

namespace subdiff {

// Point of the folded unit square, a <= b always.
struct CurvePoint2D {
    double a = 0.0;
    double b = 0.0;
};

// Depth-level evaluation of the Hilbert curve on [0,1]^2, endpoints (0,0) and (1,0).
// Successive depths differ by at most sqrt(2) 2^-depth; dyadic inputs of level
// <= 2*depth evaluate to exact grid corners, stable across depths.
Vec hilbert_point(double t, int depth);

// min/max fold of the Hilbert curve; surjects onto {0 <= a <= b <= 1}.
CurvePoint2D triangle_curve(double t, int depth);

CurvePoint2D fold(const Vec& p);

// 2^depth disjoint closed intervals carved out of F = [0,1] minus the given open
// gaps, indexed by binary words (leaf i <-> the word spelled by the bits of i).
struct CantorApprox {
    int depth = 0;
    std::vector<std::pair<double, double>> leaves;       // left-to-right
    std::vector<std::pair<double, double>> merged_gaps;  // disjoint open intervals

    int leaf_count() const { return static_cast<int>(leaves.size()); }
    // Index of the leaf containing x, or -1.
    int leaf_containing(double x) const;
};

// Recursive F-measure median splitting. Each split either reuses a host gap or
// manufactures one of width mu/6 around the median; leaves are finally shrunk into
// single components of F so they avoid every provided gap.
CantorApprox build_cantor_in(const std::vector<std::pair<double, double>>& gaps, int depth);

// psi(word) = sum 2^-j w_j for a binary word (MSB first).
double cantor_code(const std::vector<int>& word);
std::vector<int> word_of_index(uint64_t index, int depth);

// Continuous piecewise-linear surjection [0,1] -> [0,1]: constant (= the leaf code)
// on each leaf, linear across the complementary gaps.
class CantorExtension {
public:
    explicit CantorExtension(CantorApprox approx);
    double operator()(double x) const;
    const CantorApprox& approx() const { return approx_; }
    double code_of_leaf(int i) const;
    // Max slope of the extension on [lo, hi]; the curve modulus bookkeeping uses it.
    double max_slope(double lo, double hi) const;

private:
    CantorApprox approx_;
};

// Finite family of polytopes containing 0 and contained in C, eps-dense in the
// hyperspace of such bodies with eps <= delta + kNetCurvatureC * diam(C) / m^2.
inline constexpr double kNetCurvatureC = 5.0;  // conservative support-discretization constant
std::vector<ConvexBody> body_net(const ConvexBody& C, int m, double delta,
                                 std::size_t family_cap = 1u << 17);

// Tour through a knot family: piecewise Minkowski geodesic (convex knots) or
// piecewise constant over depth-k Cantor leaves (connected knots).
class BodyTour {
public:
    enum class Mode { geodesic, cantor };

    static BodyTour geodesic(std::vector<ConvexBody> knots);
    static BodyTour cantor(std::vector<BallUnion> knots);

    Mode mode() const { return mode_; }
    int knot_count() const;
    const std::vector<double>& params() const { return params_; }
    const std::vector<ConvexBody>& knots() const { return knots_; }
    const std::vector<BallUnion>& ball_knots() const { return ball_knots_; }
    double lipschitz() const { return lipschitz_; }
    const CantorApprox& base() const { return base_; }

    ConvexBody eval(double t) const;        // geodesic mode
    int knot_index_at(double t) const;      // cantor mode: leaf word value, or -1
    const BallUnion& ball_knot_at(double t) const;

private:
    Mode mode_ = Mode::geodesic;
    std::vector<ConvexBody> knots_;
    std::vector<BallUnion> ball_knots_;
    std::vector<double> params_;
    CantorApprox base_;
    double lipschitz_ = 0.0;
};

}  // namespace subdiff
