#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subdiff/common.hpp"
#include "subdiff/rational.hpp"

namespace subdiff {

// Finite point set; the discrete stand-in for compact sets (gradient clouds).
struct PointCloud {
    int dim = 0;
    std::vector<Vec> points;
};

// Finite union of closed balls. The adjacency graph (overlap iff center distance
// strictly below the radius sum) is computed on construction.
struct BallUnion {
    int dim = 0;
    std::vector<Vec> centers;
    std::vector<double> radii;
    std::vector<std::pair<int, int>> adjacency;
    bool connected = false;

    static BallUnion make(int dim, std::vector<Vec> centers, std::vector<double> radii);
    int size() const { return static_cast<int>(centers.size()); }
};

// V-polytope in canonical form. In 2D the vertex list is the minimal hull in
// counterclockwise order starting from the lexicographic minimum, so equality is
// syntactic. An optional exact-rational mirror makes selected operations exact.
// Dimensions >= 3 are stored deduplicated/sorted but not hull-minimized; the whole
// desk-scale pipeline runs at N <= 2.
class ConvexBody {
public:
    ConvexBody() = default;

    static ConvexBody from_points(int dim, std::vector<Vec> pts);
    static ConvexBody from_rational(int dim, std::vector<RatVec> pts);
    static ConvexBody empty_body(int dim);
    // Inscribed regular k-gon of the disk B(center, radius).
    static ConvexBody regular_polygon(const Vec& center, double radius, int k,
                                      double phase = 0.0);
    static ConvexBody segment_1d(double a, double b);

    int dim() const { return dim_; }
    bool is_empty() const { return empty_; }
    bool exact_mode() const { return exact_.has_value(); }
    const std::vector<Vec>& vertices() const { return verts_; }
    const std::vector<RatVec>& exact_vertices() const { return *exact_; }

    double max_vertex_norm() const;
    Vec centroid() const;
    // Membership for dim <= 2 (closed, with an optional outward slack).
    bool contains(const Vec& p, double tol = 0.0) const;
    bool operator==(const ConvexBody& o) const;

private:
    int dim_ = 0;
    bool empty_ = false;
    std::vector<Vec> verts_;
    std::optional<std::vector<RatVec>> exact_;

    friend ConvexBody make_canonical_unchecked(int dim, std::vector<Vec> verts,
                                               std::optional<std::vector<RatVec>> exact,
                                               bool empty);
};

// max over vertices of <p, u>; exact overload for rational bodies.
double support_value(const ConvexBody& K, const Vec& u);
Rat support_value_exact(const ConvexBody& K, const RatVec& u);

ConvexBody convex_hull(const PointCloud& cloud);

// (1-lambda) K0 + lambda K1 as the hull of pairwise vertex combinations.
ConvexBody minkowski_interpolate(const ConvexBody& K0, const ConvexBody& K1, double lambda);
ConvexBody minkowski_interpolate_exact(const ConvexBody& K0, const ConvexBody& K1,
                                       const Rat& lambda);

// K + inscribed k-gon approximation of B(0, r); result is a subset of the true sum,
// within r (1 - cos(pi/k)) of it.
ConvexBody minkowski_sum_ball(const ConvexBody& K, double r, int k = 32);

// Polygonal approximation of K and B(center, r) intersection, Hausdorff error <= tol
// for nondegenerate intersections (2D). Empty-flagged when the true intersection is
// provably empty.
ConvexBody intersect_body_ball(const ConvexBody& K, const Vec& center, double r, double tol);

// Exact 2D intersection of convex polygons (possibly empty-flagged).
ConvexBody intersect_bodies(const ConvexBody& A, const ConvexBody& B);

// Euclidean distance from a point, exact per kind.
double set_distance(const Vec& p, const ConvexBody& K);
double set_distance(const Vec& p, const BallUnion& U);
double set_distance(const Vec& p, const PointCloud& C);

// Hausdorff distances. Polytope-polytope is exact in dimensions 1 and 2 (tol is
// ignored there); every pairing involving a solid non-polytopal side is certified to
// the given tolerance by covering that side.
double hausdorff_distance(const ConvexBody& A, const ConvexBody& B, double tol = 1e-3);
double hausdorff_distance(const PointCloud& A, const PointCloud& B);
double hausdorff_distance(const PointCloud& A, const ConvexBody& B, double tol = 1e-3);
double hausdorff_distance(const PointCloud& A, const BallUnion& B, double tol = 1e-3);
double hausdorff_distance(const ConvexBody& A, const BallUnion& B, double tol = 1e-3);
double hausdorff_distance(const BallUnion& A, const BallUnion& B, double tol = 1e-3);

// Exact squared Hausdorff distance between rational bodies (dim <= 2).
Rat hausdorff_sq_exact(const ConvexBody& A, const ConvexBody& B);

// Covering point set of a solid set with covering radius <= h (dim <= 2).
std::vector<Vec> cover_points(const ConvexBody& K, double h);
std::vector<Vec> cover_points(const BallUnion& U, double h);

}  // namespace subdiff
