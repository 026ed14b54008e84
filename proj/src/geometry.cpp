#include "subdiff/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace subdiff {

namespace {

template <class S>
S cross(const std::vector<S>& o, const std::vector<S>& a, const std::vector<S>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

template <class S>
bool lex_less(const std::vector<S>& a, const std::vector<S>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

// Monotone chain; strict turns only, so collinear interior points are dropped and
// the result is the minimal vertex set. Output starts at the lexicographic minimum
// and runs counterclockwise.
template <class S>
std::vector<std::vector<S>> hull_2d(std::vector<std::vector<S>> pts) {
    std::sort(pts.begin(), pts.end(), lex_less<S>);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<std::vector<S>> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && !(cross(h[k - 2], h[k - 1], pts[i]) > S(0))) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {  // upper hull
        while (k >= lower && !(cross(h[k - 2], h[k - 1], pts[i]) > S(0))) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;  // already CCW from lexicographic min
}

template <class S>
std::vector<std::vector<S>> hull_1d(std::vector<std::vector<S>> pts) {
    auto mn = *std::min_element(pts.begin(), pts.end(), lex_less<S>);
    auto mx = *std::max_element(pts.begin(), pts.end(), lex_less<S>);
    if (mn == mx) return {mn};
    return {mn, mx};
}

template <class S>
std::vector<std::vector<S>> canonicalize(int dim, std::vector<std::vector<S>> pts) {
    if (dim == 1) return hull_1d(std::move(pts));
    if (dim == 2) return hull_2d(std::move(pts));
    std::sort(pts.begin(), pts.end(), lex_less<S>);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

template <class S>
S seg_dist_sq(const std::vector<S>& p, const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> ab(p.size()), ap(p.size());
    S den(0), num(0);
    for (size_t i = 0; i < p.size(); ++i) {
        ab[i] = b[i] - a[i];
        ap[i] = p[i] - a[i];
        den += ab[i] * ab[i];
        num += ab[i] * ap[i];
    }
    S t = den > S(0) ? num / den : S(0);
    if (t < S(0)) t = S(0);
    if (t > S(1)) t = S(1);
    S d(0);
    for (size_t i = 0; i < p.size(); ++i) {
        const S di = ap[i] - t * ab[i];
        d += di * di;
    }
    return d;
}

template <class S>
bool inside_convex(const std::vector<S>& p, const std::vector<std::vector<S>>& poly) {
    const size_t n = poly.size();
    if (n == 1) return p == poly[0];
    if (n == 2) return seg_dist_sq(p, poly[0], poly[1]) == S(0);
    for (size_t i = 0; i < n; ++i) {
        if (cross(poly[i], poly[(i + 1) % n], p) < S(0)) return false;
    }
    return true;
}

// Squared distance from p to a canonical 2D polygon (0 when inside).
template <class S>
S point_poly_dist_sq(const std::vector<S>& p, const std::vector<std::vector<S>>& poly) {
    const size_t n = poly.size();
    if (n == 1) {
        S d(0);
        for (size_t i = 0; i < p.size(); ++i) {
            const S di = p[i] - poly[0][i];
            d += di * di;
        }
        return d;
    }
    if (n >= 3 && inside_convex(p, poly)) return S(0);
    S best = seg_dist_sq(p, poly[0], poly[n > 1 ? 1 : 0]);
    for (size_t i = 1; i < n; ++i) {
        const S d = seg_dist_sq(p, poly[i], poly[(i + 1) % n]);
        if (d < best) best = d;
    }
    return best;
}

// One-sided sup over vertices of A of squared distance to B; with both bodies convex
// the supremum over the solid A of d(., B) is attained at a vertex of A.
template <class S>
S dh_sq_one_sided(const std::vector<std::vector<S>>& A, const std::vector<std::vector<S>>& B) {
    S best(0);
    for (const auto& v : A) {
        const S d = point_poly_dist_sq(v, B);
        if (d > best) best = d;
    }
    return best;
}

std::vector<RatVec> to_rational(const std::vector<Vec>& pts) {
    std::vector<RatVec> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        RatVec rp;
        rp.reserve(p.size());
        for (double x : p) rp.push_back(rat_from_double(x));
        out.push_back(std::move(rp));
    }
    return out;
}

std::vector<Vec> to_double_pts(const std::vector<RatVec>& pts) {
    std::vector<Vec> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        Vec dp;
        dp.reserve(p.size());
        for (const Rat& x : p) dp.push_back(to_double(x));
        out.push_back(std::move(dp));
    }
    return out;
}

void check_dims(int dim, const std::vector<Vec>& pts) {
    require(dim >= 1, errc::invalid_argument, "body: dim must be >= 1");
    require(!pts.empty(), errc::invalid_argument, "body: empty vertex list");
    for (const auto& p : pts)
        require(static_cast<int>(p.size()) == dim, errc::invalid_argument,
                "body: vertex dimension mismatch");
}

}  // namespace

ConvexBody make_canonical_unchecked(int dim, std::vector<Vec> verts,
                                    std::optional<std::vector<RatVec>> exact, bool empty) {
    ConvexBody b;
    b.dim_ = dim;
    b.empty_ = empty;
    b.verts_ = std::move(verts);
    b.exact_ = std::move(exact);
    return b;
}

ConvexBody ConvexBody::from_points(int dim, std::vector<Vec> pts) {
    check_dims(dim, pts);
    return make_canonical_unchecked(dim, canonicalize<double>(dim, std::move(pts)),
                                    std::nullopt, false);
}

ConvexBody ConvexBody::from_rational(int dim, std::vector<RatVec> pts) {
    require(dim >= 1 && !pts.empty(), errc::invalid_argument, "body: empty vertex list");
    auto canon = canonicalize<Rat>(dim, std::move(pts));
    return make_canonical_unchecked(dim, to_double_pts(canon), std::move(canon), false);
}

ConvexBody ConvexBody::empty_body(int dim) {
    return make_canonical_unchecked(dim, {}, std::nullopt, true);
}

ConvexBody ConvexBody::regular_polygon(const Vec& center, double radius, int k, double phase) {
    require(center.size() == 2, errc::invalid_argument, "regular_polygon: dim != 2");
    require(k >= 3 && radius > 0.0, errc::invalid_argument, "regular_polygon: bad params");
    std::vector<Vec> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double a = phase + 2.0 * std::numbers::pi * i / k;
        pts.push_back({center[0] + radius * std::cos(a), center[1] + radius * std::sin(a)});
    }
    return from_points(2, std::move(pts));
}

ConvexBody ConvexBody::segment_1d(double a, double b) {
    return from_points(1, {{a}, {b}});
}

double ConvexBody::max_vertex_norm() const {
    double m = 0.0;
    for (const auto& v : verts_) m = std::max(m, norm(v));
    return m;
}

Vec ConvexBody::centroid() const {
    require(!empty_, errc::invalid_argument, "centroid of empty body");
    Vec c(dim_, 0.0);
    for (const auto& v : verts_)
        for (int i = 0; i < dim_; ++i) c[i] += v[i];
    for (double& x : c) x /= static_cast<double>(verts_.size());
    return c;
}

bool ConvexBody::contains(const Vec& p, double tol) const {
    require(dim_ <= 2, errc::invalid_argument, "contains: dim > 2 unsupported");
    if (empty_) return false;
    if (tol == 0.0) {
        if (dim_ == 1) return p[0] >= verts_.front()[0] && p[0] <= verts_.back()[0];
        return inside_convex<double>(p, verts_);
    }
    return set_distance(p, *this) <= tol;
}

bool ConvexBody::operator==(const ConvexBody& o) const {
    if (dim_ != o.dim_ || empty_ != o.empty_) return false;
    if (exact_mode() && o.exact_mode()) return *exact_ == *o.exact_;
    return verts_ == o.verts_;
}

double support_value(const ConvexBody& K, const Vec& u) {
    require(!K.is_empty(), errc::invalid_argument, "support_value: empty body");
    require(static_cast<int>(u.size()) == K.dim(), errc::invalid_argument,
            "support_value: dimension mismatch");
    double best = dot(K.vertices()[0], u);
    for (const auto& v : K.vertices()) best = std::max(best, dot(v, u));
    return best;
}

Rat support_value_exact(const ConvexBody& K, const RatVec& u) {
    require(K.exact_mode(), errc::invalid_argument, "support_value_exact: body not exact");
    const auto& vs = K.exact_vertices();
    auto sdot = [&](const RatVec& v) {
        Rat s(0);
        for (size_t i = 0; i < v.size(); ++i) s += v[i] * u[i];
        return s;
    };
    Rat best = sdot(vs[0]);
    for (const auto& v : vs) best = std::max(best, sdot(v));
    return best;
}

ConvexBody convex_hull(const PointCloud& cloud) {
    require(!cloud.points.empty(), errc::invalid_argument, "convex_hull: empty cloud");
    return ConvexBody::from_points(cloud.dim, cloud.points);
}

ConvexBody minkowski_interpolate(const ConvexBody& K0, const ConvexBody& K1, double lambda) {
    require(K0.dim() == K1.dim(), errc::invalid_argument, "minkowski: dimension mismatch");
    require(lambda >= 0.0 && lambda <= 1.0, errc::invalid_argument,
            "minkowski: lambda outside [0,1]");
    if (K0.exact_mode() && K1.exact_mode()) {
        const Rat rl = rat_from_double(lambda);
        return minkowski_interpolate_exact(K0, K1, rl);
    }
    std::vector<Vec> pts;
    pts.reserve(K0.vertices().size() * K1.vertices().size());
    for (const auto& a : K0.vertices())
        for (const auto& b : K1.vertices()) {
            Vec p(a.size());
            for (size_t i = 0; i < a.size(); ++i) p[i] = (1.0 - lambda) * a[i] + lambda * b[i];
            pts.push_back(std::move(p));
        }
    return ConvexBody::from_points(K0.dim(), std::move(pts));
}

ConvexBody minkowski_interpolate_exact(const ConvexBody& K0, const ConvexBody& K1,
                                       const Rat& lambda) {
    require(K0.exact_mode() && K1.exact_mode(), errc::invalid_argument,
            "minkowski exact: bodies not exact");
    require(lambda >= 0 && lambda <= 1, errc::invalid_argument,
            "minkowski: lambda outside [0,1]");
    std::vector<RatVec> pts;
    const Rat one_m = Rat(1) - lambda;
    for (const auto& a : K0.exact_vertices())
        for (const auto& b : K1.exact_vertices()) {
            RatVec p(a.size());
            for (size_t i = 0; i < a.size(); ++i) p[i] = one_m * a[i] + lambda * b[i];
            pts.push_back(std::move(p));
        }
    return ConvexBody::from_rational(K0.dim(), std::move(pts));
}

ConvexBody minkowski_sum_ball(const ConvexBody& K, double r, int k) {
    require(r >= 0.0, errc::invalid_argument, "minkowski_sum_ball: negative radius");
    if (r == 0.0) return K;
    require(K.dim() == 2, errc::invalid_argument, "minkowski_sum_ball: dim != 2");
    std::vector<Vec> pts;
    pts.reserve(K.vertices().size() * k);
    for (const auto& v : K.vertices())
        for (int i = 0; i < k; ++i) {
            const double a = 2.0 * std::numbers::pi * i / k;
            pts.push_back({v[0] + r * std::cos(a), v[1] + r * std::sin(a)});
        }
    return ConvexBody::from_points(2, std::move(pts));
}

namespace {

// Clip a convex polygon by the halfplane <n,x> <= c.
std::vector<Vec> clip_halfplane(const std::vector<Vec>& poly, const Vec& n, double c) {
    if (poly.empty()) return {};
    if (poly.size() == 1) return dot(poly[0], n) <= c ? poly : std::vector<Vec>{};
    std::vector<Vec> out;
    const size_t m = poly.size();
    const bool closed = m >= 3;
    const size_t edges = closed ? m : m - 1;
    for (size_t i = 0; i < edges; ++i) {
        const Vec& a = poly[i];
        const Vec& b = poly[(i + 1) % m];
        const double da = dot(a, n) - c;
        const double db = dot(b, n) - c;
        if (da <= 0.0) out.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            const double t = da / (da - db);
            out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
        }
    }
    if (!closed && !poly.empty()) {
        const Vec& b = poly.back();
        if (dot(b, n) - c <= 0.0) out.push_back(b);
    }
    return out;
}

}  // namespace

ConvexBody intersect_body_ball(const ConvexBody& K, const Vec& center, double r, double tol) {
    require(tol > 0.0, errc::invalid_argument, "intersect_body_ball: tol <= 0");
    require(r > 0.0, errc::invalid_argument, "intersect_body_ball: r <= 0");
    require(K.dim() == 2, errc::invalid_argument, "intersect_body_ball: dim != 2");
    require(!K.is_empty(), errc::invalid_argument, "intersect_body_ball: empty body");

    double maxd = 0.0;
    for (const auto& v : K.vertices()) maxd = std::max(maxd, dist(v, center));
    if (maxd <= r) return K;                       // K inside the ball
    if (set_distance(center, K) > r) return ConvexBody::empty_body(2);  // disjoint

    // Inscribed k-gon of the ball; chord sagitta r (1 - cos(pi/k)) <= tol.
    int k = std::max<int>(8, static_cast<int>(std::ceil(std::numbers::pi / std::sqrt(2.0 * tol / r))));
    for (int attempt = 0; attempt < 4; ++attempt, k *= 2) {
        std::vector<Vec> poly = K.vertices();
        for (int i = 0; i < k && !poly.empty(); ++i) {
            const double a = 2.0 * std::numbers::pi * (i + 0.5) / k;
            const Vec n{std::cos(a), std::sin(a)};
            const double apothem = r * std::cos(std::numbers::pi / k);
            poly = clip_halfplane(poly, n, dot(center, n) + apothem);
        }
        if (!poly.empty()) return ConvexBody::from_points(2, std::move(poly));
    }
    // Sliver case: the true intersection is nonempty (the nearest point of K to the
    // center lies in the ball) but thinner than the polygonal resolution.
    Vec p = center;  // project center onto K by dense edge search
    double best = 1e300;
    const auto& vs = K.vertices();
    for (size_t i = 0; i < vs.size(); ++i) {
        const Vec& a = vs[i];
        const Vec& b = vs[(i + 1) % vs.size()];
        Vec ab = b - a;
        double t = norm2(ab) > 0 ? dot(center - a, ab) / norm2(ab) : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        Vec q = a + t * ab;
        const double d = dist(q, center);
        if (d < best) { best = d; p = q; }
    }
    return ConvexBody::from_points(2, {p});
}

ConvexBody intersect_bodies(const ConvexBody& A, const ConvexBody& B) {
    require(A.dim() == 2 && B.dim() == 2, errc::invalid_argument, "intersect_bodies: dim != 2");
    require(!A.is_empty() && !B.is_empty(), errc::invalid_argument,
            "intersect_bodies: empty body");
    std::vector<Vec> poly = A.vertices();
    const auto& bv = B.vertices();
    if (bv.size() < 3) {
        // degenerate clip body: intersect by membership of A's vertices in B and
        // B's vertices in A (segment/point cases)
        std::vector<Vec> pts;
        for (const auto& v : bv)
            if (A.contains(v)) pts.push_back(v);
        for (const auto& v : poly)
            if (B.contains(v)) pts.push_back(v);
        if (pts.empty()) return ConvexBody::empty_body(2);
        return ConvexBody::from_points(2, std::move(pts));
    }
    for (size_t i = 0; i < bv.size() && !poly.empty(); ++i) {
        const Vec& a = bv[i];
        const Vec& b = bv[(i + 1) % bv.size()];
        // inward normal halfplane of edge a->b (CCW polygon): cross(b-a, x-a) >= 0
        const Vec n{-(b[1] - a[1]), b[0] - a[0]};
        poly = clip_halfplane(poly, {-n[0], -n[1]}, -dot(a, n));
    }
    if (poly.empty()) return ConvexBody::empty_body(2);
    return ConvexBody::from_points(2, std::move(poly));
}

double set_distance(const Vec& p, const ConvexBody& K) {
    require(!K.is_empty(), errc::invalid_argument, "set_distance: empty body");
    if (K.dim() <= 2) return std::sqrt(point_poly_dist_sq<double>(p, K.vertices()));
    // Frank-Wolfe projection onto conv(V) with a duality-gap stop; N >= 3 fallback.
    const auto& vs = K.vertices();
    Vec y = vs[0];
    for (int it = 0; it < 4000; ++it) {
        Vec g = y - p;
        const Vec* best = &vs[0];
        double bestv = dot(vs[0], g);
        for (const auto& v : vs) {
            const double val = dot(v, g);
            if (val < bestv) { bestv = val; best = &v; }
        }
        Vec d = *best - y;
        const double gap = -dot(g, d);
        if (gap <= 1e-14) break;
        const double den = norm2(d);
        const double step = den > 0 ? std::clamp(dot(p - y, d) / den, 0.0, 1.0) : 0.0;
        if (step == 0.0) break;
        y = y + step * d;
    }
    return dist(y, p);
}

double set_distance(const Vec& p, const BallUnion& U) {
    require(U.size() > 0, errc::invalid_argument, "set_distance: empty union");
    double best = 1e300;
    for (int i = 0; i < U.size(); ++i)
        best = std::min(best, std::max(0.0, dist(p, U.centers[i]) - U.radii[i]));
    return best;
}

double set_distance(const Vec& p, const PointCloud& C) {
    require(!C.points.empty(), errc::invalid_argument, "set_distance: empty cloud");
    double best = 1e300;
    for (const auto& q : C.points) best = std::min(best, dist(p, q));
    return best;
}

BallUnion BallUnion::make(int dim, std::vector<Vec> centers, std::vector<double> radii) {
    require(dim >= 1, errc::invalid_argument, "ball union: bad dim");
    require(centers.size() == radii.size() && !centers.empty(), errc::invalid_argument,
            "ball union: centers/radii size mismatch");
    for (double r : radii)
        require(r > 0.0, errc::invalid_argument, "ball union: nonpositive radius");
    for (const auto& c : centers)
        require(static_cast<int>(c.size()) == dim, errc::invalid_argument,
                "ball union: center dimension mismatch");
    BallUnion u;
    u.dim = dim;
    u.centers = std::move(centers);
    u.radii = std::move(radii);
    const int n = u.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(u.centers[i], u.centers[j]) < u.radii[i] + u.radii[j]) {
                u.adjacency.emplace_back(i, j);
                parent[find(i)] = find(j);
            }
    u.connected = true;
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) u.connected = false;
    return u;
}

// ---- Hausdorff distances ----------------------------------------------------

double hausdorff_distance(const ConvexBody& A, const ConvexBody& B, double tol) {
    require(A.dim() == B.dim(), errc::invalid_argument, "hausdorff: dimension mismatch");
    require(!A.is_empty() && !B.is_empty(), errc::invalid_argument, "hausdorff: empty set");
    (void)tol;
    if (A.dim() <= 2) {
        const double d1 = dh_sq_one_sided<double>(A.vertices(), B.vertices());
        const double d2 = dh_sq_one_sided<double>(B.vertices(), A.vertices());
        return std::sqrt(std::max(d1, d2));
    }
    double best = 0.0;
    for (const auto& v : A.vertices()) best = std::max(best, set_distance(v, B));
    for (const auto& v : B.vertices()) best = std::max(best, set_distance(v, A));
    return best;
}

Rat hausdorff_sq_exact(const ConvexBody& A, const ConvexBody& B) {
    require(A.exact_mode() && B.exact_mode(), errc::invalid_argument,
            "hausdorff exact: bodies not exact");
    require(A.dim() <= 2, errc::invalid_argument, "hausdorff exact: dim > 2");
    const Rat d1 = dh_sq_one_sided<Rat>(A.exact_vertices(), B.exact_vertices());
    const Rat d2 = dh_sq_one_sided<Rat>(B.exact_vertices(), A.exact_vertices());
    return std::max(d1, d2);
}

double hausdorff_distance(const PointCloud& A, const PointCloud& B) {
    require(A.dim == B.dim, errc::invalid_argument, "hausdorff: dimension mismatch");
    require(!A.points.empty() && !B.points.empty(), errc::invalid_argument,
            "hausdorff: empty cloud");
    double best = 0.0;
    for (const auto& p : A.points) best = std::max(best, set_distance(p, B));
    for (const auto& p : B.points) best = std::max(best, set_distance(p, A));
    return best;
}

namespace {

// Bounding box of a solid set, as (lo, hi).
std::pair<Vec, Vec> bbox(const ConvexBody& K) {
    Vec lo = K.vertices()[0], hi = K.vertices()[0];
    for (const auto& v : K.vertices())
        for (size_t i = 0; i < v.size(); ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    return {lo, hi};
}

std::pair<Vec, Vec> bbox(const BallUnion& U) {
    Vec lo = U.centers[0], hi = U.centers[0];
    for (int b = 0; b < U.size(); ++b)
        for (size_t i = 0; i < lo.size(); ++i) {
            lo[i] = std::min(lo[i], U.centers[b][i] - U.radii[b]);
            hi[i] = std::max(hi[i], U.centers[b][i] + U.radii[b]);
        }
    return {lo, hi};
}

// Interior grid + boundary samples give covering radius <= g * (sqrt(2)/2 + 1/2):
// snap x in S to the nearest grid center (within g sqrt2 / 2); if that center left S,
// the segment crossed the boundary within that distance, and boundary samples are
// g/2-dense along the boundary.
constexpr double kCoverFactor = 1.2072;  // sqrt(2)/2 + 1/2, rounded up

template <class SetT, class MemberF>
std::vector<Vec> grid_cover(const SetT& S, double g, MemberF inside) {
    auto [lo, hi] = bbox(S);
    std::vector<Vec> pts;
    if (lo.size() == 1) {
        for (double x = lo[0]; x <= hi[0] + g; x += g)
            if (inside(Vec{x})) pts.push_back({x});
        return pts;
    }
    for (double x = lo[0] + g / 2; x < hi[0] + g; x += g)
        for (double y = lo[1] + g / 2; y < hi[1] + g; y += g)
            if (inside(Vec{x, y})) pts.push_back({x, y});
    return pts;
}

}  // namespace

std::vector<Vec> cover_points(const ConvexBody& K, double h) {
    require(K.dim() <= 2, errc::invalid_argument, "cover_points: dim > 2");
    require(h > 0.0, errc::invalid_argument, "cover_points: h <= 0");
    const double g = h / kCoverFactor;
    std::vector<Vec> pts = K.vertices();
    if (K.dim() == 1) {
        for (double x = K.vertices().front()[0]; x < K.vertices().back()[0]; x += g)
            pts.push_back({x});
        return pts;
    }
    const auto& vs = K.vertices();
    for (size_t i = 0; i < vs.size() && vs.size() >= 2; ++i) {  // boundary at spacing g/2
        const Vec& a = vs[i];
        const Vec& b = vs[(i + 1) % vs.size()];
        const double len = dist(a, b);
        const int steps = std::max(1, static_cast<int>(std::ceil(len / (g / 2))));
        for (int s = 1; s < steps; ++s) {
            const double t = static_cast<double>(s) / steps;
            pts.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
        }
    }
    auto interior = grid_cover(K, g, [&](const Vec& p) { return K.contains(p); });
    pts.insert(pts.end(), interior.begin(), interior.end());
    return pts;
}

std::vector<Vec> cover_points(const BallUnion& U, double h) {
    require(U.dim <= 2, errc::invalid_argument, "cover_points: dim > 2");
    require(h > 0.0, errc::invalid_argument, "cover_points: h <= 0");
    const double g = h / kCoverFactor;
    std::vector<Vec> pts;
    if (U.dim == 1) {
        for (int b = 0; b < U.size(); ++b)
            for (double x = U.centers[b][0] - U.radii[b]; x <= U.centers[b][0] + U.radii[b] + g;
                 x += g)
                pts.push_back({std::min(x, U.centers[b][0] + U.radii[b])});
        return pts;
    }
    for (int b = 0; b < U.size(); ++b) {  // circles at arc spacing g/2
        const double r = U.radii[b];
        const int steps = std::max(8, static_cast<int>(std::ceil(2.0 * std::numbers::pi * r / (g / 2))));
        for (int s = 0; s < steps; ++s) {
            const double a = 2.0 * std::numbers::pi * s / steps;
            pts.push_back({U.centers[b][0] + r * std::cos(a), U.centers[b][1] + r * std::sin(a)});
        }
    }
    auto inside = [&](const Vec& p) {
        for (int b = 0; b < U.size(); ++b)
            if (dist(p, U.centers[b]) <= U.radii[b]) return true;
        return false;
    };
    auto interior = grid_cover(U, g, inside);
    pts.insert(pts.end(), interior.begin(), interior.end());
    return pts;
}

namespace {

// Certified one-sided sup of d(., other) over a covered solid side.
template <class CoverSet, class DistF>
double covered_side(const CoverSet& S, double tol, DistF dist_to_other) {
    const double h = tol;
    double best = 0.0;
    for (const auto& p : cover_points(S, h)) best = std::max(best, dist_to_other(p));
    return best + h / 2;  // true sup lies in [best, best + h]; split the bracket
}

}  // namespace

double hausdorff_distance(const PointCloud& A, const ConvexBody& B, double tol) {
    require(A.dim == B.dim(), errc::invalid_argument, "hausdorff: dimension mismatch");
    double cloud_side = 0.0;
    for (const auto& p : A.points) cloud_side = std::max(cloud_side, set_distance(p, B));
    const double body_side =
        covered_side(B, tol, [&](const Vec& p) { return set_distance(p, A); });
    return std::max(cloud_side, body_side);
}

double hausdorff_distance(const PointCloud& A, const BallUnion& B, double tol) {
    require(A.dim == B.dim, errc::invalid_argument, "hausdorff: dimension mismatch");
    double cloud_side = 0.0;
    for (const auto& p : A.points) cloud_side = std::max(cloud_side, set_distance(p, B));
    const double union_side =
        covered_side(B, tol, [&](const Vec& p) { return set_distance(p, A); });
    return std::max(cloud_side, union_side);
}

double hausdorff_distance(const ConvexBody& A, const BallUnion& B, double tol) {
    require(A.dim() == B.dim, errc::invalid_argument, "hausdorff: dimension mismatch");
    const double body_side =
        covered_side(A, tol, [&](const Vec& p) { return set_distance(p, B); });
    const double union_side =
        covered_side(B, tol, [&](const Vec& p) { return set_distance(p, A); });
    return std::max(body_side, union_side);
}

double hausdorff_distance(const BallUnion& A, const BallUnion& B, double tol) {
    require(A.dim == B.dim, errc::invalid_argument, "hausdorff: dimension mismatch");
    const double a_side = covered_side(A, tol, [&](const Vec& p) { return set_distance(p, B); });
    const double b_side = covered_side(B, tol, [&](const Vec& p) { return set_distance(p, A); });
    return std::max(a_side, b_side);
}

}  // namespace subdiff
