#include "subdiff/coding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace subdiff {

Vec hilbert_point(double t, int depth) {
    require(t >= 0.0 && t <= 1.0, errc::invalid_argument, "hilbert_point: t outside [0,1]");
    require(depth >= 1, errc::invalid_argument, "hilbert_point: depth < 1");
    // Frame (o; u, v): the current cell is o + [0,1] u + [0,1] v, the curve enters at
    // o and leaves at o + u.
    double ox = 0, oy = 0, ux = 1, uy = 0, vx = 0, vy = 1;
    for (int d = 0; d < depth; ++d) {
        int q = std::min(3, static_cast<int>(std::floor(4.0 * t)));
        t = 4.0 * t - q;
        switch (q) {
            case 0: {  // transposed lower-left cell
                std::swap(ux, vx);
                std::swap(uy, vy);
                ux /= 2; uy /= 2; vx /= 2; vy /= 2;
                break;
            }
            case 1:
                ox += vx / 2; oy += vy / 2;
                ux /= 2; uy /= 2; vx /= 2; vy /= 2;
                break;
            case 2:
                ox += ux / 2 + vx / 2; oy += uy / 2 + vy / 2;
                ux /= 2; uy /= 2; vx /= 2; vy /= 2;
                break;
            case 3: {  // rotated lower-right cell, reversed axes
                ox += ux + vx / 2; oy += uy + vy / 2;
                const double nux = -vx / 2, nuy = -vy / 2;
                vx = -ux / 2; vy = -uy / 2;
                ux = nux; uy = nuy;
                break;
            }
        }
    }
    return {ox + t * ux, oy + t * uy};
}

CurvePoint2D fold(const Vec& p) {
    return {std::min(p[0], p[1]), std::max(p[0], p[1])};
}

CurvePoint2D triangle_curve(double t, int depth) { return fold(hilbert_point(t, depth)); }

// ---- Cantor machinery --------------------------------------------------------

namespace {

struct Host {
    std::vector<std::pair<double, double>> gaps;        // merged, sorted, open
    std::vector<std::pair<double, double>> components;  // closed intervals of F

    // Lebesgue measure of F inside [a, b].
    double measure(double a, double b) const {
        if (b <= a) return 0.0;
        double m = b - a;
        for (const auto& g : gaps) {
            if (g.second <= a) continue;
            if (g.first >= b) break;
            m -= std::min(b, g.second) - std::max(a, g.first);
        }
        return std::max(0.0, m);
    }

    const std::pair<double, double>* gap_containing(double x) const {
        for (const auto& g : gaps)
            if (x > g.first && x < g.second) return &g;
        return nullptr;
    }

    // Snap into F: largest F point <= x (down) or smallest >= x (up).
    double snap_down(double x) const {
        const auto* g = gap_containing(x);
        return g ? g->first : x;
    }
    double snap_up(double x) const {
        const auto* g = gap_containing(x);
        return g ? g->second : x;
    }
};

Host make_host(std::vector<std::pair<double, double>> gaps) {
    for (auto& g : gaps) {
        g.first = std::max(g.first, 0.0);
        g.second = std::min(g.second, 1.0);
    }
    gaps.erase(std::remove_if(gaps.begin(), gaps.end(),
                              [](const auto& g) { return g.second <= g.first; }),
               gaps.end());
    std::sort(gaps.begin(), gaps.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& g : gaps) {
        if (!merged.empty() && g.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, g.second);
        else
            merged.push_back(g);
    }
    Host h;
    h.gaps = merged;
    double lo = 0.0;
    for (const auto& g : h.gaps) {
        if (g.first > lo) h.components.push_back({lo, g.first});
        lo = g.second;
    }
    if (lo < 1.0) h.components.push_back({lo, 1.0});
    return h;
}

std::string word_string(uint64_t index, int len) {
    std::string s(len, '0');
    for (int j = 0; j < len; ++j)
        if (index & (1ULL << (len - 1 - j))) s[j] = '1';
    return s;
}

// F-measure median of [a,b]: c with measure(a,c) = measure(a,b)/2, found by
// bisection (the measure is continuous and nondecreasing in c).
double measure_median(const Host& h, double a, double b) {
    const double half = h.measure(a, b) / 2.0;
    double lo = a, hi = b;
    for (int it = 0; it < 200 && hi - lo > 1e-300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (h.measure(a, mid) < half)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void split_node(const Host& h, double a, double b, int levels_left, uint64_t word, int word_len,
                std::vector<std::pair<double, double>>& out) {
    const double mu = h.measure(a, b);
    require(mu > 0x1.0p-40, errc::budget,
            "build_cantor_in: refine failure at word " + word_string(word, word_len));
    if (levels_left == 0) {
        // Shrink the leaf into the largest single-component piece so it avoids
        // every host gap.
        double best_lo = a, best_hi = a;
        for (const auto& comp : h.components) {
            const double lo = std::max(a, comp.first);
            const double hi = std::min(b, comp.second);
            if (hi - lo > best_hi - best_lo) { best_lo = lo; best_hi = hi; }
        }
        require(best_hi > best_lo, errc::budget,
                "build_cantor_in: empty leaf at word " + word_string(word, word_len));
        out.push_back({best_lo, best_hi});
        return;
    }
    const double c = measure_median(h, a, b);
    double left_hi, right_lo;
    if (const auto* g = h.gap_containing(c)) {
        left_hi = g->first;
        right_lo = g->second;
    } else {
        const double w = mu / 6.0;
        left_hi = h.snap_down(c - w);
        right_lo = h.snap_up(c + w);
    }
    split_node(h, a, left_hi, levels_left - 1, word << 1, word_len + 1, out);
    split_node(h, right_lo, b, levels_left - 1, (word << 1) | 1, word_len + 1, out);
}

}  // namespace

CantorApprox build_cantor_in(const std::vector<std::pair<double, double>>& gaps, int depth) {
    require(depth >= 1, errc::invalid_argument, "build_cantor_in: depth < 1");
    double total = 0.0;
    for (const auto& g : gaps) total += std::max(0.0, g.second - g.first);
    require(total < 1.0, errc::invalid_argument,
            "build_cantor_in: gap lengths sum to >= 1 (need sum of half-widths < 1/2)");
    Host h = make_host(gaps);
    CantorApprox c;
    c.depth = depth;
    c.merged_gaps = h.gaps;
    split_node(h, h.components.front().first, h.components.back().second, depth, 0, 0,
               c.leaves);
    return c;
}

int CantorApprox::leaf_containing(double x) const {
    auto it = std::upper_bound(leaves.begin(), leaves.end(), x,
                               [](double v, const auto& l) { return v < l.first; });
    if (it == leaves.begin()) return -1;
    --it;
    return x <= it->second ? static_cast<int>(it - leaves.begin()) : -1;
}

double cantor_code(const std::vector<int>& word) {
    double c = 0.0;
    double w = 0.5;
    for (int bit : word) {
        if (bit) c += w;
        w /= 2.0;
    }
    return c;
}

std::vector<int> word_of_index(uint64_t index, int depth) {
    std::vector<int> w(depth);
    for (int j = 0; j < depth; ++j) w[j] = (index >> (depth - 1 - j)) & 1ULL;
    return w;
}

CantorExtension::CantorExtension(CantorApprox approx) : approx_(std::move(approx)) {}

double CantorExtension::code_of_leaf(int i) const {
    return std::ldexp(static_cast<double>(i), -approx_.depth);
}

double CantorExtension::operator()(double x) const {
    const auto& ls = approx_.leaves;
    if (x <= ls.front().second) {
        if (x >= ls.front().first) return code_of_leaf(0);
        // left of the first leaf: ramp from 0; the first code is 0, so constant.
        return 0.0;
    }
    if (x >= ls.back().first) {
        if (x <= ls.back().second) return code_of_leaf(approx_.leaf_count() - 1);
        const double c0 = code_of_leaf(approx_.leaf_count() - 1);
        const double lo = ls.back().second;
        if (x >= 1.0) return 1.0;
        return c0 + (1.0 - c0) * (x - lo) / (1.0 - lo);
    }
    int idx = approx_.leaf_containing(x);
    if (idx >= 0) return code_of_leaf(idx);
    // inside the gap between leaf i and i+1
    auto it = std::upper_bound(ls.begin(), ls.end(), x,
                               [](double v, const auto& l) { return v < l.first; });
    const int i = static_cast<int>(it - ls.begin()) - 1;
    const double lo = ls[i].second, hi = ls[i + 1].first;
    const double c0 = code_of_leaf(i), c1 = code_of_leaf(i + 1);
    return c0 + (c1 - c0) * (x - lo) / (hi - lo);
}

double CantorExtension::max_slope(double lo, double hi) const {
    const auto& ls = approx_.leaves;
    double m = 0.0;
    for (int i = 0; i + 1 < approx_.leaf_count(); ++i) {
        const double glo = ls[i].second, ghi = ls[i + 1].first;
        if (ghi <= lo || glo >= hi) continue;
        m = std::max(m, (code_of_leaf(i + 1) - code_of_leaf(i)) / (ghi - glo));
    }
    if (hi > ls.back().second) {
        const double c0 = code_of_leaf(approx_.leaf_count() - 1);
        m = std::max(m, (1.0 - c0) / (1.0 - ls.back().second));
    }
    return m;
}

// ---- Nets and tours ----------------------------------------------------------

std::vector<ConvexBody> body_net(const ConvexBody& C, int m, double delta,
                                 std::size_t family_cap) {
    require(C.dim() == 2, errc::invalid_argument, "body_net: dim != 2");
    require(m >= 8, errc::invalid_argument, "body_net: m < 8");
    require(delta > 0.0, errc::invalid_argument, "body_net: delta <= 0");
    require(C.contains(Vec{0.0, 0.0}, 1e-12), errc::invalid_argument, "body_net: 0 not in C");

    std::vector<Vec> dirs;
    std::vector<int> levels;
    std::size_t count = 1;
    for (int j = 0; j < m; ++j) {
        const double a = 2.0 * std::numbers::pi * j / m;
        dirs.push_back({std::cos(a), std::sin(a)});
        const double s = std::max(0.0, support_value(C, dirs.back()));
        levels.push_back(static_cast<int>(std::floor(s / delta)) + 1);
        count *= static_cast<std::size_t>(levels.back());
        require(count <= family_cap, errc::budget, "body_net: family exceeds cap");
    }

    std::vector<ConvexBody> family;
    std::vector<int> idx(m, 0);
    while (true) {
        std::vector<Vec> poly = C.vertices();
        for (int j = 0; j < m && !poly.empty(); ++j) {
            // clip by <u_j, x> <= idx[j] * delta
            std::vector<Vec> out;
            const double c = idx[j] * delta;
            const size_t n = poly.size();
            if (n == 1) {
                if (dot(poly[0], dirs[j]) <= c) out = poly;
            } else {
                const bool closed = n >= 3;
                const size_t edges = closed ? n : n - 1;
                for (size_t i = 0; i < edges; ++i) {
                    const Vec& a = poly[i];
                    const Vec& b = poly[(i + 1) % n];
                    const double da = dot(a, dirs[j]) - c;
                    const double db = dot(b, dirs[j]) - c;
                    if (da <= 0.0) out.push_back(a);
                    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
                        const double t = da / (da - db);
                        out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
                    }
                }
                if (!closed) {
                    const Vec& b = poly.back();
                    if (dot(b, dirs[j]) - c <= 0.0) out.push_back(b);
                }
            }
            poly = std::move(out);
        }
        if (poly.empty()) poly.push_back({0.0, 0.0});  // 0 always satisfies the cuts
        ConvexBody K = ConvexBody::from_points(2, std::move(poly));
        if (std::find(family.begin(), family.end(), K) == family.end())
            family.push_back(std::move(K));

        int j = m - 1;
        while (j >= 0 && ++idx[j] == levels[j]) idx[j--] = 0;
        if (j < 0) break;
    }
    return family;
}

BodyTour BodyTour::geodesic(std::vector<ConvexBody> knots) {
    require(!knots.empty(), errc::invalid_argument, "tour: no knots");
    for (const auto& k : knots)
        require(k.contains(Vec(k.dim(), 0.0), 1e-12), errc::invalid_argument,
                "tour: knot does not contain 0");
    BodyTour t;
    t.mode_ = Mode::geodesic;
    const int n = static_cast<int>(knots.size());
    int k = 0;
    while ((1 << k) < std::max(1, n - 1)) ++k;
    for (int i = 0; i < n; ++i) t.params_.push_back(std::ldexp(static_cast<double>(i), -k));
    double lip = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double leg = hausdorff_distance(knots[i], knots[i + 1]);
        lip = std::max(lip, leg / (t.params_[i + 1] - t.params_[i]));
    }
    t.lipschitz_ = lip;
    t.knots_ = std::move(knots);
    return t;
}

BodyTour BodyTour::cantor(std::vector<BallUnion> knots) {
    require(!knots.empty(), errc::invalid_argument, "tour: no knots");
    const auto n = knots.size();
    require((n & (n - 1)) == 0, errc::invalid_argument,
            "tour: cantor mode needs a power-of-two knot count");
    int depth = 0;
    while ((1u << depth) < n) ++depth;
    for (const auto& u : knots) {
        Vec zero(u.dim, 0.0);
        require(set_distance(zero, u) <= 1e-12, errc::invalid_argument,
                "tour: knot does not contain 0");
        require(u.connected, errc::invalid_argument, "tour: disconnected knot in cantor mode");
    }
    BodyTour t;
    t.mode_ = Mode::cantor;
    t.base_ = build_cantor_in({}, std::max(1, depth));
    t.ball_knots_ = std::move(knots);
    for (int i = 0; i < t.base_.leaf_count(); ++i)
        t.params_.push_back(0.5 * (t.base_.leaves[i].first + t.base_.leaves[i].second));
    return t;
}

int BodyTour::knot_count() const {
    return mode_ == Mode::geodesic ? static_cast<int>(knots_.size())
                                   : static_cast<int>(ball_knots_.size());
}

ConvexBody BodyTour::eval(double t) const {
    require(mode_ == Mode::geodesic, errc::invalid_argument, "tour eval: not geodesic");
    require(t >= 0.0 && t <= 1.0, errc::invalid_argument, "tour eval: t outside [0,1]");
    if (t <= params_.front()) return knots_.front();
    if (t >= params_.back()) return knots_.back();
    auto it = std::upper_bound(params_.begin(), params_.end(), t);
    const int i = static_cast<int>(it - params_.begin()) - 1;
    const double lam = (t - params_[i]) / (params_[i + 1] - params_[i]);
    if (lam == 0.0) return knots_[i];
    return minkowski_interpolate(knots_[i], knots_[i + 1], lam);
}

int BodyTour::knot_index_at(double t) const {
    require(mode_ == Mode::cantor, errc::invalid_argument, "tour: not cantor mode");
    const int leaf = base_.leaf_containing(t);
    if (leaf < 0) return -1;
    // depth-1 tour with a single knot: map every leaf to knot 0
    return leaf % static_cast<int>(ball_knots_.size());
}

const BallUnion& BodyTour::ball_knot_at(double t) const {
    const int i = knot_index_at(t);
    require(i >= 0, errc::invalid_argument, "tour: t not inside any cantor leaf");
    return ball_knots_[static_cast<size_t>(i)];
}

}  // namespace subdiff
