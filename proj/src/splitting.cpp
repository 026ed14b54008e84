#include "subdiff/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace subdiff {

FatCantorSet::FatCantorSet(double lo, double hi, double ratio)
    : lo_(lo), hi_(hi), ratio_(ratio) {
    require(hi > lo, errc::invalid_argument, "fat cantor: empty host");
    // sum over j of 2^(j-1) ratio^j = ratio / (1 - 2 ratio) must stay below 1
    require(ratio > 0.0 && ratio < 1.0 / 3.0, errc::invalid_argument,
            "fat cantor: ratio must lie in (0, 1/3)");
}

double FatCantorSet::node_measure(int level, double len) const {
    const double removed =
        (hi_ - lo_) * std::pow(ratio_, level + 1) / (1.0 - 2.0 * ratio_);
    return std::max(0.0, len - removed);
}

double FatCantorSet::total_measure() const { return node_measure(0, hi_ - lo_); }

double FatCantorSet::rec_measure(double nlo, double nlen, int level, double a, double b,
                                 double tol) const {
    if (b <= nlo || a >= nlo + nlen) return 0.0;
    if (a <= nlo && b >= nlo + nlen) return node_measure(level, nlen);
    if (nlen < tol / 2.0) {
        const double overlap = std::min(b, nlo + nlen) - std::max(a, nlo);
        return node_measure(level, nlen) * overlap / nlen;  // truncated branch
    }
    const double gap = (hi_ - lo_) * std::pow(ratio_, level + 1);
    const double child = (nlen - gap) / 2.0;
    return rec_measure(nlo, child, level + 1, a, b, tol) +
           rec_measure(nlo + child + gap, child, level + 1, a, b, tol);
}

double FatCantorSet::measure_in(double a, double b, double tol) const {
    require(tol > 0.0, errc::invalid_argument, "measure_in: tol <= 0");
    a = std::max(a, lo_);
    b = std::min(b, hi_);
    if (b <= a) return 0.0;
    return rec_measure(lo_, hi_ - lo_, 0, a, b, tol);
}

FatCantorSet::Membership FatCantorSet::membership(double x, int depth) const {
    require(depth >= 1, errc::invalid_argument, "membership: depth < 1");
    if (x < lo_ || x > hi_) return Membership::outside;
    double nlo = lo_, nlen = hi_ - lo_;
    for (int level = 0; level < depth; ++level) {
        const double gap = (hi_ - lo_) * std::pow(ratio_, level + 1);
        const double child = (nlen - gap) / 2.0;
        const double glo = nlo + child, ghi = nlo + child + gap;
        if (x > glo && x < ghi) return Membership::outside;
        if (x <= glo) {
            nlen = child;
        } else {
            nlo = ghi;
            nlen = child;
        }
    }
    if (x == nlo || x == nlo + nlen) return Membership::inside;
    return Membership::undecided;
}

// ---- SplittingSet -------------------------------------------------------------

namespace {

std::string dyadic_name(int level, uint64_t i) {
    return "[" + std::to_string(i) + "/2^" + std::to_string(level) + ", " +
           std::to_string(i + 1) + "/2^" + std::to_string(level) + "]";
}

int host_level_for(int depth, int parts) {
    int extra = 2;
    const uint64_t need = static_cast<uint64_t>(parts) * (depth + 2);
    while ((1ULL << extra) <= need) ++extra;
    return depth + extra + 1;
}

// Place one fat Cantor set per (part, dyadic interval), every host being a distinct
// dyadic cell of level host_level; disjointness is then a disjointness of cells.
std::vector<SplittingSet> place_all(int parts, int depth) {
    require(depth >= 1, errc::invalid_argument, "splitting: depth < 1");
    const int hl = host_level_for(depth, parts);
    require(hl <= 48, errc::budget, "splitting: k*depth exceeds placement capacity");
    std::set<uint64_t> used;
    std::vector<SplittingSet> out(parts);
    for (auto& s : out) {
        s.depth_ = depth;
        s.host_level_ = hl;
    }
    const double cell = std::ldexp(1.0, -hl);
    for (int level = 0; level <= depth; ++level) {
        for (uint64_t i = 0; i < (1ULL << level); ++i) {
            for (int p = 0; p < parts; ++p) {
                const uint64_t base = i << (hl - level);
                const uint64_t count = 1ULL << (hl - level);
                // scan cells middle-out for a free one
                uint64_t found = count;
                for (uint64_t step = 0; step < count; ++step) {
                    const uint64_t off =
                        (step % 2 == 0) ? count / 2 + step / 2 : count / 2 - (step + 1) / 2;
                    if (off >= count) continue;
                    if (!used.count(base + off)) {
                        found = base + off;
                        break;
                    }
                }
                require(found < base + count, errc::construction,
                        "splitting: no free cell in dyadic interval " +
                            dyadic_name(level, i));
                used.insert(found);
                SplittingSet::Placement pl;
                pl.level = level;
                pl.interval = i;
                pl.set = FatCantorSet(found * cell, (found + 1) * cell);
                out[p].placed_.push_back(pl);
            }
        }
    }
    for (auto& s : out)
        std::sort(s.placed_.begin(), s.placed_.end(),
                  [](const auto& a, const auto& b) { return a.set.lo() < b.set.lo(); });
    return out;
}

}  // namespace

double SplittingSet::measure_in(double a, double b, double tol) const {
    require(tol > 0.0, errc::invalid_argument, "measure_in: tol <= 0");
    if (b <= a) return 0.0;
    // hosts are disjoint cells, so only those meeting [a,b] contribute
    auto first = std::lower_bound(placed_.begin(), placed_.end(), a,
                                  [](const Placement& p, double v) { return p.set.hi() < v; });
    int overlapping = 0;
    for (auto it = first; it != placed_.end() && it->set.lo() < b; ++it) ++overlapping;
    if (overlapping == 0) return 0.0;
    const double tol_each = tol / overlapping;
    double m = 0.0;
    for (auto it = first; it != placed_.end() && it->set.lo() < b; ++it)
        m += it->set.measure_in(a, b, tol_each);
    return m;
}

double SplittingSet::beta(int) const {
    // each dyadic interval owns one full set: half of one host cell
    return std::ldexp(1.0, -host_level_ - 1);
}

SplittingSet build_splitting_set(int depth) { return place_all(1, depth)[0]; }

SplittingPartition splitting_partition(int k, int depth) {
    require(k >= 2, errc::invalid_argument, "splitting_partition: k < 2");
    SplittingPartition p;
    p.parts = place_all(k, depth);
    return p;
}

double SplittingPartition::remainder_measure(double tol) const {
    double total = 0.0;
    for (const auto& part : parts) total += part.measure_in(0.0, 1.0, tol / parts.size());
    return 1.0 - total;
}

}  // namespace subdiff
