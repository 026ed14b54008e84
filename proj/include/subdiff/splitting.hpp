#pragma once

#include <cstdint>
#include <vector>

#include "subdiff/common.hpp"

namespace subdiff {

// Fat (Smith-Volterra) Cantor set in a host interval. Step j removes from each of
// the 2^(j-1) current intervals a middle gap of length H * ratio^j, H the host
// length; the default ratio 1/4 removes half the host in total. The self-similar
// recursion gives an O(log 1/tol) measure oracle.
class FatCantorSet {
public:
    FatCantorSet() = default;
    FatCantorSet(double lo, double hi, double ratio = 0.25);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double ratio() const { return ratio_; }
    double total_measure() const;

    // Lebesgue measure of the set inside [a,b], within tol.
    double measure_in(double a, double b, double tol) const;

    enum class Membership { inside, outside, undecided };
    Membership membership(double x, int depth) const;

private:
    double lo_ = 0.0, hi_ = 1.0, ratio_ = 0.25;

    double node_measure(int level, double len) const;
    double rec_measure(double nlo, double nlen, int level, double a, double b,
                       double tol) const;
};

// One fat Cantor set scheduled inside every dyadic interval of every level <= depth,
// all sets pairwise disjoint because each lives in its own dyadic cell of a fixed
// finer level. The union splits every dyadic interval of level <= depth with margin
// beta(level) on both sides.
class SplittingSet {
public:
    struct Placement {
        int level = 0;
        uint64_t interval = 0;  // index of the dyadic interval the set serves
        FatCantorSet set;
    };

    int depth() const { return depth_; }
    int host_level() const { return host_level_; }
    const std::vector<Placement>& placements() const { return placed_; }

    // Measure of the union inside [a,b], within tol.
    double measure_in(double a, double b, double tol) const;

    // Lower bound for both measure(A ∩ I) and measure(I \ A) over dyadic intervals
    // I of the given level.
    double beta(int level) const;

    friend SplittingSet build_splitting_set(int depth);
    friend class SplittingBuilder;

private:
    int depth_ = 0;
    int host_level_ = 0;
    std::vector<Placement> placed_;  // sorted by host interval
};

SplittingSet build_splitting_set(int depth);

// Finite truncation of the countable splitting partition: k pairwise-disjoint sets,
// each splitting every dyadic interval of level <= depth; the remainder completes
// the partition of [0,1].
struct SplittingPartition {
    std::vector<SplittingSet> parts;
    double remainder_measure(double tol) const;
};

SplittingPartition splitting_partition(int k, int depth);

}  // namespace subdiff
