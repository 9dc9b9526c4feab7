#pragma once

#include <string>
#include <utility>
#include <vector>

#include "favard/geometry.hpp"

namespace favard {

// Finite disjoint union of closed 1-D intervals, kept sorted.  Carrier of the
// 1-D Lebesgue measure of every projection image in this library.
//
// Gaps narrower than merge_epsilon are fused during normalization: projection
// endpoints come out of floating-point arithmetic and sub-epsilon slivers are
// numerical noise.
class IntervalUnion {
  public:
    static constexpr double merge_epsilon = 1e-12;

    IntervalUnion() = default;

    // Sorts, validates and merges raw interval data.  Throws
    // std::invalid_argument on an inverted pair (lo > hi).
    static IntervalUnion normalize(std::vector<Interval> raw);

    const std::vector<Interval>& intervals() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    // Total length, Sum(hi - lo).
    double measure() const;

    bool contains(double t) const;

    IntervalUnion intersect(const IntervalUnion& other) const;
    IntervalUnion unite(const IntervalUnion& other) const;

    bool operator==(const IntervalUnion& other) const { return parts_ == other.parts_; }

  private:
    std::vector<Interval> parts_;
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

// Interval with the same center and `factor` times the half-width (the 5J of
// a Vitali cover when factor = 5).
Interval dilate(double center, double half_width, double factor);

}  // namespace favard
