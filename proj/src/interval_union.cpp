#include "favard/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace favard {

IntervalUnion IntervalUnion::normalize(std::vector<Interval> raw) {
    for (const Interval& iv : raw) {
        if (!(iv.lo <= iv.hi)) {
            throw std::invalid_argument("IntervalUnion: inverted interval [" +
                                        std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "]");
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });

    IntervalUnion out;
    out.parts_.reserve(raw.size());
    for (const Interval& iv : raw) {
        if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi + merge_epsilon) {
            if (iv.hi > out.parts_.back().hi) out.parts_.back().hi = iv.hi;
        } else {
            out.parts_.push_back(iv);
        }
    }
    return out;
}

double IntervalUnion::measure() const {
    double total = 0.0;
    for (const Interval& iv : parts_) total += iv.hi - iv.lo;
    return total;
}

bool IntervalUnion::contains(double t) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    if (it == parts_.begin()) return false;
    --it;
    return t <= it->hi;
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    std::vector<Interval> pieces;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const Interval& a = parts_[i];
        const Interval& b = other.parts_[j];
        const double lo = std::max(a.lo, b.lo);
        const double hi = std::min(a.hi, b.hi);
        if (lo <= hi) pieces.push_back({lo, hi});
        if (a.hi < b.hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return normalize(std::move(pieces));
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
    std::vector<Interval> pieces = parts_;
    pieces.insert(pieces.end(), other.parts_.begin(), other.parts_.end());
    return normalize(std::move(pieces));
}

Interval dilate(double center, double half_width, double factor) {
    if (half_width < 0.0 || factor < 0.0) {
        throw std::invalid_argument("dilate: half_width and factor must be nonnegative");
    }
    return {center - factor * half_width, center + factor * half_width};
}

}  // namespace favard
