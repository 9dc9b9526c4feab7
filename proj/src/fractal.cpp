#include "favard/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "favard/rng.hpp"

namespace favard {
namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

}  // namespace

SquareSet::SquareSet(int generation, int base,
                     std::vector<std::pair<std::int64_t, std::int64_t>> squares)
    : n_(generation), base_(base), denom_(ipow(base, generation)), squares_(std::move(squares)) {
    if (generation < 0) throw std::invalid_argument("SquareSet: generation must be nonnegative");
    if (base < 2) throw std::invalid_argument("SquareSet: base must be at least 2");
    std::sort(squares_.begin(), squares_.end());
    squares_.erase(std::unique(squares_.begin(), squares_.end()), squares_.end());
    for (const auto& [i, j] : squares_) {
        if (i < 0 || j < 0 || i >= denom_ || j >= denom_) {
            throw std::invalid_argument("SquareSet: square outside the unit square");
        }
    }
}

Rect SquareSet::square_rect(std::size_t k) const {
    const double s = side();
    const auto& [i, j] = squares_[k];
    return {static_cast<double>(i) * s, static_cast<double>(i + 1) * s,
            static_cast<double>(j) * s, static_cast<double>(j + 1) * s};
}

bool SquareSet::contains_point(double x, double y) const {
    if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) return false;
    const double d = static_cast<double>(denom_);
    auto candidates = [&](double v, std::int64_t out[2]) {
        const double scaled = v * d;
        std::int64_t cell = static_cast<std::int64_t>(scaled);
        if (cell >= denom_) cell = denom_ - 1;
        out[0] = cell;
        out[1] = (scaled == static_cast<double>(cell) && cell > 0) ? cell - 1 : cell;
    };
    std::int64_t xs[2], ys[2];
    candidates(x, xs);
    candidates(y, ys);
    for (std::int64_t i : {xs[0], xs[1]}) {
        for (std::int64_t j : {ys[0], ys[1]}) {
            if (std::binary_search(squares_.begin(), squares_.end(), std::make_pair(i, j))) {
                return true;
            }
        }
    }
    return false;
}

IntervalUnion SquareSet::x_shadow() const {
    const double s = side();
    std::vector<Interval> parts;
    parts.reserve(squares_.size());
    for (const auto& [i, j] : squares_) {
        parts.push_back({static_cast<double>(i) * s, static_cast<double>(i + 1) * s});
    }
    return IntervalUnion::normalize(std::move(parts));
}

ProductMembership product_membership(const SquareSet& s) {
    ProductMembership m;
    m.denom = s.scale_denominator();
    m.scale = static_cast<double>(m.denom);
    m.valid_x.assign(static_cast<std::size_t>(m.denom), 0);
    m.valid_y.assign(static_cast<std::size_t>(m.denom), 0);
    for (const auto& [i, j] : s.squares()) {
        m.valid_x[static_cast<std::size_t>(i)] = 1;
        m.valid_y[static_cast<std::size_t>(j)] = 1;
    }
    std::size_t nx = 0, ny = 0;
    for (std::uint8_t v : m.valid_x) nx += v;
    for (std::uint8_t v : m.valid_y) ny += v;
    if (nx * ny != s.count()) {
        throw std::invalid_argument("product_membership: square set is not a product of its shadows");
    }
    return m;
}

BoundarySet::BoundarySet(SquareSet parent, std::vector<Segment> segments)
    : parent_(std::move(parent)), segments_(std::move(segments)) {}

double BoundarySet::total_length() const {
    double sum = 0.0;
    for (const Segment& seg : segments_) sum += seg.length();
    return sum;
}

SquareSet cantor_generation(int n, int max_generation) {
    return corner_ifs_generation(n, {0, 3}, 4, max_generation);
}

SquareSet corner_ifs_generation(int n, const std::vector<int>& digit_set, int base,
                                int max_generation) {
    if (n < 0 || n > max_generation) {
        throw std::invalid_argument("corner_ifs_generation: n must lie in [0, " +
                                    std::to_string(max_generation) + "]");
    }
    if (base < 2) throw std::invalid_argument("corner_ifs_generation: base must be at least 2");
    if (digit_set.empty()) throw std::invalid_argument("corner_ifs_generation: empty digit set");
    std::vector<int> digits = digit_set;
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    for (int d : digits) {
        if (d < 0 || d >= base) {
            throw std::invalid_argument("corner_ifs_generation: digit outside [0, base)");
        }
    }

    // Axis values Sum a_j base^{n-j} with a_j in the digit set, built most
    // significant digit first so the list comes out sorted.
    std::vector<std::int64_t> axis{0};
    for (int level = 0; level < n; ++level) {
        std::vector<std::int64_t> next;
        next.reserve(axis.size() * digits.size());
        for (std::int64_t v : axis) {
            for (int d : digits) next.push_back(v * base + d);
        }
        axis = std::move(next);
    }

    std::vector<std::pair<std::int64_t, std::int64_t>> squares;
    squares.reserve(axis.size() * axis.size());
    for (std::int64_t i : axis) {
        for (std::int64_t j : axis) squares.emplace_back(i, j);
    }
    return SquareSet(n, base, std::move(squares));
}

BoundarySet boundary(const SquareSet& s) {
    std::vector<Segment> segments;
    segments.reserve(4 * s.count());
    for (std::size_t k = 0; k < s.count(); ++k) {
        const Rect r = s.square_rect(k);
        segments.push_back({r.x0, r.y0, r.x1, r.y0});  // bottom
        segments.push_back({r.x0, r.y1, r.x1, r.y1});  // top
        segments.push_back({r.x0, r.y0, r.x0, r.y1});  // left
        segments.push_back({r.x1, r.y0, r.x1, r.y1});  // right
    }
    return BoundarySet(s, std::move(segments));
}

WeightedPointCloud sample_points(const BoundarySet& b, int per_component, std::uint64_t seed) {
    if (per_component < 1) {
        throw std::invalid_argument("sample_points: per_component must be at least 1");
    }
    WeightedPointCloud cloud;
    cloud.points.reserve(b.segments().size() * static_cast<std::size_t>(per_component));
    Rng rng(seed);
    for (const Segment& seg : b.segments()) {
        const double len = seg.length();
        const double w = len / per_component;
        for (int k = 0; k < per_component; ++k) {
            const double u = rng.next_double();
            if (seg.horizontal()) {
                cloud.points.push_back({seg.x0 + u * len, seg.y0, w});
            } else {
                cloud.points.push_back({seg.x0, seg.y0 + u * len, w});
            }
        }
    }
    return cloud;
}

WeightedPointCloud sample_points(const SquareSet& s, int per_component, std::uint64_t seed) {
    if (per_component < 1) {
        throw std::invalid_argument("sample_points: per_component must be at least 1");
    }
    WeightedPointCloud cloud;
    cloud.points.reserve(s.count() * static_cast<std::size_t>(per_component));
    Rng rng(seed);
    for (std::size_t k = 0; k < s.count(); ++k) {
        const Rect r = s.square_rect(k);
        const double side = r.width();
        const double perimeter = 4.0 * side;
        const double w = perimeter / per_component;
        for (int p = 0; p < per_component; ++p) {
            // Position along the perimeter, walked counterclockwise from (x0, y0).
            const double u = rng.next_double() * perimeter;
            WeightedPoint pt{0.0, 0.0, w};
            if (u < side) {
                pt.x = r.x0 + u;
                pt.y = r.y0;
            } else if (u < 2.0 * side) {
                pt.x = r.x1;
                pt.y = r.y0 + (u - side);
            } else if (u < 3.0 * side) {
                pt.x = r.x1 - (u - 2.0 * side);
                pt.y = r.y1;
            } else {
                pt.x = r.x0;
                pt.y = r.y1 - (u - 3.0 * side);
            }
            cloud.points.push_back(pt);
        }
    }
    return cloud;
}

}  // namespace favard
