#pragma once

#include <cstdint>
#include <vector>

#include "favard/geometry.hpp"
#include "favard/interval_union.hpp"

namespace favard {

// Finite union of axis-aligned grid squares with exact integer corners:
// square (i, j) is [i, i+1] x [j, j+1] in units of 1/base^n.  Corner arithmetic
// stays in integers so deep generations carry no accumulated rounding;
// conversion to floating point happens at projection time.
class SquareSet {
  public:
    SquareSet() = default;
    SquareSet(int generation, int base, std::vector<std::pair<std::int64_t, std::int64_t>> squares);

    int generation() const { return n_; }
    int base() const { return base_; }
    std::int64_t scale_denominator() const { return denom_; }
    double side() const { return 1.0 / static_cast<double>(denom_); }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& squares() const { return squares_; }
    bool empty() const { return squares_.empty(); }
    std::size_t count() const { return squares_.size(); }

    Rect square_rect(std::size_t k) const;

    // Closed-set membership (points on shared edges belong to both squares).
    bool contains_point(double x, double y) const;

    // Shadow on the x-axis as an exact interval union.
    IntervalUnion x_shadow() const;

  private:
    int n_ = 0;
    int base_ = 4;
    std::int64_t denom_ = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> squares_;
};

// Product-structure membership table: valid when the square set is exactly
// {(i, j) : i in D, j in D} for a digit-closed index set D.  Gives the O(1)
// point test the Monte Carlo inner loop needs.
struct ProductMembership {
    double scale = 1.0;
    std::int64_t denom = 1;
    std::vector<std::uint8_t> valid_x;
    std::vector<std::uint8_t> valid_y;

    bool contains(double x, double y) const {
        return axis_hit(valid_x, x) && axis_hit(valid_y, y);
    }

    bool operator()(double x, double y) const { return contains(x, y); }

    bool axis_hit(const std::vector<std::uint8_t>& valid, double v) const {
        if (v < 0.0 || v > 1.0) return false;
        const double scaled = v * scale;
        std::int64_t cell = static_cast<std::int64_t>(scaled);
        if (cell >= denom) cell = denom - 1;
        if (valid[static_cast<std::size_t>(cell)]) return true;
        // Closed squares: a point exactly on a cell's left edge also belongs
        // to the previous cell.
        return scaled == static_cast<double>(cell) && cell > 0 &&
               valid[static_cast<std::size_t>(cell - 1)];
    }
};

// Builds the product table; throws std::invalid_argument when the set is not
// an exact product of its axis shadows.
ProductMembership product_membership(const SquareSet& s);

// All four sides of every square.  Cantor squares are pairwise separated, so
// no deduplication is needed.
class BoundarySet {
  public:
    BoundarySet() = default;
    BoundarySet(SquareSet parent, std::vector<Segment> segments);

    const SquareSet& parent() const { return parent_; }
    const std::vector<Segment>& segments() const { return segments_; }
    bool empty() const { return segments_.empty(); }

    // Total H^1 length, Sum of segment lengths.
    double total_length() const;

  private:
    SquareSet parent_;
    std::vector<Segment> segments_;
};

// n-th generation of the four-corner Cantor set: the 4^n squares whose corner
// numerators have all base-4 digits in {0, 3}.  Ordering is lexicographic in
// (i, j).  The default cap of 12 is the desk-scale memory guard (4^12 squares).
SquareSet cantor_generation(int n, int max_generation = 12);

// Product construction with an arbitrary digit set in an arbitrary base;
// cantor_generation(n) == corner_ifs_generation(n, {0,3}, 4).
SquareSet corner_ifs_generation(int n, const std::vector<int>& digit_set, int base,
                                int max_generation = 12);

BoundarySet boundary(const SquareSet& s);

struct WeightedPoint {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
};

struct WeightedPointCloud {
    std::vector<WeightedPoint> points;

    double total_weight() const {
        double sum = 0.0;
        for (const WeightedPoint& p : points) sum += p.w;
        return sum;
    }
};

// Uniform random points on each segment, weight = segment length / per_component,
// so the cloud discretizes H^1 restricted to the boundary and total weight is
// independent of per_component.
WeightedPointCloud sample_points(const BoundarySet& b, int per_component, std::uint64_t seed);

// Same, sampling each square's boundary (weight = perimeter / per_component).
WeightedPointCloud sample_points(const SquareSet& s, int per_component, std::uint64_t seed);

}  // namespace favard
