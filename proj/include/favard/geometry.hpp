#pragma once

#include <cmath>

namespace favard {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

// Closed interval [lo, hi]; empty() means lo > hi.
struct Interval {
    double lo = 0.0;
    double hi = -1.0;

    bool empty() const { return lo > hi; }
    double length() const { return empty() ? 0.0 : hi - lo; }
    double center() const { return 0.5 * (lo + hi); }
    bool contains(double t) const { return t >= lo && t <= hi; }

    Interval clipped_to(const Interval& o) const {
        return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
    }
};

// Axis-aligned closed rectangle.
struct Rect {
    double x0 = 0.0, x1 = 0.0;
    double y0 = 0.0, y1 = 0.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(double x, double y) const {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }
};

// Axis-aligned segment; exactly one of (x0==x1), (y0==y1) holds.
struct Segment {
    double x0 = 0.0, y0 = 0.0;
    double x1 = 0.0, y1 = 0.0;

    bool horizontal() const { return y0 == y1; }
    double length() const { return horizontal() ? x1 - x0 : y1 - y0; }
};

}  // namespace favard
