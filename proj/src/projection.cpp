#include "favard/projection.hpp"

#include <cmath>
#include <stdexcept>

namespace favard {
namespace {

// Root of dphi on [lo, hi], assuming opposite signs at the ends; bisection to
// an absolute t-tolerance of 1e-14.
double bisect_dphi_root(const ProjectionQuery& q, double lo, double hi) {
    double flo = q.dphi(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = q.dphi(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Interval parameter_domain(const GraphCurve& curve) {
    return {0.0 - curve.domain().hi, 1.0 - curve.domain().lo};
}

std::optional<double> project_point(const ProjectionQuery& q, Vec2 p) {
    const double t = p.x - q.alpha;
    if (!q.param_interval().contains(t)) return std::nullopt;
    return p.y - q.phi(t);
}

PhiExtrema phi_extrema_over(const ProjectionQuery& q, Interval t_range) {
    const double f_lo = q.phi(t_range.lo);
    const double f_hi = q.phi(t_range.hi);
    PhiExtrema ext{std::min(f_lo, f_hi), std::max(f_lo, f_hi)};

    const double s_lo = q.dphi(t_range.lo);
    const double s_hi = q.dphi(t_range.hi);
    if ((s_lo < 0.0) != (s_hi < 0.0)) {
        const double t_star = bisect_dphi_root(q, t_range.lo, t_range.hi);
        const double f_star = q.phi(t_star);
        if (q.curve->base().convexity() > 0) {
            ext.min = std::min(ext.min, f_star);
        } else {
            ext.max = std::max(ext.max, f_star);
        }
    }
    return ext;
}

std::optional<Interval> project_square(const ProjectionQuery& q, const Rect& square) {
    const Interval t_range =
        Interval{square.x0 - q.alpha, square.x1 - q.alpha}.clipped_to(q.param_interval());
    if (t_range.empty()) return std::nullopt;
    const PhiExtrema ext = phi_extrema_over(q, t_range);
    return Interval{square.y0 - ext.max, square.y1 - ext.min};
}

std::optional<Interval> project_segment(const ProjectionQuery& q, const Segment& seg) {
    if (seg.horizontal()) {
        const Interval t_range =
            Interval{seg.x0 - q.alpha, seg.x1 - q.alpha}.clipped_to(q.param_interval());
        if (t_range.empty()) return std::nullopt;
        const PhiExtrema ext = phi_extrema_over(q, t_range);
        return Interval{seg.y0 - ext.max, seg.y0 - ext.min};
    }
    const double t = seg.x0 - q.alpha;
    if (!q.param_interval().contains(t)) return std::nullopt;
    const double v = q.phi(t);
    return Interval{seg.y0 - v, seg.y1 - v};
}

IntervalUnion project_set(const ProjectionQuery& q, const SquareSet& s) {
    std::vector<Interval> parts;
    parts.reserve(s.count());
    for (std::size_t k = 0; k < s.count(); ++k) {
        if (auto iv = project_square(q, s.square_rect(k))) parts.push_back(*iv);
    }
    return IntervalUnion::normalize(std::move(parts));
}

IntervalUnion project_set(const ProjectionQuery& q, const BoundarySet& b) {
    std::vector<Interval> parts;
    parts.reserve(b.segments().size());
    for (const Segment& seg : b.segments()) {
        if (auto iv = project_segment(q, seg)) parts.push_back(*iv);
    }
    return IntervalUnion::normalize(std::move(parts));
}

IntervalUnion project_linear(double omega, const SquareSet& s) {
    const double c = std::cos(omega);
    const double sn = std::sin(omega);
    std::vector<Interval> parts;
    parts.reserve(s.count());
    for (std::size_t k = 0; k < s.count(); ++k) {
        const Rect r = s.square_rect(k);
        const double xc_lo = std::min(r.x0 * c, r.x1 * c);
        const double xc_hi = std::max(r.x0 * c, r.x1 * c);
        const double ys_lo = std::min(r.y0 * sn, r.y1 * sn);
        const double ys_hi = std::max(r.y0 * sn, r.y1 * sn);
        parts.push_back({xc_lo + ys_lo, xc_hi + ys_hi});
    }
    return IntervalUnion::normalize(std::move(parts));
}

IntervalUnion project_linear(double omega, const BoundarySet& b) {
    const double c = std::cos(omega);
    const double sn = std::sin(omega);
    std::vector<Interval> parts;
    parts.reserve(b.segments().size());
    for (const Segment& seg : b.segments()) {
        const double p = seg.x0 * c + seg.y0 * sn;
        const double r = seg.x1 * c + seg.y1 * sn;
        parts.push_back({std::min(p, r), std::max(p, r)});
    }
    return IntervalUnion::normalize(std::move(parts));
}

int multiplicity_at(const ProjectionQuery& q, double beta, const SquareSet& s) {
    int count = 0;
    for (std::size_t k = 0; k < s.count(); ++k) {
        if (auto iv = project_square(q, s.square_rect(k)); iv && iv->contains(beta)) ++count;
    }
    return count;
}

}  // namespace favard
