#include "favard/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace favard {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename Set>
QuadratureResult favard_length_impl(const Set& s, const QuadratureSpec& quad) {
    if (s.empty()) return {0.0, 0.0, true, 0, 0};
    return integrate_simpson_doubling(
        [&s](double omega) { return project_linear(omega, s).measure(); }, {0.0, kTwoPi}, quad);
}

template <typename Set>
QuadratureResult favard_curve_length_impl(const ExtendedGraphCurve& curve, const Set& s,
                                          const QuadratureSpec& quad) {
    if (s.empty()) return {0.0, 0.0, true, 0, 0};
    const Interval a = parameter_domain(curve);
    return integrate_simpson_doubling(
        [&](double alpha) {
            const ProjectionQuery q{&curve, alpha, false};
            return project_set(q, s).measure();
        },
        a, quad);
}

}  // namespace

QuadratureResult favard_length(const SquareSet& s, const QuadratureSpec& quad) {
    return favard_length_impl(s, quad);
}

QuadratureResult favard_length(const BoundarySet& b, const QuadratureSpec& quad) {
    return favard_length_impl(b, quad);
}

QuadratureResult favard_curve_length(const ExtendedGraphCurve& curve, const SquareSet& s,
                                     const QuadratureSpec& quad) {
    return favard_curve_length_impl(curve, s, quad);
}

QuadratureResult favard_curve_length(const ExtendedGraphCurve& curve, const BoundarySet& b,
                                     const QuadratureSpec& quad) {
    return favard_curve_length_impl(curve, b, quad);
}

QuadratureResult favard_curve_length_pieces(std::span<const ExtendedGraphCurve> pieces,
                                            const SquareSet& s, const QuadratureSpec& quad) {
    QuadratureResult total{0.0, 0.0, true, 0, 0};
    for (const ExtendedGraphCurve& piece : pieces) {
        const QuadratureResult r = favard_curve_length(piece, s, quad);
        total.value += r.value;
        total.achieved_rel = std::max(total.achieved_rel, r.achieved_rel);
        total.converged = total.converged && r.converged;
        total.refinements = std::max(total.refinements, r.refinements);
        total.evaluations += r.evaluations;
    }
    return total;
}

std::pair<Interval, Interval> difference_bbox(const ExtendedGraphCurve& curve, const SquareSet& s) {
    if (s.empty()) throw std::invalid_argument("difference_bbox: empty square set");
    Rect bbox = s.square_rect(0);
    for (std::size_t k = 1; k < s.count(); ++k) {
        const Rect r = s.square_rect(k);
        bbox.x0 = std::min(bbox.x0, r.x0);
        bbox.x1 = std::max(bbox.x1, r.x1);
        bbox.y0 = std::min(bbox.y0, r.y0);
        bbox.y1 = std::max(bbox.y1, r.y1);
    }
    const Interval dom = curve.domain();
    const ProjectionQuery q{&curve, 0.0, false};
    const PhiExtrema ext = phi_extrema_over(q, dom);
    return {Interval{bbox.x0 - dom.hi, bbox.x1 - dom.lo},
            Interval{bbox.y0 - ext.max, bbox.y1 - ext.min}};
}

DecayFit fit_decay(const std::vector<std::pair<double, double>>& values) {
    if (values.size() < 3) throw std::invalid_argument("fit_decay: need at least 3 points");
    double sx = 0.0, sy = 0.0;
    for (const auto& [n, v] : values) {
        if (!(n >= 1.0)) throw std::invalid_argument("fit_decay: n must be >= 1");
        if (!(v > 0.0)) throw std::invalid_argument("fit_decay: values must be positive");
        sx += std::log(n);
        sy += std::log(v);
    }
    const double count = static_cast<double>(values.size());
    const double mx = sx / count;
    const double my = sy / count;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [n, v] : values) {
        const double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(v) - my);
    }
    DecayFit fit;
    const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.exponent = -slope;
    fit.log_intercept = my - slope * mx;
    double ss = 0.0;
    for (const auto& [n, v] : values) {
        const double r = std::log(v) - (fit.log_intercept + slope * std::log(n));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / count);
    return fit;
}

int log_star(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("log_star: x must be positive");
    int m = 0;
    while (x > 1.0) {
        x = std::log(x);
        ++m;
        if (m > 64) break;  // unreachable for finite doubles
    }
    return m;
}

ReferenceBounds reference_bounds(int n) {
    if (n < 2) throw std::invalid_argument("reference_bounds: n must be >= 2");
    const double nd = static_cast<double>(n);
    ReferenceBounds b;
    b.npv_upper = std::pow(nd, -1.0 / 6.0);
    b.bv_lower = std::log(nd) / nd;
    b.cdt_upper = b.npv_upper;
    b.cdt_lower = 1.0 / nd;
    b.tower_upper = std::pow(static_cast<double>(log_star(nd)), -0.01);
    return b;
}

}  // namespace favard
