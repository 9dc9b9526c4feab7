#include "favard/curve.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "favard/rng.hpp"

namespace favard {
namespace {

constexpr double kLambdaCap = 34359738368.0;  // 2^35

std::string describe(double v) { return std::to_string(v); }

}  // namespace

GraphCurve::GraphCurve(std::function<double(double)> phi, std::function<double(double)> dphi,
                       int convexity, Interval domain, double lambda, double slope_bound,
                       int validation_samples)
    : phi_(std::move(phi)),
      dphi_(std::move(dphi)),
      convexity_(convexity),
      domain_(domain),
      lambda_(lambda),
      slope_bound_(slope_bound) {
    if (domain_.empty() || domain_.length() <= 0.0) {
        throw std::invalid_argument("GraphCurve: domain must have nonempty interior");
    }
    if (convexity_ != 1 && convexity_ != -1) {
        throw std::invalid_argument("GraphCurve: convexity must be +1 or -1");
    }
    if (!(lambda_ >= 1.0) || lambda_ > kLambdaCap) {
        throw std::invalid_argument("GraphCurve: lambda must satisfy 1 <= lambda <= 2^35");
    }
    const double delta = delta_constant();
    if (!(slope_bound_ >= 0.0) || slope_bound_ > 1.0 - delta) {
        throw std::invalid_argument("GraphCurve: slope_bound must lie in [0, 1 - delta]");
    }
    if (validation_samples < 2) return;

    // Dense sampling certifies what cannot be checked symbolically for
    // arbitrary closed forms: the slope cap and the bilipschitz window.
    const int n = validation_samples;
    std::vector<double> ts(n), slopes(n);
    for (int i = 0; i < n; ++i) {
        const double t = domain_.lo + domain_.length() * i / (n - 1);
        ts[i] = t;
        slopes[i] = dphi_(t);
        if (!(std::fabs(slopes[i]) <= slope_bound_ * (1.0 + 1e-12) + 1e-15)) {
            throw std::invalid_argument("GraphCurve: slope bound violated at t = " + describe(t) +
                                        " (|phi'| = " + describe(std::fabs(slopes[i])) + ")");
        }
    }
    auto check_pair = [&](double s, double t, double ds, double dt) {
        const double gap = std::fabs(s - t);
        if (gap == 0.0) return;
        const double dgap = std::fabs(ds - dt);
        const double slack = 1e-9;
        if (dgap > lambda_ * gap * (1.0 + slack) || dgap < gap / lambda_ * (1.0 - slack)) {
            throw std::invalid_argument("GraphCurve: phi' is not lambda-bilipschitz near t = " +
                                        describe(t));
        }
    };
    for (int i = 0; i + 1 < n; ++i) check_pair(ts[i], ts[i + 1], slopes[i], slopes[i + 1]);
    Rng rng(0x5eedULL);
    for (int k = 0; k < n; ++k) {
        const int i = static_cast<int>(rng.next_u64() % n);
        const int j = static_cast<int>(rng.next_u64() % n);
        check_pair(ts[i], ts[j], slopes[i], slopes[j]);
    }
}

GraphCurve make_parabola(double half_curvature, Interval domain) {
    if (!(half_curvature > 0.0)) {
        throw std::invalid_argument("make_parabola: half_curvature must be positive");
    }
    if (domain.empty() || domain.length() <= 0.0) {
        throw std::invalid_argument("make_parabola: domain must have nonempty interior");
    }
    const double c = half_curvature;
    const double delta = delta_constant();
    for (double endpoint : {domain.lo, domain.hi}) {
        if (std::fabs(2.0 * c * endpoint) > 1.0 - delta) {
            throw std::invalid_argument("make_parabola: slope bound violated at t = " +
                                        std::to_string(endpoint));
        }
    }
    const double lambda = std::max(2.0 * c, 1.0 / (2.0 * c));
    const double slope_bound = std::max(std::fabs(2.0 * c * domain.lo), std::fabs(2.0 * c * domain.hi));
    return GraphCurve([c](double t) { return c * t * t; },
                      [c](double t) { return 2.0 * c * t; },
                      +1, domain, lambda, slope_bound);
}

GraphCurve make_circle_arc(double radius, Interval domain) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("make_circle_arc: radius must be positive");
    }
    if (domain.empty() || domain.length() <= 0.0) {
        throw std::invalid_argument("make_circle_arc: domain must have nonempty interior");
    }
    const double delta = delta_constant();
    const double cap = 1.0 - delta;
    // |phi'(t)| = |t| / sqrt(r^2 - t^2) <= cap  iff  |t| <= r cap / sqrt(1 + cap^2).
    const double t_max = radius * cap / std::sqrt(1.0 + cap * cap);
    if (std::fabs(domain.lo) > t_max || std::fabs(domain.hi) > t_max) {
        const double worst = std::fabs(domain.lo) > std::fabs(domain.hi) ? domain.lo : domain.hi;
        throw std::invalid_argument("make_circle_arc: slope bound violated at t = " +
                                    std::to_string(worst));
    }
    const double r = radius;
    // phi'' = r^2 (r^2 - t^2)^{-3/2} is even and increasing in |t|.
    const double t_abs = std::max(std::fabs(domain.lo), std::fabs(domain.hi));
    const double curv_max = r * r / std::pow(r * r - t_abs * t_abs, 1.5);
    const double curv_min = 1.0 / r;
    const double lambda = std::max(curv_max, 1.0 / curv_min);
    const double slope_bound = t_abs / std::sqrt(r * r - t_abs * t_abs);
    return GraphCurve([r](double t) { return r - std::sqrt(r * r - t * t); },
                      [r](double t) { return t / std::sqrt(r * r - t * t); },
                      +1, domain, lambda, slope_bound);
}

ExtendedGraphCurve::ExtendedGraphCurve(GraphCurve base)
    : base_(std::move(base)),
      domain_plus_{base_.domain().lo - delta_constant(), base_.domain().hi + delta_constant()} {}

double ExtendedGraphCurve::phi_plus(double t) const {
    const Interval& dom = base_.domain();
    const double half_curv = base_.convexity() / (2.0 * base_.lambda());
    if (t < dom.lo) {
        const double u = t - dom.lo;
        return base_.phi(dom.lo) + base_.dphi(dom.lo) * u + half_curv * u * u;
    }
    if (t > dom.hi) {
        const double u = t - dom.hi;
        return base_.phi(dom.hi) + base_.dphi(dom.hi) * u + half_curv * u * u;
    }
    return base_.phi(t);
}

double ExtendedGraphCurve::dphi_plus(double t) const {
    const Interval& dom = base_.domain();
    const double slope_rate = static_cast<double>(base_.convexity()) / base_.lambda();
    if (t < dom.lo) return base_.dphi(dom.lo) + slope_rate * (t - dom.lo);
    if (t > dom.hi) return base_.dphi(dom.hi) + slope_rate * (t - dom.hi);
    return base_.dphi(t);
}

ExtendedGraphCurve extend_curve(GraphCurve curve) { return ExtendedGraphCurve(std::move(curve)); }

TranslatedCurve::TranslatedCurve(const ExtendedGraphCurve& parent, Vec2 through, double alpha)
    : parent_(&parent), alpha_(alpha) {
    const double t = through.x - alpha;
    if (!parent.domain_plus().contains(t)) {
        throw std::domain_error("TranslatedCurve: generating point is off the extended domain");
    }
    beta_ = through.y - parent.phi_plus(t);
}

Frame frame_at(const ExtendedGraphCurve& curve, Vec2 e, double alpha) {
    const double t = e.x - alpha;
    if (!curve.domain_plus().contains(t)) {
        throw std::domain_error("frame_at: e1 - alpha = " + std::to_string(t) +
                                " is outside the extended domain");
    }
    const double slope = curve.dphi_plus(t);
    const double norm = std::sqrt(1.0 + slope * slope);
    Frame f;
    f.omega1 = {1.0 / norm, slope / norm};
    f.omega2 = {slope / norm, -1.0 / norm};
    return f;
}

}  // namespace favard
