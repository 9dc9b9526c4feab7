#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "favard/geometry.hpp"

namespace favard {

// Margin by which admissible slopes stay below 1; value is the exact
// double-precision sum of the two terms.
inline double delta_constant() { return 1e-5 + 0x1.0p-100; }

// Graph curve {(t, phi(t)) : t in [a, b]} with a strictly convex or concave
// profile.  phi and dphi are closed-form callables; lambda is a caller-supplied
// bilipschitz certificate for dphi, checked by dense sampling rather than
// inferred, so projection evaluation stays exact to machine precision.
//
// Validated invariants (sampling pitch = domain/(sample count)):
//   lambda^-1 |s-t| <= |dphi(s)-dphi(t)| <= lambda |s-t|
//   |dphi| <= slope_bound <= 1 - delta
//   1 <= lambda <= 2^35
class GraphCurve {
  public:
    GraphCurve(std::function<double(double)> phi, std::function<double(double)> dphi,
               int convexity, Interval domain, double lambda, double slope_bound,
               int validation_samples = 4096);

    double phi(double t) const { return phi_(t); }
    double dphi(double t) const { return dphi_(t); }
    int convexity() const { return convexity_; }
    const Interval& domain() const { return domain_; }
    double lambda() const { return lambda_; }
    double slope_bound() const { return slope_bound_; }

  private:
    std::function<double(double)> phi_;
    std::function<double(double)> dphi_;
    int convexity_;
    Interval domain_;
    double lambda_;
    double slope_bound_;
};

// phi(t) = half_curvature * t^2.  lambda = max(2c, 1/(2c)).
GraphCurve make_parabola(double half_curvature, Interval domain);

// Lower circular arc through the origin: phi(t) = radius - sqrt(radius^2 - t^2).
GraphCurve make_circle_arc(double radius, Interval domain);

// The curve together with its quadratic-cap extension to [a - delta, b + delta].
// The extension branches are
//   phi(a) + dphi(a)(t - a) + sgn(phi'')/(2 lambda) (t - a)^2   on [a - delta, a]
//   phi(b) + dphi(b)(t - b) + sgn(phi'')/(2 lambda) (t - b)^2   on [b, b + delta]
// which keeps phi_plus C^1, |phi_plus'| <= 1, and phi_plus' lambda-bilipschitz.
class ExtendedGraphCurve {
  public:
    explicit ExtendedGraphCurve(GraphCurve base);

    const GraphCurve& base() const { return base_; }
    const Interval& domain() const { return base_.domain(); }
    const Interval& domain_plus() const { return domain_plus_; }

    double phi_plus(double t) const;
    double dphi_plus(double t) const;

  private:
    GraphCurve base_;
    Interval domain_plus_;
};

ExtendedGraphCurve extend_curve(GraphCurve curve);

// C_{e,alpha}: the translate of the extended curve anchored at x = alpha that
// passes through the generating point; traces (alpha + t, beta + phi_plus(t)).
class TranslatedCurve {
  public:
    TranslatedCurve(const ExtendedGraphCurve& parent, Vec2 through, double alpha);

    double anchor_alpha() const { return alpha_; }
    double anchor_beta() const { return beta_; }
    Vec2 point_at(double t) const { return {alpha_ + t, beta_ + parent_->phi_plus(t)}; }
    const ExtendedGraphCurve& parent() const { return *parent_; }

  private:
    const ExtendedGraphCurve* parent_;
    double alpha_;
    double beta_;
};

// Orthonormal tangent/normal pair at a curve point; omega2 is the clockwise
// quarter turn of omega1.
struct Frame {
    Vec2 omega1;
    Vec2 omega2;
};

// Frame of C_{e,alpha} at e: omega1 along (1, phi_plus'(e1 - alpha)).
// Throws std::domain_error when e1 - alpha leaves the extended domain.
Frame frame_at(const ExtendedGraphCurve& curve, Vec2 e, double alpha);

}  // namespace favard
