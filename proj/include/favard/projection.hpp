#pragma once

#include <optional>

#include "favard/curve.hpp"
#include "favard/fractal.hpp"
#include "favard/geometry.hpp"
#include "favard/interval_union.hpp"

namespace favard {

// One curve-projection evaluation context: Phi_alpha on the base curve when
// use_extension is false (the projection the Favard curve length integrates),
// Phi_{alpha,+} on the delta-extended curve otherwise.
struct ProjectionQuery {
    const ExtendedGraphCurve* curve = nullptr;
    double alpha = 0.0;
    bool use_extension = false;

    const Interval& param_interval() const {
        return use_extension ? curve->domain_plus() : curve->domain();
    }
    double phi(double t) const { return use_extension ? curve->phi_plus(t) : curve->base().phi(t); }
    double dphi(double t) const {
        return use_extension ? curve->dphi_plus(t) : curve->base().dphi(t);
    }
};

// A = [0, 1] - I: the translation parameters for which a translate of the
// curve can meet the unit square.
Interval parameter_domain(const GraphCurve& curve);
inline Interval parameter_domain(const ExtendedGraphCurve& curve) {
    return parameter_domain(curve.base());
}

// Phi_alpha(p) = p2 - phi(p1 - alpha) when p1 - alpha is in the domain;
// absence is a value, not an error.
std::optional<double> project_point(const ProjectionQuery& q, Vec2 p);

// Exact extrema of phi over a subinterval of the domain, resolved from the
// stored convexity sign: on the interior the only critical point is the
// bracketed root of phi' (phi' is strictly monotone), found by bisection.
struct PhiExtrema {
    double min = 0.0;
    double max = 0.0;
};
PhiExtrema phi_extrema_over(const ProjectionQuery& q, Interval t_range);

// Image of a closed rectangle: clip [x0 - alpha, x1 - alpha] against the
// parameter interval, then [y0 - max phi, y1 - min phi].  Empty optional when
// the clip is empty.
std::optional<Interval> project_square(const ProjectionQuery& q, const Rect& square);

std::optional<Interval> project_segment(const ProjectionQuery& q, const Segment& seg);

// Normalized union of per-component images.
IntervalUnion project_set(const ProjectionQuery& q, const SquareSet& s);
IntervalUnion project_set(const ProjectionQuery& q, const BoundarySet& b);

// Linear projection proj_omega(x, y) = x cos(omega) + y sin(omega), exact per
// component (a square's image is spanned by its corner projections).
IntervalUnion project_linear(double omega, const SquareSet& s);
IntervalUnion project_linear(double omega, const BoundarySet& b);

// Number of components of s whose image interval contains beta.
int multiplicity_at(const ProjectionQuery& q, double beta, const SquareSet& s);

}  // namespace favard
