#pragma once

#include <functional>

#include "favard/geometry.hpp"

namespace favard {

// Composite Simpson with uniform panel doubling.  The projection integrands
// are continuous and piecewise smooth with data-dependent kinks, so uniform
// doubling with a Richardson-style successive-difference check is used
// instead of Gauss rules.
struct QuadratureSpec {
    double rel_tol = 1e-4;
    int max_refinements = 14;
    int initial_intervals = 16;
    int workers = 0;
};

struct QuadratureResult {
    double value = 0.0;
    double achieved_rel = 0.0;  // |S_k - S_{k-1}| relative to |S_k|
    bool converged = false;
    int refinements = 0;
    std::size_t evaluations = 0;
};

// Nodes of each refinement level are evaluated in parallel into per-index
// slots and summed in fixed order, so the result is bitwise independent of
// the worker count.
QuadratureResult integrate_simpson_doubling(const std::function<double(double)>& f, Interval range,
                                            const QuadratureSpec& spec);

}  // namespace favard
