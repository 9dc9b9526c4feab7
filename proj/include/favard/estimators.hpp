#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "favard/curve.hpp"
#include "favard/fractal.hpp"
#include "favard/parallel.hpp"
#include "favard/projection.hpp"
#include "favard/quadrature.hpp"
#include "favard/rng.hpp"

namespace favard {

// Fav(E) = integral over [0, 2pi) of |proj_omega(E)|.  The full circle of the
// definition is integrated literally; the omega vs omega + pi symmetry is a
// tested property, not an optimization.
QuadratureResult favard_length(const SquareSet& s, const QuadratureSpec& quad);
QuadratureResult favard_length(const BoundarySet& b, const QuadratureSpec& quad);

// Fav_C(E) = integral over A = [0,1] - I of |Phi_alpha(E)|, with the
// unextended projection.
QuadratureResult favard_curve_length(const ExtendedGraphCurve& curve, const SquareSet& s,
                                     const QuadratureSpec& quad);
QuadratureResult favard_curve_length(const ExtendedGraphCurve& curve, const BoundarySet& b,
                                     const QuadratureSpec& quad);

// Piecewise curves are handled by summing per-piece values.
QuadratureResult favard_curve_length_pieces(std::span<const ExtendedGraphCurve> pieces,
                                            const SquareSet& s, const QuadratureSpec& quad);

struct McSpec {
    std::int64_t samples = 1000000;
    std::uint64_t seed = 0;
    std::int64_t batch = 65536;
    int t_grid = 512;       // coarse scan nodes over I
    int refine_depth = 3;   // local bisection passes after a coarse miss
    int workers = 0;
};

struct BuffonEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t hits = 0;
    std::int64_t samples = 0;
    double area = 0.0;
};

// Tight (alpha, beta) sampling box for the difference set E - C of a square
// set: exactly the translations whose curve copy can meet E.
std::pair<Interval, Interval> difference_bbox(const ExtendedGraphCurve& curve, const SquareSet& s);

// Buffon curve drop: samples (alpha, beta) uniformly over the given ranges
// and counts translates of the curve that meet E through the point-membership
// oracle.  A hit means some node of a uniform t-grid over I lands in E; after
// a full coarse miss the grid is bisected refine_depth times (each pass
// probes the midpoints of the surviving cells).  Estimate = box area times
// hit fraction; standard error by the binomial formula.  Per-sample RNG
// substreams and fixed-order batch reduction make the result bitwise
// independent of the worker count.
template <typename Member>
BuffonEstimate buffon_curve_mc(const ExtendedGraphCurve& curve, Member&& member, const McSpec& mc,
                               Interval alpha_range, Interval beta_range) {
    if (mc.samples < 1) throw std::invalid_argument("buffon_curve_mc: samples must be >= 1");
    if (mc.t_grid < 2) throw std::invalid_argument("buffon_curve_mc: t_grid must be >= 2");
    if (mc.refine_depth < 0 || mc.refine_depth > 12) {
        throw std::invalid_argument("buffon_curve_mc: refine_depth must lie in [0, 12]");
    }

    const Interval dom = curve.domain();
    const std::size_t stride = std::size_t{1} << mc.refine_depth;
    const std::size_t fine_count = static_cast<std::size_t>(mc.t_grid - 1) * stride + 1;
    std::vector<double> ts(fine_count), phis(fine_count);
    for (std::size_t i = 0; i < fine_count; ++i) {
        const double t =
            dom.lo + dom.length() * static_cast<double>(i) / static_cast<double>(fine_count - 1);
        ts[i] = t;
        phis[i] = curve.base().phi(t);
    }

    auto translate_hits = [&](double alpha, double beta) -> bool {
        // Coarse pass, then midpoint passes of the bisection refinement.
        for (std::size_t i = 0; i < fine_count; i += stride) {
            if (member(alpha + ts[i], beta + phis[i])) return true;
        }
        for (std::size_t step = stride / 2; step >= 1; step /= 2) {
            for (std::size_t i = step; i < fine_count; i += 2 * step) {
                if (member(alpha + ts[i], beta + phis[i])) return true;
            }
            if (step == 1) break;
        }
        return false;
    };

    const std::int64_t batch = mc.batch < 1 ? 65536 : mc.batch;
    const std::size_t batches = static_cast<std::size_t>((mc.samples + batch - 1) / batch);
    std::vector<std::int64_t> batch_hits(batches, 0);
    parallel_for(batches, mc.workers, [&](std::size_t b) {
        const std::int64_t begin = static_cast<std::int64_t>(b) * batch;
        const std::int64_t end = std::min(mc.samples, begin + batch);
        std::int64_t hits = 0;
        for (std::int64_t i = begin; i < end; ++i) {
            Rng rng = Rng::substream(mc.seed, static_cast<std::uint64_t>(i));
            const double alpha = rng.uniform(alpha_range.lo, alpha_range.hi);
            const double beta = rng.uniform(beta_range.lo, beta_range.hi);
            if (translate_hits(alpha, beta)) ++hits;
        }
        batch_hits[b] = hits;
    });

    BuffonEstimate out;
    out.samples = mc.samples;
    out.area = alpha_range.length() * beta_range.length();
    for (std::int64_t h : batch_hits) out.hits += h;
    const double p = static_cast<double>(out.hits) / static_cast<double>(out.samples);
    out.estimate = out.area * p;
    out.std_error = out.area * std::sqrt(p * (1.0 - p) / static_cast<double>(out.samples));
    return out;
}

// Least squares fit of log v = log c - p log n.
struct DecayFit {
    double exponent = 0.0;       // p
    double log_intercept = 0.0;  // log c
    double residual = 0.0;       // RMS residual in log space
};

DecayFit fit_decay(const std::vector<std::pair<double, double>>& values);

// Inverse tower function: least m >= 0 with log^(m) x <= 1.
int log_star(double x);

// Unit-constant shapes of the reference decay bounds, for plotting next to
// computed values.  The true constants are unknown; only the shapes compare.
struct ReferenceBounds {
    double npv_upper = 0.0;    // n^(-1/6)
    double bv_lower = 0.0;     // n^(-1) log n
    double cdt_upper = 0.0;    // n^(-1/6)
    double cdt_lower = 0.0;    // n^(-1)
    double tower_upper = 0.0;  // (log_* n)^(-1/100)
};

ReferenceBounds reference_bounds(int n);

}  // namespace favard
