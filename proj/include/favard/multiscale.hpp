#pragma once

#include <cstdint>
#include <vector>

#include "favard/curve.hpp"
#include "favard/fractal.hpp"
#include "favard/geometry.hpp"
#include "favard/interval_union.hpp"

namespace favard {

// Sequence of scales r_1^+- >= ... >= r_N^+- with separation of scales
// r_{n+1}^+ <= r_n^- / 2.  Index 1 is the coarsest scale.
class ScaleSequence {
  public:
    struct Pair {
        double r_minus = 0.0;
        double r_plus = 0.0;
    };

    explicit ScaleSequence(std::vector<Pair> radii);

    int N() const { return static_cast<int>(radii_.size()); }
    double r_minus(int n) const { return radii_.at(static_cast<std::size_t>(n - 1)).r_minus; }
    double r_plus(int n) const { return radii_.at(static_cast<std::size_t>(n - 1)).r_plus; }

    // r_n^- = r_n^+ = top * ratio^(n-1); ratio <= 1/2 gives separation of scales.
    static ScaleSequence geometric(int count, double top = 0.25, double ratio = 0.25);

  private:
    std::vector<Pair> radii_;
};

// Parameters of one curve double-sector X_{e,alpha}(r, M): the union of the
// curves C_{e,alpha'} over |alpha' - alpha| <= 1/M, clipped to B_r(e).
struct SectorSpec {
    const ExtendedGraphCurve* curve = nullptr;
    Vec2 e;
    double alpha = 0.0;
    double r = 0.0;
    double M = 0.0;
};

// Enforces r > 0, M >= 1/delta, and e1 - alpha in I; throws
// std::invalid_argument naming the violated condition.
void validate_sector_spec(const SectorSpec& spec);

// z in X_{e,alpha}(r, M)?  The witness equation
//   g(alpha') = (z2 - phi_plus(z1 - alpha')) - (e2 - phi_plus(e1 - alpha'))
// is solved over the feasible alpha' range by a sign-change scan on 8 uniform
// sub-brackets plus bisection to 1e-13; alpha' that push z1 - alpha' or
// e1 - alpha' off the extended domain are excluded.
bool curve_sector_member(const SectorSpec& spec, Vec2 z);

// Literal straight double-sector predicate of X_{e,omega}(r, M).
bool straight_sector_member(Vec2 e, Vec2 omega, double r, double M, Vec2 z);

// Checks both inclusions of the comparability lemma with in-sector sampling
// (points are drawn inside each smaller sector and asserted to be in the
// larger one), plus the exact vertical-slice bound sqrt(8) mu r with
// mu = lambda (1/M + r) when mu < 1/sqrt(2).
struct ComparabilityReport {
    std::int64_t checked_inner = 0;       // samples of X_{e,omega}(r, c1 M)
    std::int64_t inner_violations = 0;    // not inside the curve sector
    std::int64_t checked_outer = 0;       // samples of X_{e,alpha}(r, M)
    std::int64_t outer_violations = 0;    // not inside X_{e,omega}(r, M/(lambda(1+Mr)))
    double c1 = 0.0;
    double max_vertical_slice = 0.0;
    double vertical_slice_bound = 0.0;
    bool slice_bound_applicable = false;
};

ComparabilityReport verify_sector_comparability(const SectorSpec& spec, std::int64_t samples,
                                                std::uint64_t seed);

// Samples the curve double-sector and asserts every member projects into
// J = [Phi_alpha(e) - sqrt(8) lambda (1/M + r) r, Phi_alpha(e) + ...].
struct StripReport {
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    Interval strip;
};

StripReport verify_strip_containment(const SectorSpec& spec, std::int64_t samples,
                                     std::uint64_t seed);

// Constructive sliding pigeonhole over a nondecreasing mass sequence
// masses[0..N]: with k = ceil(eps N), picks the window [n, n+k] with the
// smallest mass increment (smallest n on ties).  The returned deficiency
// satisfies deficiency <= k/(N-k) masses[N].
struct PigeonholeResult {
    int n = 0;
    int m = 0;
    double deficiency = 0.0;
};

PigeonholeResult sliding_pigeonhole(const std::vector<double>& masses, double eps);

struct Ball {
    Vec2 center;
    double radius = 0.0;
};

struct CoverResult {
    std::vector<Ball> balls;
    double content_upper = 0.0;
};

// Greedy upper bound on the restricted Hausdorff content H^1_{r-,r+}: one
// ball of radius r_plus per half-open grid cell (pitch r_plus/sqrt(2)) that
// meets the set.  Every set point lies in the ball of its own cell.
CoverResult hausdorff_content_cover(const SquareSet& s, double r_minus, double r_plus);
CoverResult hausdorff_content_cover(const BoundarySet& b, double r_minus, double r_plus);
CoverResult hausdorff_content_cover(const WeightedPointCloud& cloud, double r_minus, double r_plus);

struct RectConstBudget {
    int angles = 64;        // orthonormal frame grid over a half turn
    int anchors = 8;        // J anchor positions per length
    int lengths = 4;        // J lengths from r up to the projected span
    int coverage_cells = 4096;
    int max_fit_nodes = 8192;  // cap on the r/64 node grid per J
};

// Lower bound on the rectifiability constant R_E(eps, r, M): maximizes the
// covered fraction of J over sampled frames, intervals |J| >= r, and
// piecewise-linear graphs fitted greedily to the cloud (slab medians on a
// node grid of pitch r/64, slopes clamped to a ladder of caps <= M).  The
// supremum over all Lipschitz graphs is not computable; every reported value
// is a certified lower bound.
double rectifiability_constant_lower(const WeightedPointCloud& cloud, double eps, double r,
                                     double M, const RectConstBudget& budget = {});

// High-multiplicity detector: greedily extracts an r_sep-separated subset of
// the cloud points lying within `band` of C_{e,alpha} (vertical distance
// along the projection; band = 0 means exact incidence) and compares the
// extracted cardinality against the threshold.
bool detect_high_multiplicity(const ExtendedGraphCurve& curve, Vec2 e, double alpha,
                              const WeightedPointCloud& cloud, double r_sep, int threshold,
                              double band);

// True when some on-curve cloud point y has |y - e| in [r^-_{n+k}, r^+_{n-k}].
bool detect_positive_multiplicity(const ExtendedGraphCurve& curve, Vec2 e, double alpha,
                                  const WeightedPointCloud& cloud, const ScaleSequence& scales,
                                  int n, int k, double band);

// True when the cloud mass projecting into J under Phi_{alpha,+} reaches
// threshold_ratio * |J|.
bool detect_high_density_strip(const ExtendedGraphCurve& curve, double alpha, Interval j,
                               const WeightedPointCloud& cloud, double threshold_ratio);

// Curve-pair detector: mass in the sector annulus X(r, M/10^4) minus
// X(r_inner, M/10^4) must exceed the caller's threshold.
bool detect_curve_pair(const SectorSpec& spec, const WeightedPointCloud& cloud, double r_inner,
                       double threshold);

}  // namespace favard
