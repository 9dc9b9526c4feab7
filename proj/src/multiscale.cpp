#include "favard/multiscale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "favard/projection.hpp"
#include "favard/rng.hpp"

namespace favard {
namespace {

double sector_g(const SectorSpec& spec, Vec2 z, double alpha_prime) {
    const ExtendedGraphCurve& c = *spec.curve;
    return (z.y - c.phi_plus(z.x - alpha_prime)) - (spec.e.y - c.phi_plus(spec.e.x - alpha_prime));
}

// Normal frame of C_{e,alpha} at e.
Vec2 sector_normal(const SectorSpec& spec) {
    return frame_at(*spec.curve, spec.e, spec.alpha).omega2;
}

double phi_alpha_of_e(const SectorSpec& spec) {
    return spec.e.y - spec.curve->base().phi(spec.e.x - spec.alpha);
}

// Point of C_{e,alpha'} at horizontal offset s from e.
Vec2 sector_curve_point(const SectorSpec& spec, double alpha_prime, double s) {
    const ExtendedGraphCurve& c = *spec.curve;
    const double beta = spec.e.y - c.phi_plus(spec.e.x - alpha_prime);
    const double x = spec.e.x + s;
    return {x, beta + c.phi_plus(x - alpha_prime)};
}

}  // namespace

ScaleSequence::ScaleSequence(std::vector<Pair> radii) : radii_(std::move(radii)) {
    if (radii_.empty()) throw std::invalid_argument("ScaleSequence: need at least one scale");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        const Pair& p = radii_[i];
        if (!(p.r_minus > 0.0) || !(p.r_minus <= p.r_plus)) {
            throw std::invalid_argument("ScaleSequence: requires 0 < r_minus <= r_plus at index " +
                                        std::to_string(i + 1));
        }
        if (i + 1 < radii_.size() && !(radii_[i + 1].r_plus <= p.r_minus / 2.0)) {
            throw std::invalid_argument(
                "ScaleSequence: separation of scales r_plus[n+1] <= r_minus[n]/2 fails at index " +
                std::to_string(i + 1));
        }
    }
}

ScaleSequence ScaleSequence::geometric(int count, double top, double ratio) {
    if (count < 1) throw std::invalid_argument("ScaleSequence::geometric: count must be >= 1");
    if (!(ratio > 0.0) || ratio > 0.5) {
        throw std::invalid_argument("ScaleSequence::geometric: ratio must lie in (0, 1/2]");
    }
    std::vector<Pair> radii;
    radii.reserve(static_cast<std::size_t>(count));
    double r = top;
    for (int n = 0; n < count; ++n) {
        radii.push_back({r, r});
        r *= ratio;
    }
    return ScaleSequence(std::move(radii));
}

void validate_sector_spec(const SectorSpec& spec) {
    if (spec.curve == nullptr) throw std::invalid_argument("SectorSpec: curve is null");
    if (!(spec.r > 0.0)) throw std::invalid_argument("SectorSpec: requires r > 0");
    if (!(spec.M >= 1.0 / delta_constant())) {
        throw std::invalid_argument("SectorSpec: requires M >= 1/delta");
    }
    if (!spec.curve->domain().contains(spec.e.x - spec.alpha)) {
        throw std::invalid_argument("SectorSpec: requires e1 - alpha in I");
    }
}

bool curve_sector_member(const SectorSpec& spec, Vec2 z) {
    const Vec2 d = z - spec.e;
    if (d.norm() > spec.r) return false;

    const Interval dom_plus = spec.curve->domain_plus();
    // alpha' must keep both z and e on the extended curve.
    double lo = spec.alpha - 1.0 / spec.M;
    double hi = spec.alpha + 1.0 / spec.M;
    lo = std::max(lo, std::max(z.x - dom_plus.hi, spec.e.x - dom_plus.hi));
    hi = std::min(hi, std::min(z.x - dom_plus.lo, spec.e.x - dom_plus.lo));
    if (lo > hi) return false;

    const double g_tol = 1e-14 * (1.0 + std::fabs(z.y) + std::fabs(spec.e.y));
    constexpr int kBrackets = 8;
    double prev_alpha = lo;
    double prev_g = sector_g(spec, z, lo);
    if (std::fabs(prev_g) <= g_tol) return true;
    for (int k = 1; k <= kBrackets; ++k) {
        const double cur_alpha = lo + (hi - lo) * k / kBrackets;
        const double cur_g = sector_g(spec, z, cur_alpha);
        if (std::fabs(cur_g) <= g_tol) return true;
        if ((prev_g < 0.0) != (cur_g < 0.0)) {
            // Bisection refines the witness; a sign change already proves
            // existence, the refinement guards against pathological g.
            double a = prev_alpha, b = cur_alpha, ga = prev_g;
            while (b - a > 1e-13) {
                const double mid = 0.5 * (a + b);
                const double gm = sector_g(spec, z, mid);
                if (std::fabs(gm) <= g_tol) return true;
                if ((ga < 0.0) == (gm < 0.0)) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            }
            return true;
        }
        prev_alpha = cur_alpha;
        prev_g = cur_g;
    }
    return false;
}

bool straight_sector_member(Vec2 e, Vec2 omega, double r, double M, Vec2 z) {
    if (!(r > 0.0) || !(M > 0.0)) {
        throw std::invalid_argument("straight_sector_member: requires r > 0 and M > 0");
    }
    const Vec2 d = z - e;
    const double dist = d.norm();
    if (dist > r) return false;
    return std::fabs(d.dot(omega)) <= dist / M;
}

ComparabilityReport verify_sector_comparability(const SectorSpec& spec, std::int64_t samples,
                                                std::uint64_t seed) {
    validate_sector_spec(spec);
    const double delta = delta_constant();
    const double lambda = spec.curve->base().lambda();
    const double inv_m = 1.0 / spec.M;
    if (!(inv_m + spec.r <= delta)) {
        throw std::invalid_argument(
            "verify_sector_comparability: hypothesis 1/M + r <= delta fails (outer inclusion)");
    }
    if (!(spec.r <= 1.0 / (2.0 * lambda * lambda * spec.M))) {
        throw std::invalid_argument(
            "verify_sector_comparability: hypothesis r <= 1/(2 lambda^2 M) fails (inner inclusion)");
    }

    ComparabilityReport report;
    const Vec2 omega = sector_normal(spec);
    const Vec2 omega_perp{-omega.y, omega.x};
    const double boost = 1.0 + 2.0 * lambda / spec.M;
    report.c1 = lambda * std::sqrt(8.0 * (1.0 + boost * boost));
    const double outer_m = spec.M / (lambda * (1.0 + spec.M * spec.r));

    Rng rng(seed);

    // Inner inclusion: X_{e,omega}(r, c1 M) subset of X_{e,alpha}(r, M).
    const double half_angle = std::asin(std::min(1.0, 1.0 / (report.c1 * spec.M)));
    const double perp_angle = std::atan2(omega_perp.y, omega_perp.x);
    for (std::int64_t i = 0; i < samples; ++i) {
        const double side = rng.next_double() < 0.5 ? 0.0 : std::numbers::pi;
        const double psi = perp_angle + side + rng.uniform(-half_angle, half_angle);
        const double rho = spec.r * std::sqrt(rng.next_double()) * (1.0 - 1e-12);
        const Vec2 z{spec.e.x + rho * std::cos(psi), spec.e.y + rho * std::sin(psi)};
        ++report.checked_inner;
        if (!curve_sector_member(spec, z)) ++report.inner_violations;
    }

    // Outer inclusion: X_{e,alpha}(r, M) subset of X_{e,omega}(r, M/(lambda(1+Mr))).
    // The offset from e is formed directly (one fewer O(1) cancellation) and
    // the comparison carries an explicit machine-precision allowance: near the
    // sector center the proportional threshold drops below the rounding noise
    // of any sample construction.
    const double s_max = spec.r / std::sqrt(2.0) * (1.0 - 1e-12);
    const double fp_floor = 64.0 * std::numeric_limits<double>::epsilon() *
                            (1.0 + std::fabs(spec.e.x) + std::fabs(spec.e.y));
    for (std::int64_t i = 0; i < samples; ++i) {
        const double alpha_prime = spec.alpha + rng.uniform(-inv_m, inv_m);
        const double s = rng.uniform(-s_max, s_max);
        const double t0 = spec.e.x - alpha_prime;
        const Vec2 d{s, spec.curve->phi_plus(t0 + s) - spec.curve->phi_plus(t0)};
        const double dist = d.norm();
        if (dist > spec.r) continue;
        ++report.checked_outer;
        if (std::fabs(d.dot(omega)) > dist / outer_m + fp_floor) ++report.outer_violations;
    }

    // Vertical-slice bound of the enclosing straight sector: quadratic in dy
    // at each dx, exact interval length against sqrt(8) mu r.
    const double mu = lambda * (inv_m + spec.r);
    report.vertical_slice_bound = std::sqrt(8.0) * mu * spec.r;
    report.slice_bound_applicable = mu < 1.0 / std::sqrt(2.0);
    if (report.slice_bound_applicable) {
        const double a_coef = omega.y * omega.y - mu * mu;  // > 0 since |omega_y| >= 1/sqrt(2) > mu
        constexpr int kSliceGrid = 2048;
        for (int i = 0; i <= kSliceGrid; ++i) {
            const double dx = spec.r * (2.0 * i / kSliceGrid - 1.0);
            const double b_coef = 2.0 * dx * omega.x * omega.y;
            const double c_coef = dx * dx * (omega.x * omega.x - mu * mu);
            const double disc = b_coef * b_coef - 4.0 * a_coef * c_coef;
            if (disc < 0.0) continue;
            const double root = std::sqrt(disc);
            double dy_lo = (-b_coef - root) / (2.0 * a_coef);
            double dy_hi = (-b_coef + root) / (2.0 * a_coef);
            const double ball = std::sqrt(std::max(0.0, spec.r * spec.r - dx * dx));
            dy_lo = std::max(dy_lo, -ball);
            dy_hi = std::min(dy_hi, ball);
            if (dy_hi > dy_lo) {
                report.max_vertical_slice = std::max(report.max_vertical_slice, dy_hi - dy_lo);
            }
        }
    }
    return report;
}

StripReport verify_strip_containment(const SectorSpec& spec, std::int64_t samples,
                                     std::uint64_t seed) {
    validate_sector_spec(spec);
    const double delta = delta_constant();
    const double lambda = spec.curve->base().lambda();
    const double inv_m = 1.0 / spec.M;
    if (!(inv_m + spec.r < std::min(1.0 / (std::sqrt(2.0) * lambda), delta))) {
        throw std::invalid_argument(
            "verify_strip_containment: hypothesis 1/M + r < min{1/(sqrt(2) lambda), delta} fails");
    }

    StripReport report;
    const double center = phi_alpha_of_e(spec);
    const double half_width = std::sqrt(8.0) * lambda * (inv_m + spec.r) * spec.r;
    report.strip = {center - half_width, center + half_width};

    Rng rng(seed);
    const double s_max = spec.r / std::sqrt(2.0) * (1.0 - 1e-12);
    for (std::int64_t i = 0; i < samples; ++i) {
        const double alpha_prime = spec.alpha + rng.uniform(-inv_m, inv_m);
        const double s = rng.uniform(-s_max, s_max);
        const Vec2 z = sector_curve_point(spec, alpha_prime, s);
        if ((z - spec.e).norm() > spec.r) continue;
        ++report.checked;
        const double image = z.y - spec.curve->phi_plus(z.x - spec.alpha);
        if (!report.strip.contains(image)) ++report.violations;
    }
    return report;
}

PigeonholeResult sliding_pigeonhole(const std::vector<double>& masses, double eps) {
    if (masses.size() < 3) {
        throw std::invalid_argument("sliding_pigeonhole: need masses for E_0..E_N with N >= 2");
    }
    const int n_top = static_cast<int>(masses.size()) - 1;
    if (masses.front() < 0.0) {
        throw std::invalid_argument("sliding_pigeonhole: masses must be nonnegative");
    }
    for (int i = 0; i < n_top; ++i) {
        if (masses[i + 1] < masses[i]) {
            throw std::invalid_argument("sliding_pigeonhole: masses must be nondecreasing");
        }
    }
    if (!(eps >= 1.0 / n_top) || !(eps <= 0.5)) {
        throw std::invalid_argument("sliding_pigeonhole: eps must lie in [1/N, 1/2]");
    }
    const int k = static_cast<int>(std::ceil(eps * n_top));
    PigeonholeResult best{0, k, std::numeric_limits<double>::infinity()};
    for (int n = 0; n + k <= n_top; ++n) {
        const double deficiency = masses[n + k] - masses[n];
        if (deficiency < best.deficiency) {
            best = {n, n + k, deficiency};
        }
    }
    return best;
}

namespace {

struct CellKey {
    std::int64_t kx;
    std::int64_t ky;
    bool operator<(const CellKey& o) const { return kx < o.kx || (kx == o.kx && ky < o.ky); }
};

// Half-open cell [kx g, (kx+1) g) x [ky g, (ky+1) g).
class CellCover {
  public:
    CellCover(double r_minus, double r_plus) : r_plus_(r_plus) {
        if (!(r_minus >= 0.0) || !(r_minus < r_plus)) {
            throw std::invalid_argument("hausdorff_content_cover: requires 0 <= r_minus < r_plus");
        }
        pitch_ = r_plus / std::sqrt(2.0);
    }

    double pitch() const { return pitch_; }

    std::int64_t cell_of(double v) const {
        return static_cast<std::int64_t>(std::floor(v / pitch_));
    }

    bool cell_intersects_rect(CellKey c, const Rect& r) const {
        const double u0 = c.kx * pitch_, u1 = (c.kx + 1) * pitch_;
        const double v0 = c.ky * pitch_, v1 = (c.ky + 1) * pitch_;
        return r.x0 < u1 && r.x1 >= u0 && r.y0 < v1 && r.y1 >= v0;
    }

    bool cell_intersects_segment(CellKey c, const Segment& s) const {
        const double u0 = c.kx * pitch_, u1 = (c.kx + 1) * pitch_;
        const double v0 = c.ky * pitch_, v1 = (c.ky + 1) * pitch_;
        if (s.horizontal()) {
            return s.y0 >= v0 && s.y0 < v1 && s.x0 < u1 && s.x1 >= u0;
        }
        return s.x0 >= u0 && s.x0 < u1 && s.y0 < v1 && s.y1 >= v0;
    }

    void add_span(double x0, double x1, double y0, double y1, auto&& keep) {
        for (std::int64_t kx = cell_of(x0); kx <= cell_of(x1); ++kx) {
            for (std::int64_t ky = cell_of(y0); ky <= cell_of(y1); ++ky) {
                keep(CellKey{kx, ky});
            }
        }
    }

    CoverResult finalize() {
        CoverResult out;
        out.balls.reserve(cells_.size());
        for (const CellKey& c : cells_) {
            out.balls.push_back(
                {{(c.kx + 0.5) * pitch_, (c.ky + 0.5) * pitch_}, r_plus_});
        }
        out.content_upper = 2.0 * r_plus_ * static_cast<double>(cells_.size());
        return out;
    }

    std::set<CellKey> cells_;

  private:
    double r_plus_;
    double pitch_ = 0.0;
};

}  // namespace

CoverResult hausdorff_content_cover(const SquareSet& s, double r_minus, double r_plus) {
    CellCover cover(r_minus, r_plus);
    for (std::size_t k = 0; k < s.count(); ++k) {
        const Rect r = s.square_rect(k);
        cover.add_span(r.x0, r.x1, r.y0, r.y1, [&](CellKey c) {
            if (cover.cell_intersects_rect(c, r)) cover.cells_.insert(c);
        });
    }
    return cover.finalize();
}

CoverResult hausdorff_content_cover(const BoundarySet& b, double r_minus, double r_plus) {
    CellCover cover(r_minus, r_plus);
    for (const Segment& seg : b.segments()) {
        cover.add_span(seg.x0, seg.x1, seg.y0, seg.y1, [&](CellKey c) {
            if (cover.cell_intersects_segment(c, seg)) cover.cells_.insert(c);
        });
    }
    return cover.finalize();
}

CoverResult hausdorff_content_cover(const WeightedPointCloud& cloud, double r_minus,
                                    double r_plus) {
    CellCover cover(r_minus, r_plus);
    for (const WeightedPoint& p : cloud.points) {
        cover.cells_.insert(CellKey{cover.cell_of(p.x), cover.cell_of(p.y)});
    }
    return cover.finalize();
}

double rectifiability_constant_lower(const WeightedPointCloud& cloud, double eps, double r,
                                     double M, const RectConstBudget& budget) {
    if (!(eps > 0.0) || !(r > 0.0) || !(M > 0.0)) {
        throw std::invalid_argument("rectifiability_constant_lower: eps, r, M must be positive");
    }
    if (cloud.points.empty()) return 0.0;

    // Fixed ladder of slope caps filtered to <= M, so enlarging M can only
    // enlarge the candidate family.
    std::vector<double> caps{0.0};
    for (double cap : {1e-3, 1e-2, 1e-1, 0.5, 1.0, 2.0, 5.0, 10.0, 1e2, 1e3, 1e4, 1e5}) {
        if (cap <= M) caps.push_back(cap);
    }

    double best = 0.0;
    const int cells = budget.coverage_cells;
    std::vector<double> us(cloud.points.size()), vs(cloud.points.size());
    std::vector<std::size_t> order(cloud.points.size());

    for (int a = 0; a < budget.angles; ++a) {
        const double theta = std::numbers::pi * a / budget.angles;
        const Vec2 w1{std::cos(theta), std::sin(theta)};
        const Vec2 w2{-std::sin(theta), std::cos(theta)};
        for (std::size_t i = 0; i < cloud.points.size(); ++i) {
            us[i] = cloud.points[i].x * w1.x + cloud.points[i].y * w1.y;
            vs[i] = cloud.points[i].x * w2.x + cloud.points[i].y * w2.y;
        }
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t i, std::size_t j) { return us[i] < us[j]; });

        const double umin = us[order.front()];
        const double umax = us[order.back()];
        const double span = std::max(umax - umin, r);

        for (int li = 0; li < budget.lengths; ++li) {
            const double frac = budget.lengths > 1
                                    ? static_cast<double>(li) / (budget.lengths - 1)
                                    : 0.0;
            const double len = r * std::pow(span / r, frac);
            for (int ai = 0; ai < budget.anchors; ++ai) {
                double lo;
                if (umax - len <= umin) {
                    lo = 0.5 * (umin + umax) - 0.5 * len;
                } else {
                    lo = umin + (umax - len - umin) * ai / (budget.anchors - 1);
                }
                const Interval j{lo, lo + len};

                // Points inside J, in u order.
                const auto begin = std::lower_bound(order.begin(), order.end(), j.lo,
                                                    [&](std::size_t i, double v) { return us[i] < v; });
                const auto end = std::upper_bound(order.begin(), order.end(), j.hi,
                                                  [&](double v, std::size_t i) { return v < us[i]; });
                if (begin == end) continue;

                // Slab medians on the node grid.
                const double raw_pitch = r / 64.0;
                const int node_count = std::min<std::int64_t>(
                    budget.max_fit_nodes,
                    static_cast<std::int64_t>(std::ceil(len / raw_pitch)) + 1);
                const double pitch = node_count > 1 ? len / (node_count - 1) : len;
                std::vector<std::vector<double>> slabs(static_cast<std::size_t>(node_count));
                for (auto it = begin; it != end; ++it) {
                    int node = static_cast<int>(std::lround((us[*it] - j.lo) / pitch));
                    node = std::clamp(node, 0, node_count - 1);
                    slabs[static_cast<std::size_t>(node)].push_back(vs[*it]);
                }
                std::vector<double> fitted(static_cast<std::size_t>(node_count));
                std::vector<bool> has(static_cast<std::size_t>(node_count), false);
                for (int k = 0; k < node_count; ++k) {
                    auto& slab = slabs[static_cast<std::size_t>(k)];
                    if (slab.empty()) continue;
                    std::nth_element(slab.begin(), slab.begin() + slab.size() / 2, slab.end());
                    fitted[static_cast<std::size_t>(k)] = slab[slab.size() / 2];
                    has[static_cast<std::size_t>(k)] = true;
                }
                // Fill empty slabs from the nearest fitted neighbor.
                double carry = 0.0;
                bool carry_valid = false;
                for (int k = 0; k < node_count; ++k) {
                    if (has[static_cast<std::size_t>(k)]) {
                        carry = fitted[static_cast<std::size_t>(k)];
                        carry_valid = true;
                    } else if (carry_valid) {
                        fitted[static_cast<std::size_t>(k)] = carry;
                    }
                }
                carry_valid = false;
                for (int k = node_count - 1; k >= 0; --k) {
                    if (has[static_cast<std::size_t>(k)]) {
                        carry = fitted[static_cast<std::size_t>(k)];
                        carry_valid = true;
                    } else if (carry_valid && !has[static_cast<std::size_t>(k)]) {
                        fitted[static_cast<std::size_t>(k)] = carry;
                        has[static_cast<std::size_t>(k)] = true;
                    }
                }

                std::vector<double> clamped(fitted.size());
                std::vector<bool> covered(static_cast<std::size_t>(cells));
                for (double cap : caps) {
                    clamped = fitted;
                    for (int k = 1; k < node_count; ++k) {
                        const double lo_v = clamped[static_cast<std::size_t>(k - 1)] - cap * pitch;
                        const double hi_v = clamped[static_cast<std::size_t>(k - 1)] + cap * pitch;
                        clamped[static_cast<std::size_t>(k)] =
                            std::clamp(clamped[static_cast<std::size_t>(k)], lo_v, hi_v);
                    }
                    std::fill(covered.begin(), covered.end(), false);
                    int covered_count = 0;
                    for (auto it = begin; it != end; ++it) {
                        const double u = us[*it];
                        const double pos = (u - j.lo) / pitch;
                        const int k0 = std::clamp(static_cast<int>(pos), 0, node_count - 2);
                        const double frac_k = std::clamp(pos - k0, 0.0, 1.0);
                        const double graph = node_count > 1
                                                 ? clamped[static_cast<std::size_t>(k0)] * (1.0 - frac_k) +
                                                       clamped[static_cast<std::size_t>(k0 + 1)] * frac_k
                                                 : clamped[0];
                        if (std::fabs(vs[*it] - graph) <= eps) {
                            int cell = static_cast<int>((u - j.lo) / len * cells);
                            cell = std::clamp(cell, 0, cells - 1);
                            if (!covered[static_cast<std::size_t>(cell)]) {
                                covered[static_cast<std::size_t>(cell)] = true;
                                ++covered_count;
                            }
                        }
                    }
                    best = std::max(best, static_cast<double>(covered_count) / cells);
                }
            }
        }
    }
    return std::min(best, 1.0);
}

namespace {

// Vertical incidence with C_{e,alpha}: |Phi_{alpha,+}(p) - Phi_{alpha,+}(e)| <= band.
bool on_curve(const ExtendedGraphCurve& curve, Vec2 e, double alpha, Vec2 p, double band) {
    const Interval dom_plus = curve.domain_plus();
    const double tp = p.x - alpha;
    const double te = e.x - alpha;
    if (!dom_plus.contains(tp) || !dom_plus.contains(te)) return false;
    const double gap = std::fabs((p.y - curve.phi_plus(tp)) - (e.y - curve.phi_plus(te)));
    return gap <= band;
}

}  // namespace

bool detect_high_multiplicity(const ExtendedGraphCurve& curve, Vec2 e, double alpha,
                              const WeightedPointCloud& cloud, double r_sep, int threshold,
                              double band) {
    if (!(r_sep > 0.0)) throw std::invalid_argument("detect_high_multiplicity: r_sep must be > 0");
    if (band < 0.0) throw std::invalid_argument("detect_high_multiplicity: band must be >= 0");
    std::vector<Vec2> incident;
    for (const WeightedPoint& p : cloud.points) {
        if (on_curve(curve, e, alpha, {p.x, p.y}, band)) incident.push_back({p.x, p.y});
    }
    std::sort(incident.begin(), incident.end(),
              [](const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Vec2> kept;
    for (const Vec2& p : incident) {
        bool separated = true;
        for (const Vec2& q : kept) {
            if ((p - q).norm() < r_sep) {
                separated = false;
                break;
            }
        }
        if (separated) {
            kept.push_back(p);
            if (static_cast<int>(kept.size()) >= threshold) return true;
        }
    }
    return false;
}

bool detect_positive_multiplicity(const ExtendedGraphCurve& curve, Vec2 e, double alpha,
                                  const WeightedPointCloud& cloud, const ScaleSequence& scales,
                                  int n, int k, double band) {
    if (n - k < 1 || n + k > scales.N()) {
        throw std::invalid_argument("detect_positive_multiplicity: n +- k out of scale range");
    }
    const double lo = scales.r_minus(n + k);
    const double hi = scales.r_plus(n - k);
    for (const WeightedPoint& p : cloud.points) {
        if (!on_curve(curve, e, alpha, {p.x, p.y}, band)) continue;
        const double dist = (Vec2{p.x, p.y} - e).norm();
        if (dist >= lo && dist <= hi) return true;
    }
    return false;
}

bool detect_high_density_strip(const ExtendedGraphCurve& curve, double alpha, Interval j,
                               const WeightedPointCloud& cloud, double threshold_ratio) {
    if (!(j.length() > 0.0)) {
        throw std::invalid_argument("detect_high_density_strip: degenerate strip interval");
    }
    const Interval dom_plus = curve.domain_plus();
    double mass = 0.0;
    for (const WeightedPoint& p : cloud.points) {
        const double t = p.x - alpha;
        if (!dom_plus.contains(t)) continue;
        if (j.contains(p.y - curve.phi_plus(t))) mass += p.w;
    }
    return mass >= threshold_ratio * j.length();
}

bool detect_curve_pair(const SectorSpec& spec, const WeightedPointCloud& cloud, double r_inner,
                       double threshold) {
    validate_sector_spec(spec);
    if (!(r_inner < spec.r)) {
        throw std::invalid_argument("detect_curve_pair: requires r_inner < r");
    }
    SectorSpec outer = spec;
    outer.M = spec.M / 1e4;
    SectorSpec inner = outer;
    inner.r = r_inner;
    double mass = 0.0;
    for (const WeightedPoint& p : cloud.points) {
        const Vec2 z{p.x, p.y};
        if (curve_sector_member(outer, z) && !curve_sector_member(inner, z)) mass += p.w;
    }
    return mass > threshold;
}

}  // namespace favard
