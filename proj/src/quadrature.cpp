#include "favard/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "favard/parallel.hpp"

namespace favard {
namespace {

double simpson_sum(const std::vector<double>& values, double h) {
    const std::size_t n = values.size() - 1;  // subinterval count, even
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < n; i += 2) odd += values[i];
    for (std::size_t i = 2; i < n; i += 2) even += values[i];
    return h / 3.0 * (values[0] + values[n] + 4.0 * odd + 2.0 * even);
}

}  // namespace

QuadratureResult integrate_simpson_doubling(const std::function<double(double)>& f, Interval range,
                                            const QuadratureSpec& spec) {
    if (range.empty() || range.length() <= 0.0) {
        throw std::invalid_argument("integrate_simpson_doubling: empty integration range");
    }
    if (!(spec.rel_tol > 0.0)) {
        throw std::invalid_argument("integrate_simpson_doubling: rel_tol must be positive");
    }
    const std::size_t m0 = spec.initial_intervals < 2 ? 2 : (spec.initial_intervals + 1) / 2 * 2;
    const double length = range.length();

    std::vector<double> values(m0 + 1);
    parallel_for(values.size(), spec.workers, [&](std::size_t i) {
        values[i] = f(range.lo + length * static_cast<double>(i) / static_cast<double>(m0));
    });

    QuadratureResult result;
    result.evaluations = values.size();
    double prev = simpson_sum(values, length / static_cast<double>(m0));

    for (int level = 1; level <= spec.max_refinements; ++level) {
        const std::size_t m_old = values.size() - 1;
        const std::size_t m_new = 2 * m_old;
        std::vector<double> midpoints(m_old);
        parallel_for(m_old, spec.workers, [&](std::size_t i) {
            const double t =
                range.lo + length * (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m_new);
            midpoints[i] = f(t);
        });
        result.evaluations += m_old;

        std::vector<double> merged(m_new + 1);
        for (std::size_t i = 0; i < m_old; ++i) {
            merged[2 * i] = values[i];
            merged[2 * i + 1] = midpoints[i];
        }
        merged[m_new] = values[m_old];
        values = std::move(merged);

        const double cur = simpson_sum(values, length / static_cast<double>(m_new));
        const double diff = std::fabs(cur - prev);
        const double scale = std::fabs(cur);
        result.value = cur;
        result.refinements = level;
        result.achieved_rel = scale > 0.0 ? diff / scale : (diff > 0.0 ? 1.0 : 0.0);
        prev = cur;
        if (result.achieved_rel < spec.rel_tol) {
            result.converged = true;
            return result;
        }
    }
    return result;
}

}  // namespace favard
