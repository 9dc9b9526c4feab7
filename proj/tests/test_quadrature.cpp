#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "favard/quadrature.hpp"

using favard::integrate_simpson_doubling;
using favard::QuadratureResult;
using favard::QuadratureSpec;

TEST_CASE("polynomials integrate exactly") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    const auto cubic = integrate_simpson_doubling([](double t) { return t * t * t; }, {0.0, 2.0}, spec);
    CHECK(cubic.converged);
    CHECK(cubic.value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("smooth integrand converges to the analytic value") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    const auto r = integrate_simpson_doubling([](double t) { return std::sin(t); },
                                              {0.0, std::numbers::pi}, spec);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("kinked integrand still converges under doubling") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-6;
    const auto r = integrate_simpson_doubling([](double t) { return std::fabs(std::cos(t)); },
                                              {0.0, 2.0 * std::numbers::pi}, spec);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-5));
}

TEST_CASE("non-convergence is flagged, not thrown") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-15;
    spec.max_refinements = 2;
    const auto r = integrate_simpson_doubling([](double t) { return std::fabs(t - 0.37); },
                                              {0.0, 1.0}, spec);
    CHECK(!r.converged);
    CHECK(r.achieved_rel > 0.0);
    CHECK(r.refinements == 2);
}

TEST_CASE("worker count does not change the result") {
    QuadratureSpec one;
    one.rel_tol = 1e-9;
    one.workers = 1;
    QuadratureSpec four = one;
    four.workers = 4;
    auto f = [](double t) { return std::exp(-t * t) * std::cos(5.0 * t); };
    const auto a = integrate_simpson_doubling(f, {-2.0, 2.0}, one);
    const auto b = integrate_simpson_doubling(f, {-2.0, 2.0}, four);
    CHECK(a.value == b.value);  // bitwise
}

TEST_CASE("invalid inputs are rejected") {
    QuadratureSpec spec;
    CHECK_THROWS_AS(integrate_simpson_doubling([](double) { return 0.0; }, {1.0, 0.0}, spec),
                    std::invalid_argument);
    spec.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_simpson_doubling([](double) { return 0.0; }, {0.0, 1.0}, spec),
                    std::invalid_argument);
}
