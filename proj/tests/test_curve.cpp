#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "favard/curve.hpp"
#include "favard/rng.hpp"

using favard::delta_constant;
using favard::ExtendedGraphCurve;
using favard::extend_curve;
using favard::Frame;
using favard::frame_at;
using favard::GraphCurve;
using favard::make_circle_arc;
using favard::make_parabola;
using favard::Rng;
using favard::TranslatedCurve;
using favard::Vec2;

TEST_CASE("delta constant is the double sum of its terms") {
    CHECK(delta_constant() == 1e-5 + std::pow(2.0, -100.0));
}

TEST_CASE("parabola factory") {
    const GraphCurve p = make_parabola(0.5, {-0.9, 0.9});
    CHECK(p.lambda() == 1.0);
    CHECK(p.slope_bound() == doctest::Approx(0.9));
    CHECK(p.phi(0.5) == doctest::Approx(0.125));

    CHECK_THROWS_AS(make_parabola(0.5, {-2.0, 2.0}), std::invalid_argument);

    const GraphCurve q = make_parabola(0.25, {-1.0, 1.0});
    CHECK(q.lambda() == 2.0);
}

TEST_CASE("circle arc factory") {
    const GraphCurve arc = make_circle_arc(2.0, {-1.0, 1.0});
    CHECK(arc.slope_bound() == doctest::Approx(1.0 / std::sqrt(3.0)));

    // Curvature range oracle: brute-force extrema of phi'' = r^2 (r^2-t^2)^(-3/2).
    double curv_min = 1e300, curv_max = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        const double t = -1.0 + 2.0 * i / 100000.0;
        const double c = 4.0 / std::pow(4.0 - t * t, 1.5);
        curv_min = std::min(curv_min, c);
        curv_max = std::max(curv_max, c);
    }
    CHECK(curv_min == doctest::Approx(0.5));
    CHECK(arc.lambda() == doctest::Approx(std::max(curv_max, 1.0 / curv_min)));
    CHECK(arc.lambda() == doctest::Approx(2.0));

    CHECK_THROWS_AS(make_circle_arc(2.0, {0.0, 0.0}), std::invalid_argument);

    // |phi'(0.9)| = 0.9/sqrt(1-0.81) ~ 2.06 > 1 - delta.
    CHECK(0.9 / std::sqrt(1.0 - 0.81) == doctest::Approx(2.0647).epsilon(1e-3));
    CHECK_THROWS_AS(make_circle_arc(1.0, {-0.9, 0.9}), std::invalid_argument);
}

TEST_CASE("extension matches the three-branch formula") {
    const ExtendedGraphCurve ext = extend_curve(make_parabola(0.5, {-0.9, 0.9}));
    const double delta = delta_constant();

    // Right branch at b + delta with lambda = 1, sgn(phi'') = +1:
    // phi(0.9) + 0.9 delta + delta^2/2.
    const double expected = 0.5 * 0.81 + 0.9 * delta + 0.5 * delta * delta;
    CHECK(ext.phi_plus(0.9 + delta) == doctest::Approx(expected).epsilon(1e-15));

    // Interior branch is phi itself.
    CHECK(ext.phi_plus(0.0) == 0.0);

    // C^1 junction at a.
    const double a = -0.9;
    const double h = 1e-7;
    const double left = (ext.phi_plus(a) - ext.phi_plus(a - h)) / h;
    const double right = (ext.phi_plus(a + h) - ext.phi_plus(a)) / h;
    CHECK(left == doctest::Approx(right).epsilon(1e-6));
    CHECK(ext.dphi_plus(a) == doctest::Approx(-0.9));
}

TEST_CASE("extend-then-restrict identity") {
    const ExtendedGraphCurve ext = extend_curve(make_circle_arc(2.0, {-1.0, 1.0}));
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const double t = rng.uniform(-1.0, 1.0);
        CHECK(ext.phi_plus(t) == ext.base().phi(t));
    }
}

TEST_CASE("extension keeps the bilipschitz window and the slope cap") {
    for (const GraphCurve& base :
         {make_parabola(0.5, {-0.9, 0.9}), make_circle_arc(2.0, {-1.0, 1.0})}) {
        const ExtendedGraphCurve ext = extend_curve(base);
        const double lambda = base.lambda();
        const auto dom = ext.domain_plus();
        Rng rng(17);
        double max_slope = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double s = rng.uniform(dom.lo, dom.hi);
            const double t = rng.uniform(dom.lo, dom.hi);
            const double gap = std::fabs(s - t);
            if (gap == 0.0) continue;
            const double dgap = std::fabs(ext.dphi_plus(s) - ext.dphi_plus(t));
            CHECK(dgap <= lambda * gap * (1.0 + 1e-9));
            CHECK(dgap >= gap / lambda * (1.0 - 1e-9));
            max_slope = std::max({max_slope, std::fabs(ext.dphi_plus(s))});
        }
        CHECK(max_slope <= 1.0);
    }
}

TEST_CASE("frame_at") {
    const ExtendedGraphCurve ext = extend_curve(make_parabola(0.5, {-0.9, 0.9}));

    const Frame f0 = frame_at(ext, {0.0, 0.0}, 0.0);
    CHECK(f0.omega1.x == doctest::Approx(1.0));
    CHECK(f0.omega1.y == doctest::Approx(0.0));
    CHECK(f0.omega2.x == doctest::Approx(0.0));
    CHECK(f0.omega2.y == doctest::Approx(-1.0));

    const Frame f1 = frame_at(ext, {0.5, 0.4}, 0.0);
    const double norm = std::sqrt(1.25);
    CHECK(f1.omega1.x == doctest::Approx(1.0 / norm));
    CHECK(f1.omega1.y == doctest::Approx(0.5 / norm));

    // Orthonormality.
    CHECK(std::fabs(f1.omega1.dot(f1.omega2)) < 1e-12);
    CHECK(f1.omega1.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f1.omega2.norm() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(frame_at(ext, {5.0, 0.0}, 0.0), std::domain_error);
}

TEST_CASE("translated curve passes through its generating point") {
    const ExtendedGraphCurve ext = extend_curve(make_parabola(0.5, {-0.9, 0.9}));
    const Vec2 e{0.3, 0.7};
    const TranslatedCurve c(ext, e, 0.1);
    const Vec2 back = c.point_at(e.x - 0.1);
    CHECK(back.x == doctest::Approx(e.x));
    CHECK(back.y == doctest::Approx(e.y));
}

TEST_CASE("lambda certificate is validated by sampling") {
    // Claiming lambda = 1 for the quarter-circle profile must fail: its
    // curvature reaches 1/2 < 1/lambda.
    auto phi = [](double t) { return 2.0 - std::sqrt(4.0 - t * t); };
    auto dphi = [](double t) { return t / std::sqrt(4.0 - t * t); };
    CHECK_THROWS_AS(GraphCurve(phi, dphi, +1, {-1.0, 1.0}, 1.0, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(GraphCurve(phi, dphi, +1, {-1.0, 1.0}, 2.0, 1.0), std::invalid_argument);
    CHECK_NOTHROW(GraphCurve(phi, dphi, +1, {-1.0, 1.0}, 2.0, 0.58));
}
