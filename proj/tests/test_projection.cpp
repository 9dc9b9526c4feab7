#include <cmath>
#include <numbers>

#include "doctest.h"
#include "favard/curve.hpp"
#include "favard/fractal.hpp"
#include "favard/projection.hpp"
#include "favard/rng.hpp"

using favard::boundary;
using favard::cantor_generation;
using favard::ExtendedGraphCurve;
using favard::extend_curve;
using favard::Interval;
using favard::make_circle_arc;
using favard::make_parabola;
using favard::parameter_domain;
using favard::PhiExtrema;
using favard::ProjectionQuery;
using favard::Rect;
using favard::Rng;
using favard::SquareSet;
using favard::Vec2;

namespace {

const ExtendedGraphCurve& parabola() {
    static const ExtendedGraphCurve c = extend_curve(make_parabola(0.5, {-0.9, 0.9}));
    return c;
}

// Brute-force image measure of a square: min/max of phi over the clipped
// parameter window sampled on a dense grid.
double rasterized_square_measure(const ProjectionQuery& q, const Rect& square, int samples) {
    const Interval t_range =
        Interval{square.x0 - q.alpha, square.x1 - q.alpha}.clipped_to(q.param_interval());
    if (t_range.empty()) return 0.0;
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i <= samples; ++i) {
        const double t = t_range.lo + t_range.length() * i / samples;
        const double v = q.phi(t);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return (square.y1 - square.y0) + (hi - lo);
}

}  // namespace

TEST_CASE("parameter domain is [0,1] - I") {
    const Interval a = parameter_domain(parabola());
    CHECK(a.lo == doctest::Approx(-0.9));
    CHECK(a.hi == doctest::Approx(1.9));
}

TEST_CASE("project_point") {
    const ProjectionQuery q{&parabola(), 0.0, false};
    const auto v = project_point(q, {0.5, 1.0});
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(0.875));

    CHECK(!project_point(q, {2.0, 1.0}).has_value());

    const ExtendedGraphCurve arc = extend_curve(make_circle_arc(2.0, {-1.0, 1.0}));
    const ProjectionQuery qa{&arc, 1.0, false};
    const auto apex = project_point(qa, {1.0, 3.0});
    REQUIRE(apex.has_value());
    CHECK(*apex == doctest::Approx(3.0));
}

TEST_CASE("project_square basic") {
    const ProjectionQuery q{&parabola(), 0.0, false};

    const auto img = project_square(q, {0.0, 0.25, 0.0, 0.25});
    REQUIRE(img.has_value());
    CHECK(img->lo == doctest::Approx(-0.03125));
    CHECK(img->hi == doctest::Approx(0.25));
    CHECK(img->length() == doctest::Approx(0.28125));

    // Square entirely left of alpha + I.
    CHECK(!project_square(q, {-3.0, -2.5, 0.0, 0.5}).has_value());

    // Interior critical point: the square straddles the parabola minimum.
    const auto straddle = project_square(q, {-0.25, 0.25, 0.0, 0.25});
    REQUIRE(straddle.has_value());
    CHECK(straddle->lo == doctest::Approx(0.0 - 0.5 * 0.0625));
    CHECK(straddle->hi == doctest::Approx(0.25));
    const double oracle = rasterized_square_measure(q, {-0.25, 0.25, 0.0, 0.25}, 1000000);
    CHECK(straddle->length() == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("project_square matches the rasterization oracle on random cases") {
    Rng rng(2024);
    const ExtendedGraphCurve arc = extend_curve(make_circle_arc(2.0, {-1.0, 1.0}));
    for (int trial = 0; trial < 40; ++trial) {
        const ExtendedGraphCurve& curve = trial % 2 == 0 ? parabola() : arc;
        const Interval a = parameter_domain(curve);
        const ProjectionQuery q{&curve, rng.uniform(a.lo, a.hi), false};
        const double x0 = rng.uniform(0.0, 0.8);
        const double y0 = rng.uniform(0.0, 0.8);
        const Rect square{x0, x0 + rng.uniform(0.01, 0.2), y0, y0 + rng.uniform(0.01, 0.2)};
        const auto img = project_square(q, square);
        const double expect = rasterized_square_measure(q, square, 1000000);
        CHECK((img ? img->length() : 0.0) == doctest::Approx(expect).epsilon(1e-4));
    }
}

TEST_CASE("project_linear") {
    const SquareSet k1 = cantor_generation(1);
    const auto shadow = project_linear(0.0, k1);
    CHECK(shadow.measure() == doctest::Approx(0.5));
    REQUIRE(shadow.size() == 2);
    CHECK(shadow.intervals()[0].hi == doctest::Approx(0.25));

    const SquareSet k0 = cantor_generation(0);
    const auto vertical = project_linear(std::numbers::pi / 2.0, k0);
    CHECK(vertical.measure() == doctest::Approx(1.0));

    const auto diagonal = project_linear(std::numbers::pi / 4.0, k0);
    CHECK(diagonal.measure() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("project_set equals on boundary and solid Cantor sets") {
    Rng rng(5);
    for (int n = 0; n <= 3; ++n) {
        const SquareSet kn = cantor_generation(n);
        const auto en = boundary(kn);
        const Interval a = parameter_domain(parabola());
        for (int trial = 0; trial < 8; ++trial) {
            const ProjectionQuery q{&parabola(), rng.uniform(a.lo, a.hi), false};
            const auto solid = project_set(q, kn);
            const auto edge = project_set(q, en);
            CHECK(solid.measure() == doctest::Approx(edge.measure()).epsilon(1e-12));
            CHECK(solid.intersect(edge).measure() == doctest::Approx(solid.measure()).epsilon(1e-12));
        }
    }
}

TEST_CASE("project_set of the empty set is empty") {
    const SquareSet empty(0, 4, {});
    const ProjectionQuery q{&parabola(), 0.0, false};
    CHECK(project_set(q, empty).empty());
}

TEST_CASE("vertical extent is preserved for the unit square") {
    const SquareSet k0 = cantor_generation(0);
    const ProjectionQuery q{&parabola(), 0.5, false};
    CHECK(project_set(q, k0).measure() >= 1.0);
}

TEST_CASE("contraction: image measure bounded by twice the diameter") {
    Rng rng(77);
    const Interval a = parameter_domain(parabola());
    for (int trial = 0; trial < 500; ++trial) {
        const double side = rng.uniform(0.001, 0.5);
        const double x0 = rng.uniform(-0.2, 1.0);
        const double y0 = rng.uniform(-0.2, 1.0);
        const ProjectionQuery q{&parabola(), rng.uniform(a.lo, a.hi), false};
        const auto img = project_square(q, {x0, x0 + side, y0, y0 + side});
        if (img) CHECK(img->length() <= 2.0 * side * std::sqrt(2.0) + 1e-12);
    }
}

TEST_CASE("monotone under component inclusion") {
    const SquareSet k2 = cantor_generation(2);
    std::vector<std::pair<std::int64_t, std::int64_t>> half(k2.squares().begin(),
                                                            k2.squares().begin() + 8);
    const SquareSet sub(2, 4, std::move(half));
    Rng rng(8);
    const Interval a = parameter_domain(parabola());
    for (int trial = 0; trial < 20; ++trial) {
        const ProjectionQuery q{&parabola(), rng.uniform(a.lo, a.hi), false};
        const auto small = project_set(q, sub);
        const auto big = project_set(q, k2);
        CHECK(small.intersect(big).measure() == doctest::Approx(small.measure()).epsilon(1e-12));
    }
}

TEST_CASE("translation equivariance in the vertical coordinate") {
    Rng rng(9);
    const ProjectionQuery q{&parabola(), 0.3, false};
    for (int trial = 0; trial < 100; ++trial) {
        const Vec2 p{rng.uniform(-0.5, 1.2), rng.uniform(-1.0, 1.0)};
        const double c = rng.uniform(-2.0, 2.0);
        const auto base = project_point(q, p);
        const auto moved = project_point(q, {p.x, p.y + c});
        REQUIRE(base.has_value() == moved.has_value());
        if (base) CHECK(*moved == doctest::Approx(*base + c).epsilon(1e-12));
    }
}

TEST_CASE("multiplicity counting") {
    const SquareSet k0 = cantor_generation(0);
    const ProjectionQuery q{&parabola(), 0.5, false};
    const auto img = project_set(q, k0);
    REQUIRE(!img.empty());
    CHECK(multiplicity_at(q, img.intervals()[0].center(), k0) == 1);
    CHECK(multiplicity_at(q, img.intervals()[0].hi + 1.0, k0) == 0);

    // Construct a configuration where the four K_1 images are pairwise
    // disjoint, then check a point in exactly one of them.
    const SquareSet k1 = cantor_generation(1);
    const Interval a = parameter_domain(parabola());
    Rng rng(31);
    bool found = false;
    for (int trial = 0; trial < 4000 && !found; ++trial) {
        const ProjectionQuery qa{&parabola(), rng.uniform(a.lo, a.hi), false};
        std::vector<Interval> images;
        for (std::size_t s = 0; s < k1.count(); ++s) {
            if (auto iv = project_square(qa, k1.square_rect(s))) images.push_back(*iv);
        }
        if (images.size() != 4) continue;
        bool disjoint = true;
        for (std::size_t i = 0; i < images.size() && disjoint; ++i) {
            for (std::size_t j = i + 1; j < images.size() && disjoint; ++j) {
                if (images[i].lo <= images[j].hi && images[j].lo <= images[i].hi) disjoint = false;
            }
        }
        if (!disjoint) continue;
        found = true;
        CHECK(multiplicity_at(qa, images[0].center(), k1) == 1);
    }
    CHECK(found);
}
