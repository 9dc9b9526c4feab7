#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "favard/csv.hpp"
#include "favard/interval_union.hpp"
#include "favard/rng.hpp"

using favard::Interval;
using favard::IntervalUnion;
using favard::Rng;

namespace {

IntervalUnion random_union(Rng& rng, int max_parts) {
    std::vector<Interval> parts;
    const int n = 1 + static_cast<int>(rng.next_u64() % max_parts);
    for (int i = 0; i < n; ++i) {
        const double lo = rng.uniform(-2.0, 2.0);
        const double len = rng.uniform(0.0, 1.0);
        parts.push_back({lo, lo + len});
    }
    return IntervalUnion::normalize(std::move(parts));
}

}  // namespace

TEST_CASE("normalize merges overlaps") {
    const auto u = IntervalUnion::normalize({{0.0, 1.0}, {0.5, 2.0}});
    REQUIRE(u.size() == 1);
    CHECK(u.intervals()[0].lo == 0.0);
    CHECK(u.intervals()[0].hi == 2.0);
}

TEST_CASE("normalize keeps disjoint parts") {
    const auto u = IntervalUnion::normalize({{0.0, 1.0}, {2.0, 3.0}});
    REQUIRE(u.size() == 2);
    CHECK(u.intervals()[0].hi == 1.0);
    CHECK(u.intervals()[1].lo == 2.0);
}

TEST_CASE("normalize fuses sub-epsilon gaps") {
    const auto u = IntervalUnion::normalize({{0.0, 1.0}, {1.0 + 1e-13, 2.0}});
    REQUIRE(u.size() == 1);
    CHECK(u.measure() == doctest::Approx(2.0));
}

TEST_CASE("normalize rejects inverted intervals") {
    CHECK_THROWS_AS(IntervalUnion::normalize({{1.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("measure") {
    CHECK(IntervalUnion::normalize({{0.0, 1.0}, {2.0, 3.0}}).measure() == 2.0);
    CHECK(IntervalUnion{}.measure() == 0.0);
    CHECK(IntervalUnion::normalize({{0.0, 0.28125}}).measure() == 0.28125);
}

TEST_CASE("dilate") {
    const Interval five_j = favard::dilate(0.5, 0.1, 5.0);
    CHECK(five_j.lo == doctest::Approx(0.0));
    CHECK(five_j.hi == doctest::Approx(1.0));
    const Interval identity = favard::dilate(0.0, 1.0, 1.0);
    CHECK(identity.lo == -1.0);
    CHECK(identity.hi == 1.0);
    const Interval degenerate = favard::dilate(1.0, 0.0, 5.0);
    CHECK(degenerate.lo == 1.0);
    CHECK(degenerate.hi == 1.0);
}

TEST_CASE("intersect") {
    const auto a = IntervalUnion::normalize({{0.0, 2.0}});
    const auto b = IntervalUnion::normalize({{1.0, 3.0}});
    const auto ab = a.intersect(b);
    REQUIRE(ab.size() == 1);
    CHECK(ab.intervals()[0].lo == 1.0);
    CHECK(ab.intervals()[0].hi == 2.0);

    const auto c = IntervalUnion::normalize({{0.0, 1.0}});
    const auto d = IntervalUnion::normalize({{2.0, 3.0}});
    CHECK(c.intersect(d).empty());

    CHECK(a.intersect(a) == a);
}

TEST_CASE("normalize is idempotent on random unions") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto u = random_union(rng, 8);
        std::vector<Interval> again(u.intervals());
        CHECK(IntervalUnion::normalize(std::move(again)) == u);
    }
}

TEST_CASE("measure is subadditive and satisfies inclusion-exclusion") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_union(rng, 6);
        const auto b = random_union(rng, 6);
        const auto join = a.unite(b);
        const auto meet = a.intersect(b);
        CHECK(join.measure() <= a.measure() + b.measure() + 1e-12);
        CHECK(meet.measure() + join.measure() ==
              doctest::Approx(a.measure() + b.measure()).epsilon(1e-12));
    }
}

TEST_CASE("contains") {
    const auto u = IntervalUnion::normalize({{0.0, 1.0}, {2.0, 3.0}});
    CHECK(u.contains(0.5));
    CHECK(u.contains(1.0));
    CHECK(!u.contains(1.5));
    CHECK(u.contains(2.0));
    CHECK(!u.contains(3.5));
}

TEST_CASE("CSV round trip keeps 17 significant digits") {
    const auto u = IntervalUnion::normalize({{0.1, 1.0 / 3.0}, {2.0, 2.0 + 1e-9}});
    const std::string path = "interval_union_test.csv";
    favard::write_interval_csv(path, u);
    const auto table = favard::read_csv(path);
    REQUIRE(table.header == std::vector<std::string>{"lo", "hi"});
    REQUIRE(table.rows.size() == u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(table.rows[i][0] == u.intervals()[i].lo);  // exact after round trip
        CHECK(table.rows[i][1] == u.intervals()[i].hi);
    }
    std::remove(path.c_str());
}
