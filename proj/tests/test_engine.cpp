#include <complex>

#include "doctest.h"

#include "flatk/engine.hpp"
#include "flatk/errors.hpp"

using namespace flatk;

namespace {

IndexJob basic_job(const RootDatum& d, int genus, long level, int order = 0) {
    IndexJob job;
    job.datum = &d;
    job.genus = genus;
    job.level = level;
    job.order = order;
    job.boundary = {trivial_character(d.rank)};
    return job;
}

} // namespace

TEST_CASE("torus counts reproduce the closed genus formulas") {
    const RootDatum& d = root_datum('A', 1);
    // genus 1: number of regular orbits, so level + 1
    for (long k = 1; k <= 6; ++k) {
        const auto v = index_pairing<Cyclo>(basic_job(d, 1, k));
        CHECK(v.total[0].rationalize() == Rational(k + 1));
    }
    // genus 2: (ell^3 - ell) / 6
    for (long k = 1; k <= 4; ++k) {
        const long ell = k + 2;
        const auto v = index_pairing<Cyclo>(basic_job(d, 2, k));
        CHECK(v.total[0].rationalize() == Rational(ell * ell * ell - ell) / Rational(6));
    }
    // genus 0 through 3 at level 1: 1, 2, 4, 8
    for (int g = 0; g <= 3; ++g) {
        const auto v = index_pairing<Cyclo>(basic_job(d, g, 1));
        CHECK(v.total[0].rationalize() == Rational(1L << g));
    }
}

TEST_CASE("per-orbit values at level one, genus two") {
    const RootDatum& d = root_datum('A', 1);
    const auto v = index_pairing<Cyclo>(basic_job(d, 2, 1));
    REQUIRE(v.points.size() == 2);
    CHECK(v.summands[0][0].rationalize() == Rational(2));
    CHECK(v.summands[1][0].rationalize() == Rational(2));
    // breakdown sums to the total
    Cyclo acc;
    for (const auto& s : v.summands)
        acc += s[0];
    CHECK(acc == v.total[0]);
}

TEST_CASE("no regular points means a zero value") {
    const RootDatum& d = root_datum('A', 1);
    const auto v = index_pairing<Cyclo>(basic_job(d, 2, -1)); // ell = 1
    CHECK(v.points.empty());
    CHECK(v.total.is_zero());
}

TEST_CASE("job validation") {
    const RootDatum& d = root_datum('A', 1);
    CHECK_THROWS_AS(index_pairing<Cyclo>(basic_job(d, 2, -2)), NonIntegralLevel);
    CHECK_THROWS_AS(index_pairing<Cyclo>(basic_job(d, -1, 1)), SpecError);
    IndexJob no_boundary = basic_job(d, 1, 1);
    no_boundary.boundary.clear();
    CHECK_THROWS_AS(index_pairing<Cyclo>(no_boundary), SpecError);
    IndexJob bad_order = basic_job(d, 1, 1);
    bad_order.order = -1;
    CHECK_THROWS_AS(index_pairing<Cyclo>(bad_order), SpecError);
}

TEST_CASE("summands reject non-regular points") {
    const RootDatum& d = root_datum('A', 1);
    const IndexJob job = basic_job(d, 2, 1);
    CHECK_THROWS_AS(orbit_summand<Cyclo>(job, TorusPoint{{0}, 3}), NonRegularPoint);
    CHECK_THROWS_AS(orbit_summand<Cyclo>(job, TorusPoint{{3}, 3}), NonRegularPoint);
}

TEST_CASE("deformation does not move the constant term") {
    for (const char* label : {"A1", "A2"}) {
        const RootDatum& d = root_datum(label[0], label[1] - '0');
        IndexJob plain = basic_job(d, 2, 2);
        IndexJob deformed = basic_job(d, 2, 2, 3);
        deformed.deformation = cached_character(d, d.highest_root);
        const auto v0 = index_pairing<Cyclo>(plain);
        const auto v1 = index_pairing<Cyclo>(deformed);
        CHECK(v1.total[0] == v0.total[0]);
    }
}

TEST_CASE("genus one with trivial boundary stays exactly one per orbit") {
    const RootDatum& d = root_datum('A', 2);
    IndexJob job = basic_job(d, 1, 1, 3);
    job.deformation = cached_character(d, d.highest_root);
    const auto v = index_pairing<Cyclo>(job);
    for (const auto& s : v.summands)
        CHECK(s == TSeries<Cyclo>::one(3));
}

TEST_CASE("point insertion multiplies in the trace") {
    const RootDatum& d = root_datum('A', 1);
    IndexJob job = basic_job(d, 1, 1);
    job.point_insertion = cached_character(d, {1});
    const auto v = index_pairing<Cyclo>(job);
    REQUIRE(v.points.size() == 2);
    // chi(exp(w/3)) = 2 cos(pi/3) = 1, chi(exp(2w/3)) = 2 cos(2pi/3) = -1
    CHECK(v.summands[0][0].rationalize() == Rational(1));
    CHECK(v.summands[1][0].rationalize() == Rational(-1));
    CHECK(v.total[0].rationalize() == Rational(0));
}

TEST_CASE("curve insertion contraction at a frozen point") {
    const RootDatum& d = root_datum('A', 1);
    IndexJob job = basic_job(d, 1, 1, 2); // ell = 3, no deformation
    const Character fund = cached_character(d, {1});
    job.curve_insertion = CurveInsertion{fund, fund, 1};
    // alpha = -(1/ell) E^T G E with E = zeta_6 - zeta_6^{-1}:
    // -(1/3)(1/2)(i sqrt 3)^2 = 1/2, exactly, at every order
    const auto s = orbit_summand<Cyclo>(job, TorusPoint{{1}, 3});
    TSeries<Cyclo> expect = TSeries<Cyclo>::one(2).scaled(Rational(1, 2));
    CHECK(s == expect);
    // intersection number zero kills the factor
    job.curve_insertion->intersection = 0;
    CHECK(orbit_summand<Cyclo>(job, TorusPoint{{1}, 3}).is_zero());
    // doubling the intersection number doubles the factor
    job.curve_insertion->intersection = 2;
    CHECK(orbit_summand<Cyclo>(job, TorusPoint{{1}, 3}) == expect.scaled(Rational(2)));
}

TEST_CASE("summand does not depend on the orbit representative") {
    for (const char* label : {"A1", "A2"}) {
        const RootDatum& d = root_datum(label[0], label[1] - '0');
        IndexJob job = basic_job(d, 2, 2, 2);
        job.deformation = cached_character(d, d.highest_root);
        job.boundary = {cached_character(d, Weight(d.rank, 1))};
        const auto pts = torus_points(d, job.ell());
        for (const auto& g : pts.orbit_representatives) {
            const auto ref = orbit_summand<Cyclo>(job, g);
            for (const auto& w : d.weyl) {
                TorusPoint wg{d.apply(w, g.lambda), g.ell};
                CHECK(orbit_summand<Cyclo>(job, wg) == ref);
            }
        }
    }
}

TEST_CASE("float backend tracks the exact one") {
    const RootDatum& d = root_datum('A', 1);
    IndexJob job = basic_job(d, 2, 2, 3);
    job.deformation = cached_character(d, {2});
    job.boundary = {cached_character(d, {2})};
    const auto exact = index_pairing<Cyclo>(job);
    const auto approx = index_pairing<std::complex<double>>(job);
    for (int i = 0; i <= job.order; ++i) {
        const std::complex<double> e = exact.total[i].to_complex();
        CHECK(std::abs(e - approx.total[i]) <= 1e-9 * (1.0 + std::abs(e)));
    }
}

TEST_CASE("worker count does not change the result") {
    const RootDatum& d = root_datum('A', 1);
    IndexJob job = basic_job(d, 2, 6, 2);
    job.deformation = cached_character(d, {2});
    const auto a = index_pairing<Cyclo>(job, 1);
    const auto b = index_pairing<Cyclo>(job, 4);
    CHECK(a.total == b.total);
    REQUIRE(a.summands.size() == b.summands.size());
    for (std::size_t i = 0; i < a.summands.size(); ++i)
        CHECK(a.summands[i] == b.summands[i]);
}
