#include <complex>

#include "doctest.h"

#include "flatk/jet.hpp"
#include "flatk/series.hpp"
#include "flatk/twist.hpp"

using namespace flatk;

namespace {

TSeries<Cyclo> from_rationals(std::vector<Rational> v) {
    TSeries<Cyclo> s(static_cast<int>(v.size()) - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        s[static_cast<int>(i)] = Cyclo(v[i]);
    return s;
}

} // namespace

TEST_CASE("series ring basics") {
    const auto a = from_rationals({Rational(1), Rational(2), Rational(3)});
    const auto b = from_rationals({Rational(0), Rational(1), Rational(0)});
    CHECK((a * b) == from_rationals({Rational(0), Rational(1), Rational(2)}));
    CHECK(a.shifted(1) == from_rationals({Rational(0), Rational(1), Rational(2)}));
    CHECK(a.scaled(Rational(1, 2)) ==
          from_rationals({Rational(1, 2), Rational(1), Rational(3, 2)}));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a * TSeries<Cyclo>(1), ComputeError);
}

TEST_CASE("series inverse and power") {
    const auto a = from_rationals({Rational(1), Rational(1), Rational(0), Rational(0)});
    // (1 + t)^{-1} = 1 - t + t^2 - t^3
    CHECK(a.inverse() ==
          from_rationals({Rational(1), Rational(-1), Rational(1), Rational(-1)}));
    CHECK(a * a.inverse() == TSeries<Cyclo>::one(3));
    CHECK(a.pow(2) == from_rationals({Rational(1), Rational(2), Rational(1), Rational(0)}));
    CHECK(a.pow(-1) == a.inverse());
    CHECK(a.pow(0) == TSeries<Cyclo>::one(3));
    CHECK_THROWS_AS(TSeries<Cyclo>(2).inverse(), ComputeError);
}

TEST_CASE("series exp and log") {
    const auto t = from_rationals({Rational(0), Rational(1), Rational(0), Rational(0)});
    // exp(t) = 1 + t + t^2/2 + t^3/6
    CHECK(series_exp(t) ==
          from_rationals({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
    CHECK(series_log(series_exp(t)) == t);
    const auto u = from_rationals({Rational(0), Rational(-2), Rational(1, 3), Rational(5)});
    CHECK(series_log(series_exp(u)) == u);
    CHECK(series_exp(u + t) == series_exp(u) * series_exp(t));
    CHECK_THROWS_AS(series_exp(TSeries<Cyclo>::one(2)), NonzeroConstantTerm);
    CHECK_THROWS_AS(series_log(t), NonzeroConstantTerm);
}

TEST_CASE("series determinant") {
    // det [[1, t],[t, 1]] = 1 - t^2
    const auto one = TSeries<Cyclo>::one(3);
    const auto t = from_rationals({Rational(0), Rational(1), Rational(0), Rational(0)});
    std::vector<std::vector<TSeries<Cyclo>>> m = {{one, t}, {t, one}};
    CHECK(series_det(m) ==
          from_rationals({Rational(1), Rational(0), Rational(-1), Rational(0)}));
    // 3x3 with a nilpotent block stays exact
    std::vector<std::vector<TSeries<Cyclo>>> m3 = {
        {one, t, t}, {TSeries<Cyclo>(3), one, t}, {t, TSeries<Cyclo>(3), one}};
    const auto det = series_det(m3);
    CHECK(det[0] == Cyclo(Rational(1)));
    // expansion: 1 - t*0 ... direct check via cofactor by hand: 1 + t^3 - t^2
    CHECK(det == from_rationals({Rational(1), Rational(0), Rational(-1), Rational(1)}));
}

TEST_CASE("float backend mirrors exact series") {
    using C = std::complex<double>;
    TSeries<C> s(3);
    s[1] = C{1.0, 0.0};
    const TSeries<C> e = series_exp(s);
    CHECK(std::abs(e[2] - C{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(e.inverse()[1] - C{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("A1 fundamental jet matches the closed first-order form") {
    const RootDatum& d = root_datum('A', 1);
    const Character fund = cached_character(d, {1});
    const TwistData twist = derivative_data(d, fund);
    const long ell = 3;
    const TorusPoint g{{1}, ell};
    const int order = 3;
    const Jet<Cyclo> jet = solve_jet<Cyclo>(d, g, ell, twist, order);

    // e^omega(g) = zeta_6
    const Cyclo z = Cyclo::root_of_unity(1, 6);
    const Cyclo zinv = Cyclo::root_of_unity(-1, 6);
    const TSeries<Cyclo> val = jet.char_value({1});
    CHECK(val[0] == z);
    // t^1 coefficient: -z (z - z^{-1}) / (2 ell)
    CHECK(val[1] == z * (z - zinv) * Cyclo(Rational(-1, 2 * ell)));

    // defining equation: e^mu(g_t) * exp((t/ell) D_mu(g_t)) = e^mu(g)
    for (long mu = -2; mu <= 2; ++mu) {
        if (mu == 0)
            continue;
        // D_mu(u) = <mu w, w> u^w + <mu w, -w> u^{-w} = (mu/2)(u^w - u^{-w})
        TSeries<Cyclo> dmu =
            (jet.char_value({1}) - jet.char_value({-1})).scaled(Rational(mu, 2));
        TSeries<Cyclo> residual =
            jet.char_value({mu}) * series_exp(dmu.shifted(1).scaled(Rational(1, ell)));
        TSeries<Cyclo> target = TSeries<Cyclo>::constant(order, jet.base_char({mu}));
        CHECK(residual == target);
    }
}

TEST_CASE("jet respects weight additivity") {
    const RootDatum& d = root_datum('A', 2);
    const Character fund = cached_character(d, {1, 0});
    const TwistData twist = derivative_data(d, fund);
    const Jet<Cyclo> jet = solve_jet<Cyclo>(d, TorusPoint{{1, 2}, 4}, 4, twist, 2);
    CHECK(jet.char_value({1, 0}) * jet.char_value({0, 1}) == jet.char_value({1, 1}));
    CHECK(jet.char_value({2, -1}) * jet.char_value({-2, 1}) == TSeries<Cyclo>::one(2));
}

TEST_CASE("trivial twist freezes the jet") {
    const RootDatum& d = root_datum('A', 1);
    const TwistData twist = derivative_data(d, trivial_character(1));
    const Jet<Cyclo> jet = solve_jet<Cyclo>(d, TorusPoint{{1}, 2}, 2, twist, 3);
    const TSeries<Cyclo> val = jet.char_value({1});
    CHECK(val == TSeries<Cyclo>::constant(3, jet.base_char({1})));
    CHECK_THROWS_AS(solve_jet<Cyclo>(d, TorusPoint{{1}, 2}, 0, twist, 1), NonIntegralLevel);
}
