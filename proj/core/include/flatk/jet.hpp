#pragma once

#include <vector>

#include "flatk/character.hpp"
#include "flatk/root_datum.hpp"
#include "flatk/series.hpp"
#include "flatk/twist.hpp"

namespace flatk {

// Formal deformation g_t of a torus point: character values factor as
// e^mu(g_t) = e^mu(g) * exp(sum_p mu_p tau_p) with tau_p series of zero
// constant term. Multiplicativity e^{mu+nu} = e^mu e^nu holds by construction.
template <class S>
struct Jet {
    const RootDatum* datum = nullptr;
    TorusPoint base;
    int order = 0;
    std::vector<TSeries<S>> tau;

    S base_char(const Weight& mu) const {
        Rational e = datum->pairing(base.lambda, mu) / Rational(base.ell);
        long num = 0, den = 1;
        if (!e.is_zero()) {
            num = e.num().get_si();
            den = e.den().get_si();
        }
        return ScalarOps<S>::root_of_unity(num, den);
    }

    // exp(sum_p mu_p tau_p), the deformation part of e^mu(g_t).
    TSeries<S> deformation(const Weight& mu) const {
        TSeries<S> expo(order);
        bool any = false;
        for (int p = 0; p < datum->rank; ++p) {
            if (mu[p] == 0)
                continue;
            expo += tau[p].scaled(Rational(mu[p]));
            any = true;
        }
        if (!any)
            return TSeries<S>::one(order);
        return series_exp(expo);
    }

    TSeries<S> char_value(const Weight& mu) const {
        return deformation(mu).scaled(base_char(mu));
    }
};

// Evaluate a t-polynomial coefficient into the series scalar domain.
template <class S>
TSeries<S> tpoly_series(const TPoly& p, int order) {
    TSeries<S> r(order);
    for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(order); ++i)
        r[static_cast<int>(i)] = ScalarOps<S>::from_rational(p[i]);
    return r;
}

// Evaluate sparse derivative data sum_nu c_nu(t) u^nu at the jet.
template <class S>
TSeries<S> eval_twist_map(const std::map<Weight, TPoly>& data, const Jet<S>& jet) {
    TSeries<S> acc(jet.order);
    for (const auto& [w, poly] : data)
        acc += tpoly_series<S>(poly, jet.order) * jet.char_value(w);
    return acc;
}

// Solve the fixed-point equation e^mu(g_t) = e^mu(g) exp(-(t/ell) D_mu(g_t))
// for all mu simultaneously, where D_mu(u) = sum_lambda n_lambda <mu, lambda>
// u^lambda is assembled from the plain derivative data via the Gram matrix.
// One fixed-point sweep per t-order.
template <class S>
Jet<S> solve_jet(const RootDatum& d, const TorusPoint& g, long ell, const TwistData& twist, int order) {
    if (ell < 1)
        throw NonIntegralLevel("jet needs ell >= 1");
    if (order < 0)
        throw SpecError("jet order must be non-negative");
    Jet<S> jet;
    jet.datum = &d;
    jet.base = g;
    jet.base.ell = ell;
    jet.order = order;
    jet.tau.assign(d.rank, TSeries<S>(order));

    // Pairing-direction data: D_{omega_p} = sum_q G_{pq} * grad_q.
    // Merge into one sparse map per p so each sweep is a single evaluation.
    std::vector<std::map<Weight, TPoly>> paired(d.rank);
    for (int p = 0; p < d.rank; ++p) {
        for (int q = 0; q < d.rank; ++q) {
            if (d.gram[p][q].is_zero())
                continue;
            for (const auto& [w, poly] : twist.grad[q]) {
                TPoly scaled(poly.size());
                for (std::size_t i = 0; i < poly.size(); ++i)
                    scaled[i] = poly[i] * d.gram[p][q];
                auto& dst = paired[p][w];
                if (dst.size() < scaled.size())
                    dst.resize(scaled.size(), Rational(0));
                for (std::size_t i = 0; i < scaled.size(); ++i)
                    dst[i] += scaled[i];
            }
        }
    }

    const Rational step(-1, ell);
    for (int sweep = 1; sweep <= order; ++sweep) {
        std::vector<TSeries<S>> next(d.rank, TSeries<S>(order));
        for (int p = 0; p < d.rank; ++p) {
            TSeries<S> dval = eval_twist_map(paired[p], jet);
            next[p] = dval.shifted(1).scaled(step);
        }
        jet.tau = std::move(next);
    }
    return jet;
}

// Character evaluation along the jet.
template <class S>
TSeries<S> char_eval_jet(const Character& c, const Jet<S>& jet) {
    TSeries<S> acc(jet.order);
    for (const auto& [w, m] : c.support())
        acc += jet.char_value(w).scaled(Rational(m));
    return acc;
}

// Antisymmetrized Weyl numerator along the jet.
template <class S>
TSeries<S> weyl_denominator_jet(const RootDatum& d, const Jet<S>& jet) {
    TSeries<S> acc(jet.order);
    for (const auto& w : d.weyl) {
        TSeries<S> term = jet.char_value(d.apply(w, d.rho));
        if (w.sign < 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

} // namespace flatk
