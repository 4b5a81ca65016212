#include "flatk/twist.hpp"

#include <algorithm>

#include "flatk/errors.hpp"

namespace flatk {

namespace {

void add_poly(TPoly& dst, const TPoly& src, const Rational& scale) {
    if (dst.size() < src.size())
        dst.resize(src.size(), Rational(0));
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i] += src[i] * scale;
}

void accumulate(TwistData& t, const Character& c, const TPoly& coeff) {
    const int n = t.rank;
    for (const auto& [w, m] : c.support()) {
        for (int p = 0; p < n; ++p) {
            if (w[p] == 0)
                continue;
            add_poly(t.grad[p][w], coeff, Rational(m * w[p]));
            for (int q = 0; q < n; ++q) {
                if (w[q] == 0)
                    continue;
                add_poly(t.hess[p][q][w], coeff, Rational(m * w[p] * w[q]));
            }
        }
    }
}

void prune(TwistData& t) {
    auto prune_map = [](std::map<Weight, TPoly>& m) {
        for (auto it = m.begin(); it != m.end();) {
            bool all_zero = true;
            for (const auto& r : it->second)
                if (!r.is_zero()) {
                    all_zero = false;
                    break;
                }
            it = all_zero ? m.erase(it) : ++it;
        }
    };
    for (auto& g : t.grad)
        prune_map(g);
    for (auto& row : t.hess)
        for (auto& h : row)
            prune_map(h);
}

TwistData empty_twist(int rank, int order) {
    TwistData t;
    t.rank = rank;
    t.order = order;
    t.grad.resize(rank);
    t.hess.assign(rank, std::vector<std::map<Weight, TPoly>>(rank));
    return t;
}

} // namespace

TwistData derivative_data(const RootDatum& d, const Character& c) {
    TwistData t = empty_twist(d.rank, 0);
    accumulate(t, c, TPoly{Rational(1)});
    prune(t);
    return t;
}

TwistData lambda_twist_series(const RootDatum& d, const Character& c, int order) {
    if (order < 0)
        throw SpecError("twist order must be non-negative");
    TwistData t = empty_twist(d.rank, order);
    for (long j = 1; j <= order + 1; ++j) {
        // coefficient (-t)^{j-1} / j^2
        TPoly coeff(order + 1, Rational(0));
        if (j - 1 <= order) {
            Rational v(1, j * j);
            if ((j - 1) % 2 == 1)
                v = -v;
            coeff[j - 1] = v;
        }
        accumulate(t, adams(c, j), coeff);
    }
    prune(t);
    return t;
}

TwistData adjoint_log_twist(const RootDatum& d, int order) {
    if (order < 0)
        throw SpecError("twist order must be non-negative");
    TwistData t = empty_twist(d.rank, order);
    const int n = d.rank;
    for (const auto& alpha : d.positive_roots) {
        // log(1 + t u^{±alpha}) expanded to t^{order+1}, then divided by t.
        // The m-th log term is (-1)^{m-1} t^m u^{m alpha} / m.
        // (1/t)(log(1+t u^alpha) - log(1+t u^{-alpha})) truncated at t^order
        std::map<Weight, TPoly> contrib;
        for (long m = 1; m <= order + 1; ++m) {
            Rational c(1, m);
            if (m % 2 == 0)
                c = -c;
            // after the 1/t shift this lands at t-degree m-1
            if (m - 1 > order)
                break;
            Weight plus(n), minus(n);
            for (int i = 0; i < n; ++i) {
                plus[i] = m * alpha[i];
                minus[i] = -m * alpha[i];
            }
            TPoly tp(order + 1, Rational(0));
            tp[m - 1] = c;
            add_poly(contrib[plus], tp, Rational(1));
            add_poly(contrib[minus], tp, Rational(-1));
        }
        for (const auto& [w, poly] : contrib) {
            for (int p = 0; p < n; ++p) {
                if (alpha[p] == 0)
                    continue;
                add_poly(t.grad[p][w], poly, Rational(alpha[p]));
            }
        }
    }
    // Hessian data by formal differentiation: a u^nu term with coefficient c(t)
    // contributes c(t) * nu_q to H_pq at nu.
    for (int p = 0; p < n; ++p)
        for (const auto& [w, poly] : t.grad[p])
            for (int q = 0; q < n; ++q) {
                if (w[q] == 0)
                    continue;
                add_poly(t.hess[p][q][w], poly, Rational(w[q]));
            }
    prune(t);
    return t;
}

namespace {

bool tpoly_equal(const TPoly& a, const TPoly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Rational x = i < a.size() ? a[i] : Rational(0);
        const Rational y = i < b.size() ? b[i] : Rational(0);
        if (x != y)
            return false;
    }
    return true;
}

bool map_equal(const std::map<Weight, TPoly>& a, const std::map<Weight, TPoly>& b) {
    for (const auto& [w, p] : a) {
        auto it = b.find(w);
        if (!tpoly_equal(p, it == b.end() ? TPoly{} : it->second))
            return false;
    }
    for (const auto& [w, p] : b)
        if (a.find(w) == a.end() && !tpoly_equal(p, TPoly{}))
            return false;
    return true;
}

} // namespace

bool twist_data_equal(const TwistData& a, const TwistData& b) {
    if (a.rank != b.rank)
        return false;
    for (int p = 0; p < a.rank; ++p)
        if (!map_equal(a.grad[p], b.grad[p]))
            return false;
    for (int p = 0; p < a.rank; ++p)
        for (int q = 0; q < a.rank; ++q)
            if (!map_equal(a.hess[p][q], b.hess[p][q]))
                return false;
    return true;
}

} // namespace flatk
