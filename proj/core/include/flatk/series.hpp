#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "flatk/cyclo.hpp"
#include "flatk/errors.hpp"
#include "flatk/rational.hpp"

namespace flatk {

// Scalar backend hooks. The exact backend runs over cyclotomic numbers, the
// shadow backend over complex doubles; both see the same series code.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Cyclo> {
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(Rational(1)); }
    static Cyclo from_rational(const Rational& r) { return Cyclo(r); }
    static Cyclo root_of_unity(long num, long den) { return Cyclo::root_of_unity(num, den); }
    static bool is_zero(const Cyclo& x) { return x.is_zero(); }
    static Cyclo inverse(const Cyclo& x) { return x.inverse(); }
};

template <>
struct ScalarOps<std::complex<double>> {
    using C = std::complex<double>;
    static C zero() { return {0.0, 0.0}; }
    static C one() { return {1.0, 0.0}; }
    static C from_rational(const Rational& r) { return {r.to_double(), 0.0}; }
    static C root_of_unity(long num, long den) {
        double ang = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
        return {std::cos(ang), std::sin(ang)};
    }
    static bool is_zero(const C& x) { return x == C{0.0, 0.0}; }
    static C inverse(const C& x) {
        if (x == C{0.0, 0.0})
            throw ComputeError("inverse of zero");
        return C{1.0, 0.0} / x;
    }
};

// Power series in the deformation parameter t, truncated at a fixed order:
// coefficients c[0..order] represent sum c[k] t^k + O(t^{order+1}).
template <class S>
class TSeries {
public:
    TSeries() : c_(1, ScalarOps<S>::zero()) {}
    explicit TSeries(int order) : c_(order + 1, ScalarOps<S>::zero()) {
        if (order < 0)
            throw SpecError("series order must be non-negative");
    }

    static TSeries constant(int order, S value) {
        TSeries r(order);
        r.c_[0] = std::move(value);
        return r;
    }

    static TSeries one(int order) { return constant(order, ScalarOps<S>::one()); }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const S& operator[](int k) const { return c_[k]; }
    S& operator[](int k) { return c_[k]; }
    const std::vector<S>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!ScalarOps<S>::is_zero(x))
                return false;
        return true;
    }

    TSeries operator-() const {
        TSeries r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }

    TSeries& operator+=(const TSeries& o) {
        check_order_(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }

    TSeries& operator-=(const TSeries& o) {
        check_order_(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }

    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        a.check_order_(b);
        TSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (ScalarOps<S>::is_zero(a.c_[i]))
                continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (ScalarOps<S>::is_zero(b.c_[j]))
                    continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TSeries& operator*=(const TSeries& o) {
        *this = *this * o;
        return *this;
    }

    TSeries scaled(const S& v) const {
        TSeries r = *this;
        for (auto& x : r.c_)
            x = x * v;
        return r;
    }

    TSeries scaled(const Rational& v) const { return scaled(ScalarOps<S>::from_rational(v)); }

    // Multiplication by t^k, dropping overflowed orders.
    TSeries shifted(int k) const {
        TSeries r(order());
        for (int i = 0; i + k <= order(); ++i)
            r.c_[i + k] = c_[i];
        return r;
    }

    // Multiplicative inverse; the constant term must be invertible.
    TSeries inverse() const {
        if (ScalarOps<S>::is_zero(c_[0]))
            throw ComputeError("series inverse needs an invertible constant term");
        S c0inv = ScalarOps<S>::inverse(c_[0]);
        TSeries r(order());
        r.c_[0] = c0inv;
        for (int k = 1; k <= order(); ++k) {
            S acc = ScalarOps<S>::zero();
            for (int j = 1; j <= k; ++j)
                acc += c_[j] * r.c_[k - j];
            r.c_[k] = -(c0inv * acc);
        }
        return r;
    }

    // Integer power; negative exponents go through the inverse.
    TSeries pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        TSeries r = one(order());
        TSeries base = *this;
        while (e > 0) {
            if (e & 1)
                r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        if (a.order() != b.order())
            return false;
        for (int i = 0; i <= a.order(); ++i)
            if (!(a.c_[i] == b.c_[i]))
                return false;
        return true;
    }

private:
    std::vector<S> c_;

    void check_order_(const TSeries& o) const {
        if (o.order() != order())
            throw ComputeError("series order mismatch");
    }
};

// exp of a series with zero constant term.
template <class S>
TSeries<S> series_exp(const TSeries<S>& s) {
    if (!ScalarOps<S>::is_zero(s[0]))
        throw NonzeroConstantTerm("series exp needs a zero constant term");
    TSeries<S> r = TSeries<S>::one(s.order());
    TSeries<S> term = TSeries<S>::one(s.order());
    Rational fact(1);
    for (int m = 1; m <= s.order(); ++m) {
        term *= s;
        fact *= Rational(m);
        r += term.scaled(ScalarOps<S>::from_rational(fact.inverse()));
    }
    return r;
}

// log of a series with constant term one.
template <class S>
TSeries<S> series_log(const TSeries<S>& s) {
    TSeries<S> u = s - TSeries<S>::one(s.order());
    if (!ScalarOps<S>::is_zero(u[0]))
        throw NonzeroConstantTerm("series log needs constant term one");
    TSeries<S> r(s.order());
    TSeries<S> term = TSeries<S>::one(s.order());
    for (int m = 1; m <= s.order(); ++m) {
        term *= u;
        Rational c(1, m);
        if (m % 2 == 0)
            c = -c;
        r += term.scaled(ScalarOps<S>::from_rational(c));
    }
    return r;
}

// Determinant of a square matrix of series by Laplace expansion. Division
// free, so no invertibility precondition on the constant term.
template <class S>
TSeries<S> series_det(const std::vector<std::vector<TSeries<S>>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        throw ComputeError("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n)
            throw ComputeError("determinant of non-square matrix");
    if (n == 1)
        return m[0][0];
    const int ord = m[0][0].order();
    TSeries<S> acc(ord);
    std::vector<std::vector<TSeries<S>>> minor(n - 1, std::vector<TSeries<S>>(n - 1, TSeries<S>(ord)));
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k].is_zero())
            continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                minor[i - 1][cj++] = m[i][j];
            }
        }
        TSeries<S> term = m[0][k] * series_det(minor);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace flatk
