#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "flatk/errors.hpp"

namespace flatk {

// Arbitrary-precision rational number, kept in lowest terms with a positive
// denominator at all times.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}

    Rational(long num, long den) {
        if (den == 0)
            throw ComputeError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw ComputeError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p" or "p/q" in base 10.
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw SpecError("malformed rational literal: " + s);
        if (q.get_den() == 0)
            throw SpecError("rational literal with zero denominator: " + s);
        q.canonicalize();
        return Rational(std::move(q));
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    long to_long() const {
        if (!is_integer())
            throw ComputeError("rational is not an integer: " + str());
        if (!q_.get_num().fits_slong_p())
            throw ComputeError("integer out of machine range: " + str());
        return q_.get_num().get_si();
    }

    double to_double() const { return q_.get_d(); }

    std::string str() const {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw ComputeError("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    Rational inverse() const {
        if (is_zero())
            throw ComputeError("inverse of zero rational");
        return Rational(mpq_class(1) / q_);
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace flatk
