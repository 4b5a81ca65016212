#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "flatk/rational.hpp"

namespace flatk {

// Element of a cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N).
//
// Representation: conductor N plus a dense coefficient vector of length N over
// the powers 1, zeta, ..., zeta^{N-1}, kept canonical by reduction modulo the
// N-th cyclotomic polynomial (all entries at degree >= phi(N) are zero). Two
// values built along different arithmetic paths compare equal iff they are the
// same field element; values with different conductors are compared inside the
// lcm field.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1) {}
    explicit Cyclo(const Rational& r) : n_(1), c_{r} {}
    Cyclo(long n, std::vector<Rational> coeffs);

    // zeta_n^num. Reduces to the smallest conductor: the result's conductor is
    // the multiplicative order n/gcd(num, n).
    static Cyclo root_of_unity(long num, long n);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;

    // Exact rational value; throws NotRational when the canonical form has
    // support outside the constant coefficient.
    Rational rationalize() const;

    std::complex<double> to_complex() const;

    // Image in Q(zeta_m); m must be a multiple of the conductor.
    Cyclo embedded(long m) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);

    Cyclo inverse() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Human-readable rendering, e.g. "-1/2 + 1/2*z6^1". Not the wire format.
    std::string str() const;

private:
    long n_;
    std::vector<Rational> c_; // length n_, canonical

    void reduce_();

    friend struct CycloTestAccess;
};

// Monic integer cyclotomic polynomial Phi_n, coefficients low to high. Cached;
// thread safe.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

// Euler phi via the cached polynomial degree.
long cyclo_phi(long n);

} // namespace flatk
