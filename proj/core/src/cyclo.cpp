#include "flatk/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "flatk/errors.hpp"

namespace flatk {

namespace {

// Exact division of integer polynomials, quotient returned; remainder must be
// zero (cyclotomic factor tower guarantees it).
std::vector<mpz_class> exact_poly_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    std::vector<mpz_class> quot(dn - dd + 1);
    for (long i = dn; i >= dd; --i) {
        if (num[i] == 0)
            continue;
        mpz_class f = num[i] / den[dd]; // den is monic in our usage
        quot[i - dd] = f;
        for (long j = 0; j <= dd; ++j)
            num[i - dd + j] -= f * den[j];
    }
    return quot;
}

std::map<long, std::vector<mpz_class>>& phi_cache() {
    static std::map<long, std::vector<mpz_class>> cache;
    return cache;
}

std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

const std::vector<mpz_class>& cyclotomic_locked(long n) {
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<mpz_class> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        poly = exact_poly_div(std::move(poly), cyclotomic_locked(d));
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    if (n < 1)
        throw SpecError("cyclotomic polynomial needs a positive index");
    std::lock_guard<std::mutex> lock(phi_mutex());
    return cyclotomic_locked(n);
}

long cyclo_phi(long n) {
    return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
}

Cyclo::Cyclo(long n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
    if (n_ < 1)
        throw SpecError("cyclotomic conductor must be positive");
    c_.resize(n_);
    reduce_();
}

void Cyclo::reduce_() {
    const auto& phi = cyclotomic_polynomial(n_);
    const long deg = static_cast<long>(phi.size()) - 1;
    for (long i = n_ - 1; i >= deg; --i) {
        if (c_[i].is_zero())
            continue;
        Rational f = c_[i];
        for (long j = 0; j <= deg; ++j)
            c_[i - deg + j] -= f * Rational(phi[j], 1);
    }
}

Cyclo Cyclo::root_of_unity(long num, long n) {
    if (n < 1)
        throw SpecError("root of unity needs a positive order");
    long e = ((num % n) + n) % n;
    long g = std::gcd(e, n);
    long ord = n / g;
    e = (g == 0) ? 0 : e / g;
    std::vector<Rational> coeffs(ord);
    coeffs[e] = Rational(1);
    return Cyclo(ord, std::move(coeffs));
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return false;
    return true;
}

Rational Cyclo::rationalize() const {
    if (!is_rational())
        throw NotRational("cyclotomic value is not rational: " + str());
    return c_[0];
}

std::complex<double> Cyclo::to_complex() const {
    double re = 0.0, im = 0.0;
    for (long i = 0; i < n_; ++i) {
        if (c_[i].is_zero())
            continue;
        double v = c_[i].to_double();
        double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_);
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    return {re, im};
}

Cyclo Cyclo::embedded(long m) const {
    if (m % n_ != 0)
        throw ComputeError("embedding target is not a conductor multiple");
    if (m == n_)
        return *this;
    const long stride = m / n_;
    std::vector<Rational> coeffs(m);
    for (long i = 0; i < n_; ++i)
        if (!c_[i].is_zero())
            coeffs[i * stride] = c_[i];
    return Cyclo(m, std::move(coeffs));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (n_ == o.n_) {
        for (long i = 0; i < n_; ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    long m = std::lcm(n_, o.n_);
    *this = embedded(m);
    Cyclo rhs = o.embedded(m);
    for (long i = 0; i < m; ++i)
        c_[i] += rhs.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    return *this += -o;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    // Rational fast paths keep engine sums cheap.
    if (a.n_ == 1) {
        if (a.c_[0].is_zero())
            return Cyclo();
        Cyclo r = b;
        for (auto& x : r.c_)
            x *= a.c_[0];
        return r;
    }
    if (b.n_ == 1)
        return b * a;
    long m = std::lcm(a.n_, b.n_);
    Cyclo x = a.embedded(m);
    Cyclo y = b.embedded(m);
    std::vector<Rational> conv(m);
    for (long i = 0; i < m; ++i) {
        if (x.c_[i].is_zero())
            continue;
        for (long j = 0; j < m; ++j) {
            if (y.c_[j].is_zero())
                continue;
            long k = i + j;
            if (k >= m)
                k -= m;
            conv[k] += x.c_[i] * y.c_[j];
        }
    }
    return Cyclo(m, std::move(conv));
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    *this = *this * o;
    return *this;
}

namespace {

using QPoly = std::vector<Rational>;

long qdeg(const QPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero())
            return i;
    return -1;
}

QPoly qrem(QPoly a, const QPoly& b) {
    long db = qdeg(b);
    for (long i = qdeg(a); i >= db && i >= 0; i = qdeg(a)) {
        Rational f = a[i] / b[db];
        for (long j = 0; j <= db; ++j)
            a[i - db + j] -= f * b[j];
    }
    return a;
}

QPoly qquot(QPoly a, const QPoly& b) {
    long db = qdeg(b);
    long da = qdeg(a);
    if (da < db)
        return {};
    QPoly q(da - db + 1);
    for (long i = da; i >= db && i >= 0; i = qdeg(a)) {
        Rational f = a[i] / b[db];
        q[i - db] = f;
        for (long j = 0; j <= db; ++j)
            a[i - db + j] -= f * b[j];
    }
    return q;
}

QPoly qsub_mul(QPoly a, const QPoly& q, const QPoly& b) {
    // a - q*b
    if (qdeg(q) < 0 || qdeg(b) < 0)
        return a;
    a.resize(std::max<std::size_t>(a.size(), q.size() + b.size()), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i + j] -= q[i] * b[j];
    }
    return a;
}

} // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero())
        throw ComputeError("inverse of zero cyclotomic value");
    if (is_rational())
        return Cyclo(c_[0].inverse());
    // Extended Euclid in Q[x] against Phi_n: s*self + t*Phi = gcd = const.
    const auto& phi_z = cyclotomic_polynomial(n_);
    QPoly r0(phi_z.size());
    for (std::size_t i = 0; i < phi_z.size(); ++i)
        r0[i] = Rational(phi_z[i], 1);
    QPoly r1 = c_;
    QPoly s0{Rational(0)}, s1{Rational(1)};
    while (true) {
        long d1 = qdeg(r1);
        if (d1 <= 0)
            break;
        QPoly q = qquot(r0, r1);
        QPoly r2 = qrem(r0, r1);
        QPoly s2 = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (qdeg(r1) != 0)
        throw ComputeError("cyclotomic inverse failed: zero divisor representative");
    Rational lead = r1[0];
    std::vector<Rational> inv(n_);
    for (std::size_t i = 0; i < s1.size() && i < static_cast<std::size_t>(n_); ++i)
        inv[i] = s1[i] / lead;
    return Cyclo(n_, std::move(inv));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_)
        return a.c_ == b.c_;
    long m = std::lcm(a.n_, b.n_);
    return a.embedded(m).c_ == b.embedded(m).c_;
}

std::string Cyclo::str() const {
    if (is_rational())
        return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < n_; ++i) {
        if (c_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << c_[i].str();
        if (i > 0)
            os << "*z" << n_ << "^" << i;
    }
    return os.str();
}

} // namespace flatk
