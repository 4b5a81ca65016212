#include "flatk/oracle.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstddef>

#include "flatk/errors.hpp"

namespace flatk {

namespace {

void gp_add(GroupPoly& dst, const Weight& w, const Rational& v) {
    if (v.is_zero())
        return;
    auto it = dst.find(w);
    if (it == dst.end()) {
        dst.emplace(w, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero())
        dst.erase(it);
}

Weight weight_add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

long rational_floor(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    if (!q.fits_slong_p())
        throw ComputeError("lattice window bound out of range");
    return q.get_si();
}

long rational_ceil(const Rational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    if (!q.fits_slong_p())
        throw ComputeError("lattice window bound out of range");
    return q.get_si();
}

using RMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse; the coroot basis matrix is always invertible.
RMatrix rmatrix_inverse(RMatrix m) {
    const std::size_t n = m.size();
    RMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw ComputeError("singular lattice basis matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational scale = m[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero())
                continue;
            const Rational f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] = m[row][j] - f * m[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

// Truncated t-series with group-ring coefficients; index = t-degree.
using TermSeries = std::vector<GroupPoly>;

// e^{ell eta} exp(t D_eta) truncated at the given order.
TermSeries lattice_term(const RootDatum& d, const Character& v, long ell, const Weight& eta,
                        int order) {
    Weight shift(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i)
        shift[i] = ell * eta[i];
    const GroupPoly grad = pairing_gradient(d, v, eta);
    TermSeries out(static_cast<std::size_t>(order) + 1);
    out[0][shift] = Rational(1);
    for (int j = 1; j <= order; ++j) {
        GroupPoly next = gp_mul(out[static_cast<std::size_t>(j) - 1], grad);
        for (auto& [w, c] : next)
            c = c / Rational(j);
        out[static_cast<std::size_t>(j)] = std::move(next);
    }
    return out;
}

TermSeries term_mul(const TermSeries& a, const TermSeries& b) {
    TermSeries out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            if (a[i].empty() || b[j].empty())
                continue;
            GroupPoly prod = gp_mul(a[i], b[j]);
            for (const auto& [w, c] : prod)
                gp_add(out[i + j], w, c);
        }
    return out;
}

std::vector<std::vector<long>> mat_mul(const std::vector<std::vector<long>>& a,
                                       const std::vector<std::vector<long>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<long>> out(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace

GroupPoly gp_from_character(const Character& c) {
    GroupPoly out;
    for (const auto& [w, m] : c.support())
        out[w] = Rational(m);
    return out;
}

GroupPoly gp_mul(const GroupPoly& a, const GroupPoly& b) {
    GroupPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            gp_add(out, weight_add(wa, wb), ca * cb);
    return out;
}

GroupPoly gp_shift(const GroupPoly& a, const Weight& mu) {
    GroupPoly out;
    for (const auto& [w, c] : a)
        out[weight_add(w, mu)] = c;
    return out;
}

GroupPoly weyl_numerator_poly(const RootDatum& d) {
    GroupPoly out;
    for (const WeylElement& w : d.weyl)
        gp_add(out, d.apply(w, d.rho), Rational(w.sign));
    return out;
}

GroupPoly pairing_gradient(const RootDatum& d, const Character& v, const Weight& eta) {
    GroupPoly out;
    for (const auto& [lambda, mult] : v.support()) {
        const long p = d.pairing(lambda, eta).to_long();
        gp_add(out, lambda, Rational(mult * p));
    }
    return out;
}

std::vector<Rational> disk_pairing(const RootDatum& d, const Character& v, long level,
                                   const Character& f, int order) {
    if (order < 0)
        throw SpecError("order must be nonnegative");
    const long ell = level + d.dual_coxeter;
    if (ell < 1)
        throw NonIntegralLevel("shifted level must be positive");
    std::vector<Rational> coeff(static_cast<std::size_t>(order) + 1, Rational(0));

    const GroupPoly j = weyl_numerator_poly(d);
    const GroupPoly f0 = gp_mul(gp_mul(j, j), gp_from_character(f));
    if (f0.empty())
        return coeff;

    const int r = d.rank;
    // Coordinate window for the weights that can pair to a constant term:
    // supp(f0 * D^j) stays inside supp(f0) + order * hull(supp V union {0}).
    std::vector<long> lo(r), hi(r);
    {
        bool first = true;
        for (const auto& [w, c] : f0) {
            (void)c;
            for (int i = 0; i < r; ++i) {
                lo[static_cast<std::size_t>(i)] =
                    first ? w[static_cast<std::size_t>(i)]
                          : std::min(lo[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
                hi[static_cast<std::size_t>(i)] =
                    first ? w[static_cast<std::size_t>(i)]
                          : std::max(hi[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
            }
            first = false;
        }
        std::vector<long> vlo(r, 0), vhi(r, 0);
        for (const auto& [w, m] : v.support()) {
            (void)m;
            for (int i = 0; i < r; ++i) {
                vlo[static_cast<std::size_t>(i)] =
                    std::min(vlo[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
                vhi[static_cast<std::size_t>(i)] =
                    std::max(vhi[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
            }
        }
        for (int i = 0; i < r; ++i) {
            lo[static_cast<std::size_t>(i)] += order * vlo[static_cast<std::size_t>(i)];
            hi[static_cast<std::size_t>(i)] += order * vhi[static_cast<std::size_t>(i)];
        }
    }

    // ell * eta must land in [-hi, -lo]; pull the corner box back through the
    // coroot basis to bound the integer coordinates of eta.
    RMatrix minv;
    {
        RMatrix m(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r)));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    Rational(d.coroot_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        minv = rmatrix_inverse(std::move(m));
    }
    std::vector<long> clo(r, 0), chi(r, 0);
    bool firstc = true;
    for (long mask = 0; mask < (1L << r); ++mask) {
        std::vector<Rational> corner(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            const long b = ((mask >> i) & 1) ? -lo[static_cast<std::size_t>(i)]
                                             : -hi[static_cast<std::size_t>(i)];
            corner[static_cast<std::size_t>(i)] = Rational(b, ell);
        }
        for (int k = 0; k < r; ++k) {
            Rational ck(0);
            for (int i = 0; i < r; ++i)
                ck += corner[static_cast<std::size_t>(i)] *
                      minv[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            const long fl = rational_floor(ck);
            const long ce = rational_ceil(ck);
            if (firstc) {
                clo[static_cast<std::size_t>(k)] = fl;
                chi[static_cast<std::size_t>(k)] = ce;
            } else {
                clo[static_cast<std::size_t>(k)] = std::min(clo[static_cast<std::size_t>(k)], fl);
                chi[static_cast<std::size_t>(k)] = std::max(chi[static_cast<std::size_t>(k)], ce);
            }
        }
        firstc = false;
    }

    std::vector<Rational> factorial(static_cast<std::size_t>(order) + 1, Rational(1));
    for (int jj = 1; jj <= order; ++jj)
        factorial[static_cast<std::size_t>(jj)] =
            factorial[static_cast<std::size_t>(jj) - 1] * Rational(jj);

    std::vector<long> c(static_cast<std::size_t>(r));
    const auto add_point = [&](const std::vector<long>& cc) {
        Weight eta(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                eta[static_cast<std::size_t>(k)] +=
                    cc[static_cast<std::size_t>(i)] *
                    d.coroot_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        Weight target(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            target[static_cast<std::size_t>(i)] = -ell * eta[static_cast<std::size_t>(i)];
        GroupPoly p = f0;
        auto it = p.find(target);
        if (it != p.end())
            coeff[0] += it->second;
        if (order == 0)
            return;
        const GroupPoly grad = pairing_gradient(d, v, eta);
        if (grad.empty())
            return;
        for (int jj = 1; jj <= order; ++jj) {
            p = gp_mul(p, grad);
            if (p.empty())
                return;
            it = p.find(target);
            if (it != p.end())
                coeff[static_cast<std::size_t>(jj)] +=
                    it->second / factorial[static_cast<std::size_t>(jj)];
        }
    };
    // Enumerate the integer box.
    std::size_t total = 1;
    std::vector<long> span(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        span[static_cast<std::size_t>(i)] =
            chi[static_cast<std::size_t>(i)] - clo[static_cast<std::size_t>(i)] + 1;
        total *= static_cast<std::size_t>(span[static_cast<std::size_t>(i)]);
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int i = 0; i < r; ++i) {
            c[static_cast<std::size_t>(i)] =
                clo[static_cast<std::size_t>(i)] +
                static_cast<long>(rem % static_cast<std::size_t>(span[static_cast<std::size_t>(i)]));
            rem /= static_cast<std::size_t>(span[static_cast<std::size_t>(i)]);
        }
        add_point(c);
    }

    const Rational norm(d.positive_roots.size() % 2 == 0 ? 1 : -1,
                        static_cast<long>(d.weyl.size()));
    for (auto& x : coeff)
        x = x * norm;
    return coeff;
}

bool affine_shift_check(const RootDatum& d, const Character& v, long level, const Weight& eta,
                        int order) {
    const long ell = level + d.dual_coxeter;
    if (ell < 1)
        throw NonIntegralLevel("shifted level must be positive");
    const int r = d.rank;
    std::vector<Weight> test_points;
    test_points.emplace_back(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        Weight plus = d.coroot_basis[static_cast<std::size_t>(i)];
        Weight minus(plus.size());
        for (std::size_t k = 0; k < plus.size(); ++k)
            minus[k] = -plus[k];
        test_points.push_back(plus);
        test_points.push_back(minus);
    }
    test_points.push_back(eta);

    const TermSeries shift_factor = lattice_term(d, v, ell, eta, order);
    for (const Weight& base : test_points) {
        const TermSeries lhs = lattice_term(d, v, ell, weight_add(base, eta), order);
        const TermSeries rhs = term_mul(lattice_term(d, v, ell, base, order), shift_factor);
        if (lhs != rhs)
            return false;
    }
    return true;
}

FusionData fusion_data(long level) {
    if (level < 0)
        throw SpecError("fusion level must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(level) + 1;
    FusionData data;
    data.level = level;
    data.n.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long low = std::labs(static_cast<long>(i) - static_cast<long>(j));
            const long high = std::min(static_cast<long>(i + j),
                                       2 * level - static_cast<long>(i) - static_cast<long>(j));
            for (long l = low; l <= high; l += 2)
                data.n[i][static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = 1;
        }
    data.handle.assign(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto sq = mat_mul(data.n[i], data.n[i]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                data.handle[a][b] += sq[a][b];
    }
    return data;
}

long fusion_verlinde(long level, long genus, const std::vector<long>& labels) {
    if (genus < 0)
        throw SpecError("genus must be nonnegative");
    const FusionData data = fusion_data(level);
    for (long lab : labels)
        if (lab < 0 || lab > level)
            throw LabelOutOfRange("fusion label outside 0..level");
    const std::size_t n = static_cast<std::size_t>(level) + 1;
    std::vector<std::vector<long>> acc(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        acc[i][i] = 1;
    for (long g = 0; g < genus; ++g)
        acc = mat_mul(acc, data.handle);
    for (long lab : labels)
        acc = mat_mul(acc, data.n[static_cast<std::size_t>(lab)]);
    return acc[0][0];
}

}  // namespace flatk
