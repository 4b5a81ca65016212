#include "flatk/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "flatk/errors.hpp"

namespace flatk {

Weight WeightVec::to_lattice() const {
    Weight w;
    w.reserve(x.size());
    for (const auto& v : x) {
        if (!v.is_integer())
            throw ComputeError("weight vector is not a lattice point");
        w.push_back(v.to_long());
    }
    return w;
}

Rational RootDatum::pairing(const Weight& a, const Weight& b) const {
    Rational acc(0);
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < rank; ++j) {
            if (b[j] == 0)
                continue;
            acc += gram[i][j] * Rational(a[i] * b[j]);
        }
    }
    return acc;
}

Rational RootDatum::pairing(const WeightVec& a, const WeightVec& b) const {
    Rational acc(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            acc += gram[i][j] * a.x[i] * b.x[j];
    return acc;
}

Weight RootDatum::apply(const WeylElement& w, const Weight& v) const {
    Weight r(rank, 0);
    for (int i = 0; i < rank; ++i) {
        long acc = 0;
        for (int j = 0; j < rank; ++j)
            acc += w.mat[i * rank + j] * v[j];
        r[i] = acc;
    }
    return r;
}

Weight RootDatum::dominant_representative(const Weight& v) const {
    Weight cur = v;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank; ++i) {
            if (cur[i] < 0) {
                // simple reflection: cur -= cur[i] * alpha_i
                long ci = cur[i];
                for (int j = 0; j < rank; ++j)
                    cur[j] -= ci * cartan[i][j];
                moved = true;
            }
        }
    }
    return cur;
}

Weight RootDatum::dual_highest_weight(const Weight& lambda) const {
    Weight w = apply(longest_element(), lambda);
    for (auto& c : w)
        c = -c;
    return w;
}

Cyclo RootDatum::torus_character(const TorusPoint& g, const Weight& mu) const {
    Rational e = pairing(g.lambda, mu) / Rational(g.ell);
    // zeta^(num/den) with den > 0 after canonicalization
    long num = 0, den = 1;
    if (!e.is_zero()) {
        mpz_class n = e.num(), dd = e.den();
        if (!n.fits_slong_p() || !dd.fits_slong_p())
            throw ComputeError("torus character exponent out of range");
        num = n.get_si();
        den = dd.get_si();
    }
    return Cyclo::root_of_unity(num, den);
}

bool RootDatum::is_regular(const TorusPoint& g) const {
    for (const auto& alpha : positive_roots) {
        Rational v = pairing(g.lambda, alpha) / Rational(g.ell);
        if (v.is_integer())
            return false;
    }
    return true;
}

namespace {

std::vector<std::vector<Rational>> invert_rational_matrix(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0)
            throw ComputeError("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational f = m[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            m[col][j] *= f;
            inv[col][j] *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero())
                continue;
            Rational g = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= g * m[col][j];
                inv[r][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

struct DatumTables {
    std::vector<std::vector<long>> cartan;
    std::vector<Rational> d;
    long dual_coxeter;
};

DatumTables datum_tables(char type, int rank) {
    DatumTables t;
    if (type == 'A' && rank >= 1 && rank <= 4) {
        t.cartan.assign(rank, std::vector<long>(rank, 0));
        for (int i = 0; i < rank; ++i) {
            t.cartan[i][i] = 2;
            if (i + 1 < rank) {
                t.cartan[i][i + 1] = -1;
                t.cartan[i + 1][i] = -1;
            }
        }
        t.d.assign(rank, Rational(1));
        t.dual_coxeter = rank + 1;
        return t;
    }
    if (type == 'C' && rank == 2) {
        // alpha_1 short, alpha_2 long
        t.cartan = {{2, -1}, {-2, 2}};
        t.d = {Rational(1, 2), Rational(1)};
        t.dual_coxeter = 3;
        return t;
    }
    if (type == 'G' && rank == 2) {
        // alpha_1 short, alpha_2 long
        t.cartan = {{2, -1}, {-3, 2}};
        t.d = {Rational(1, 3), Rational(1)};
        t.dual_coxeter = 4;
        return t;
    }
    throw UnsupportedType("unsupported type " + std::string(1, type) + std::to_string(rank));
}

RootDatum build_root_datum(char type, int rank) {
    DatumTables tables = datum_tables(type, rank);
    RootDatum d;
    d.type = type;
    d.rank = rank;
    d.cartan = tables.cartan;
    d.d = tables.d;
    d.dual_coxeter = tables.dual_coxeter;

    d.simple_roots.resize(rank);
    for (int i = 0; i < rank; ++i) {
        d.simple_roots[i].assign(d.cartan[i].begin(), d.cartan[i].end());
    }

    // Coroot images: row i is cartan[i] / d_i; integral because the basic
    // inner product is integral (and even) on the coroot lattice.
    d.coroot_basis.resize(rank);
    for (int i = 0; i < rank; ++i) {
        d.coroot_basis[i].resize(rank);
        for (int j = 0; j < rank; ++j) {
            Rational v = Rational(d.cartan[i][j]) / d.d[i];
            d.coroot_basis[i][j] = v.to_long();
        }
    }

    // Gram matrix G = A^{-1} D.
    std::vector<std::vector<Rational>> a(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            a[i][j] = Rational(d.cartan[i][j]);
    auto ainv = invert_rational_matrix(a);
    d.gram.assign(rank, std::vector<Rational>(rank));
    mpz_class den_lcm(1);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            d.gram[i][j] = ainv[i][j] * d.d[j];
            mpz_class dd = d.gram[i][j].den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), dd.get_mpz_t());
            den_lcm = den_lcm / g * dd;
        }
    d.gram_denominator = den_lcm.get_si();

    // Weyl group closure from the simple reflections.
    std::vector<long> ident(rank * rank, 0);
    for (int i = 0; i < rank; ++i)
        ident[i * rank + i] = 1;
    std::vector<std::vector<long>> gens;
    for (int i = 0; i < rank; ++i) {
        // s_i acting on coordinates: (s_i v)_j = v_j - cartan[i][j] * v_i
        std::vector<long> m = ident;
        for (int j = 0; j < rank; ++j)
            m[j * rank + i] -= d.cartan[i][j];
        gens.push_back(std::move(m));
    }
    std::map<std::vector<long>, int> seen;
    d.weyl.push_back({ident, 1});
    seen[ident] = 0;
    for (std::size_t head = 0; head < d.weyl.size(); ++head) {
        WeylElement cur = d.weyl[head];
        for (const auto& g : gens) {
            // compose: (g . cur): matrix product g*cur
            std::vector<long> prod(rank * rank, 0);
            for (int i = 0; i < rank; ++i)
                for (int k = 0; k < rank; ++k) {
                    long gik = g[i * rank + k];
                    if (gik == 0)
                        continue;
                    for (int j = 0; j < rank; ++j)
                        prod[i * rank + j] += gik * cur.mat[k * rank + j];
                }
            if (seen.emplace(prod, static_cast<int>(d.weyl.size())).second)
                d.weyl.push_back({std::move(prod), -cur.sign});
        }
    }

    d.rho.assign(rank, 1);

    // Roots: Weyl orbit of the simple roots; keep the positive ones.
    std::set<Weight> roots;
    for (const auto& alpha : d.simple_roots)
        for (const auto& w : d.weyl)
            roots.insert(d.apply(w, alpha));
    // positivity via simple-root coefficients c = coords * A^{-1}
    auto root_height = [&](const Weight& r) -> Rational {
        Rational h(0);
        for (int i = 0; i < rank; ++i) {
            Rational ci(0);
            for (int j = 0; j < rank; ++j)
                ci += Rational(r[j]) * ainv[j][i];
            h += ci;
        }
        return h;
    };
    for (const auto& r : roots) {
        Rational h = root_height(r);
        if (h > Rational(0))
            d.positive_roots.push_back(r);
    }
    std::sort(d.positive_roots.begin(), d.positive_roots.end(),
              [&](const Weight& x, const Weight& y) {
                  Rational hx = root_height(x), hy = root_height(y);
                  if (hx != hy)
                      return hx < hy;
                  return x < y;
              });
    d.highest_root = d.positive_roots.back();

    // Longest element: the one sending rho to -rho.
    Weight neg_rho(rank, -1);
    d.longest_index = -1;
    for (std::size_t i = 0; i < d.weyl.size(); ++i) {
        if (d.apply(d.weyl[i], d.rho) == neg_rho) {
            d.longest_index = static_cast<int>(i);
            break;
        }
    }
    if (d.longest_index < 0)
        throw ComputeError("longest Weyl element not found");

    // Index of the coroot lattice in the weight lattice: |det| of the coroot
    // basis matrix.
    {
        std::vector<std::vector<Rational>> m(rank, std::vector<Rational>(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                m[i][j] = Rational(d.coroot_basis[i][j]);
        // determinant by elimination
        Rational det(1);
        for (int col = 0; col < rank; ++col) {
            int piv = -1;
            for (int r = col; r < rank; ++r)
                if (!m[r][col].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                throw ComputeError("degenerate coroot basis");
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            Rational f = m[col][col].inverse();
            for (int r = col + 1; r < rank; ++r) {
                if (m[r][col].is_zero())
                    continue;
                Rational g = m[r][col] * f;
                for (int j = col; j < rank; ++j)
                    m[r][j] -= g * m[col][j];
            }
        }
        d.weight_coroot_index = abs(det).to_long();
    }

    // Cross-check the dual Coxeter number: h_vee = 1 + <rho, theta_vee>.
    {
        Rational tt = d.pairing(d.highest_root, d.highest_root);
        Rational hv = Rational(1) + Rational(2) * d.pairing(d.rho, d.highest_root) / tt;
        if (hv != Rational(d.dual_coxeter))
            throw ComputeError("dual Coxeter table mismatch");
    }

    return d;
}

std::map<std::pair<char, int>, RootDatum>& datum_cache() {
    static std::map<std::pair<char, int>, RootDatum> cache;
    return cache;
}

std::mutex& datum_mutex() {
    static std::mutex m;
    return m;
}

// Lower-triangular Hermite basis for the integer row lattice spanned by rows.
std::vector<std::vector<long>> lower_hnf(std::vector<std::vector<long>> rows) {
    const int n = static_cast<int>(rows.size());
    // eliminate column by column from the right so the result is lower
    // triangular with positive diagonal
    for (int col = n - 1; col >= 0; --col) {
        // rows [0 .. col] are still active and already zero in columns > col
        while (true) {
            // pivot on the smallest nonzero entry so each round of truncated
            // division strictly shrinks the column (Euclid), else q can be 0
            int nz = -1;
            for (int r = 0; r <= col; ++r)
                if (rows[r][col] != 0 &&
                    (nz < 0 || std::labs(rows[r][col]) < std::labs(rows[nz][col])))
                    nz = r;
            if (nz < 0)
                throw ComputeError("degenerate lattice basis");
            bool reduced = true;
            for (int r = 0; r <= col; ++r) {
                if (r == nz || rows[r][col] == 0)
                    continue;
                long q = rows[r][col] / rows[nz][col];
                for (int j = 0; j < n; ++j)
                    rows[r][j] -= q * rows[nz][j];
                if (rows[r][col] != 0)
                    reduced = false;
            }
            if (reduced) {
                // exactly one nonzero left in the active block of this column
                std::swap(rows[nz], rows[col]);
                break;
            }
        }
        if (rows[col][col] < 0)
            for (int j = 0; j < n; ++j)
                rows[col][j] = -rows[col][j];
    }
    // reduce below-diagonal entries into canonical range
    for (int i = n - 1; i >= 0; --i) {
        for (int r = i + 1; r < n; ++r) {
            long q = rows[r][i] / rows[i][i];
            if (rows[r][i] % rows[i][i] < 0)
                q -= 1;
            if (q != 0)
                for (int j = 0; j < n; ++j)
                    rows[r][j] -= q * rows[i][j];
        }
    }
    return rows;
}

Weight reduce_mod_lattice(Weight v, const std::vector<std::vector<long>>& hnf) {
    const int n = static_cast<int>(v.size());
    for (int i = n - 1; i >= 0; --i) {
        long q = v[i] / hnf[i][i];
        if (v[i] % hnf[i][i] < 0)
            q -= 1;
        if (q != 0)
            for (int j = 0; j < n; ++j)
                v[j] -= q * hnf[i][j];
    }
    return v;
}

} // namespace

const RootDatum& root_datum(char type, int rank) {
    std::lock_guard<std::mutex> lock(datum_mutex());
    auto key = std::make_pair(type, rank);
    auto it = datum_cache().find(key);
    if (it != datum_cache().end())
        return it->second;
    return datum_cache().emplace(key, build_root_datum(type, rank)).first->second;
}

TorusPointSet torus_points(const RootDatum& d, long ell) {
    if (ell < 1)
        throw NonIntegralLevel("torus enumeration needs ell >= 1");
    const int n = d.rank;
    std::vector<std::vector<long>> rows(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[i][j] = ell * d.coroot_basis[i][j];
    auto hnf = lower_hnf(rows);

    TorusPointSet out;
    // enumerate canonical residues: x_i in [0, hnf[i][i])
    std::vector<long> idx(n, 0);
    while (true) {
        Weight lambda(idx.begin(), idx.end());
        lambda = reduce_mod_lattice(std::move(lambda), hnf);
        TorusPoint g{lambda, ell};
        out.points.push_back(g);
        out.regular.push_back(d.is_regular(g));
        int i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < hnf[i][i])
                break;
            idx[i] = 0;
        }
        if (i == n)
            break;
    }
    // canonical order
    std::vector<std::size_t> perm(out.points.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return out.points[a].lambda < out.points[b].lambda;
    });
    TorusPointSet sorted;
    for (auto i : perm) {
        sorted.points.push_back(out.points[i]);
        sorted.regular.push_back(out.regular[i]);
    }

    // Orbit representatives: lattice points strictly inside the fundamental
    // alcove scaled by ell, i.e. all coordinates positive and <lambda, theta_vee> <= ell-1.
    Rational tt = d.pairing(d.highest_root, d.highest_root);
    std::vector<Weight> reps;
    std::vector<long> coord(n, 1);
    // bound each coordinate by the theta_vee constraint
    // enumerate the box 1..ell-1 in each coordinate and filter exactly
    bool any = ell >= 2;
    if (any) {
        std::vector<long> c(n, 1);
        while (true) {
            Weight lambda(c.begin(), c.end());
            Rational lv = Rational(2) * d.pairing(lambda, d.highest_root) / tt;
            if (lv <= Rational(ell - 1))
                reps.push_back(lambda);
            int i = 0;
            for (; i < n; ++i) {
                if (++c[i] <= ell - 1)
                    break;
                c[i] = 1;
            }
            if (i == n)
                break;
        }
    }
    std::sort(reps.begin(), reps.end());
    for (auto& lambda : reps)
        sorted.orbit_representatives.push_back(TorusPoint{lambda, ell});
    return sorted;
}

Cyclo weyl_denominator(const RootDatum& d, const TorusPoint& g) {
    Cyclo acc;
    for (const auto& w : d.weyl) {
        Cyclo term = d.torus_character(g, d.apply(w, d.rho));
        if (w.sign < 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

} // namespace flatk
