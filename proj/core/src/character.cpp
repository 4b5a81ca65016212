#include "flatk/character.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <vector>

#include "flatk/errors.hpp"

namespace flatk {

Character trivial_character(int rank) {
    Character c;
    c.add(Weight(rank, 0), 1);
    return c;
}

namespace {

// Dominant weights mu <= lambda, as pairs (mu, lambda - mu in simple-root
// coordinates), enumerated inside the coordinate box allowed by the lowest
// weight.
struct DominantLayer {
    Weight mu;
    long depth; // total height of lambda - mu
};

std::vector<DominantLayer> dominant_candidates(const RootDatum& d, const Weight& lambda) {
    const int n = d.rank;
    // lambda - w0(lambda) = sum C_i alpha_i bounds the coefficients
    Weight low = d.apply(d.longest_element(), lambda);
    Weight diff(n);
    for (int i = 0; i < n; ++i)
        diff[i] = lambda[i] - low[i];
    // solve diff = sum C_i alpha_i: C = diff * A^{-1}; entries are integers
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = Rational(d.cartan[i][j]);
    std::vector<long> bound(n, 0);
    {
        // Gaussian solve for C in C^T A = diff^T
        std::vector<std::vector<Rational>> m = a;
        std::vector<Rational> rhs(n);
        for (int i = 0; i < n; ++i)
            rhs[i] = Rational(diff[i]);
        // transpose system: sum_i C_i A[i][j] = diff[j]
        // build augmented matrix of A^T
        std::vector<std::vector<Rational>> at(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                at[i][j] = a[j][i];
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!at[r][col].is_zero()) {
                    piv = r;
                    break;
                }
            std::swap(at[piv], at[col]);
            std::swap(rhs[piv], rhs[col]);
            Rational f = at[col][col].inverse();
            for (int j = 0; j < n; ++j)
                at[col][j] *= f;
            rhs[col] *= f;
            for (int r = 0; r < n; ++r) {
                if (r == col || at[r][col].is_zero())
                    continue;
                Rational g = at[r][col];
                for (int j = 0; j < n; ++j)
                    at[r][j] -= g * at[col][j];
                rhs[r] -= g * rhs[col];
            }
        }
        for (int i = 0; i < n; ++i)
            bound[i] = rhs[i].to_long();
    }

    std::vector<DominantLayer> out;
    std::vector<long> c(n, 0);
    while (true) {
        Weight mu(n);
        for (int j = 0; j < n; ++j) {
            long v = lambda[j];
            for (int i = 0; i < n; ++i)
                v -= c[i] * d.cartan[i][j];
            mu[j] = v;
        }
        if (d.is_dominant(mu)) {
            long depth = 0;
            for (int i = 0; i < n; ++i)
                depth += c[i];
            out.push_back({std::move(mu), depth});
        }
        int i = 0;
        for (; i < n; ++i) {
            if (++c[i] <= bound[i])
                break;
            c[i] = 0;
        }
        if (i == n)
            break;
    }
    std::sort(out.begin(), out.end(), [](const DominantLayer& x, const DominantLayer& y) {
        if (x.depth != y.depth)
            return x.depth < y.depth;
        return x.mu < y.mu;
    });
    return out;
}

} // namespace

Character weight_multiplicities(const RootDatum& d, const Weight& highest) {
    if (static_cast<int>(highest.size()) != d.rank)
        throw SpecError("highest weight has wrong rank");
    if (!d.is_dominant(highest))
        throw NonDominant("highest weight is not dominant");

    auto layers = dominant_candidates(d, highest);
    std::map<Weight, long> dom_mult;
    Weight rho = d.rho;
    auto norm_sq = [&](const Weight& w) {
        Weight shifted(d.rank);
        for (int i = 0; i < d.rank; ++i)
            shifted[i] = w[i] + rho[i];
        return d.pairing(shifted, shifted);
    };
    Rational top_norm = norm_sq(highest);

    auto mult_of = [&](const Weight& w) -> long {
        Weight dom = d.dominant_representative(w);
        auto it = dom_mult.find(dom);
        return it == dom_mult.end() ? 0 : it->second;
    };

    for (const auto& layer : layers) {
        const Weight& mu = layer.mu;
        if (layer.depth == 0) {
            dom_mult[mu] = 1;
            continue;
        }
        Rational denom = top_norm - norm_sq(mu);
        Rational acc(0);
        for (const auto& alpha : d.positive_roots) {
            for (long j = 1;; ++j) {
                Weight nu(d.rank);
                for (int i = 0; i < d.rank; ++i)
                    nu[i] = mu[i] + j * alpha[i];
                long m = mult_of(nu);
                if (m == 0) {
                    // supports are saturated along root directions: once we
                    // leave, we never re-enter
                    bool inside = norm_sq(nu) <= top_norm;
                    if (!inside)
                        break;
                    continue;
                }
                acc += Rational(2 * m) * d.pairing(nu, alpha);
            }
        }
        if (denom.is_zero())
            throw ComputeError("Freudenthal denominator vanished");
        Rational m = acc / denom;
        dom_mult[mu] = m.to_long();
    }

    Character out;
    for (const auto& [mu, m] : dom_mult) {
        if (m == 0)
            continue;
        std::set<Weight> orbit;
        for (const auto& w : d.weyl)
            orbit.insert(d.apply(w, mu));
        for (const auto& w : orbit)
            out.add(w, m);
    }

    // Exact guard: the Weyl dimension formula must agree with the tally.
    if (out.degree() != weyl_dimension(d, highest))
        throw ComputeError("weight multiplicity tally disagrees with the dimension formula");
    return out;
}

long weyl_dimension(const RootDatum& d, const Weight& highest) {
    if (!d.is_dominant(highest))
        throw NonDominant("highest weight is not dominant");
    Rational num(1), den(1);
    Weight shifted(d.rank);
    for (int i = 0; i < d.rank; ++i)
        shifted[i] = highest[i] + 1;
    for (const auto& alpha : d.positive_roots) {
        num *= d.pairing(shifted, alpha);
        den *= d.pairing(d.rho, alpha);
    }
    return (num / den).to_long();
}

Character adams(const Character& c, long j) {
    Character out;
    for (const auto& [w, m] : c.support()) {
        Weight scaled(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            scaled[i] = j * w[i];
        out.add(scaled, m);
    }
    return out;
}

Character dual_character(const RootDatum& d, const Character& c) {
    (void)d;
    Character out;
    for (const auto& [w, m] : c.support()) {
        Weight neg(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            neg[i] = -w[i];
        out.add(neg, m);
    }
    return out;
}

Cyclo char_eval(const RootDatum& d, const Character& c, const TorusPoint& g) {
    Cyclo acc;
    for (const auto& [w, m] : c.support())
        acc += d.torus_character(g, w) * Cyclo(Rational(m));
    return acc;
}

namespace {

std::string cache_key(const RootDatum& d, const Weight& highest) {
    std::ostringstream os;
    os << d.label();
    for (long v : highest)
        os << "_" << v;
    return os.str();
}

bool load_cached(const std::filesystem::path& p, int rank, Character& out) {
    std::ifstream in(p);
    if (!in)
        return false;
    long entries = 0;
    if (!(in >> entries))
        return false;
    Character c;
    for (long e = 0; e < entries; ++e) {
        Weight w(rank);
        for (int i = 0; i < rank; ++i)
            if (!(in >> w[i]))
                return false;
        long m;
        if (!(in >> m))
            return false;
        c.add(w, m);
    }
    out = std::move(c);
    return true;
}

void store_cached(const std::filesystem::path& p, const Character& c) {
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << c.support().size() << "\n";
        for (const auto& [w, m] : c.support()) {
            for (long v : w)
                out << v << " ";
            out << m << "\n";
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, p, ec);
}

} // namespace

const Character& cached_character(const RootDatum& d, const Weight& highest) {
    static std::map<std::string, Character> memo;
    static std::mutex mu;
    std::string key = cache_key(d, highest);
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    const char* dir = std::getenv("FLATK_CACHE_DIR");
    if (dir && *dir) {
        std::filesystem::path p = std::filesystem::path(dir) / ("char_" + key + ".tbl");
        Character c;
        if (load_cached(p, d.rank, c)) {
            // trust but verify: the tally must match the dimension formula
            if (c.degree() == weyl_dimension(d, highest))
                return memo.emplace(key, std::move(c)).first->second;
        }
        Character fresh = weight_multiplicities(d, highest);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        store_cached(p, fresh);
        return memo.emplace(key, std::move(fresh)).first->second;
    }
    return memo.emplace(key, weight_multiplicities(d, highest)).first->second;
}

} // namespace flatk
