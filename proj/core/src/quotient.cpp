#include "flatk/quotient.hpp"

#include <algorithm>
#include <cstddef>

#include "flatk/errors.hpp"

namespace flatk {

namespace {

// (x - root) * p
std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, const Rational& root) {
    std::vector<Rational> out(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= p[i] * root;
    }
    return out;
}

Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

}  // namespace

std::vector<Weight> scaled_marked_weights(const PairingRequest& req, long k) {
    if (req.datum == nullptr)
        throw SpecError("pairing request has no root datum");
    std::vector<Weight> out;
    out.reserve(req.marked.size());
    for (const auto& a : req.marked) {
        if (static_cast<int>(a.size()) != req.datum->rank)
            throw SpecError("marked weight has wrong rank");
        Weight w(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Rational scaled = Rational(k) * a[i];
            if (!scaled.is_integer())
                throw SpecError("level does not clear the marked weight denominators");
            w[i] = scaled.to_long();
        }
        out.push_back(std::move(w));
    }
    return out;
}

TSeries<Cyclo> multiplicity_series(const PairingRequest& req, long k, int threads) {
    if (req.datum == nullptr)
        throw SpecError("pairing request has no root datum");
    if (std::find(req.schedule.begin(), req.schedule.end(), k) == req.schedule.end())
        throw SpecError("requested level is not in the schedule");
    const RootDatum& d = *req.datum;
    IndexJob job;
    job.datum = req.datum;
    job.genus = req.genus;
    job.level = k;
    job.deformation = req.deformation;
    job.order = req.order;
    const std::vector<Weight> highest = scaled_marked_weights(req, k);
    if (highest.empty()) {
        job.boundary.push_back(trivial_character(d.rank));
    } else {
        for (const Weight& w : highest)
            job.boundary.push_back(cached_character(d, d.dual_highest_weight(w)));
    }
    return index_pairing<Cyclo>(job, threads).total;
}

Rational intersection_number(const PairingRequest& req, long k, int threads) {
    if (req.order < 1)
        throw SpecError("derivative extraction needs series order at least 1");
    const TSeries<Cyclo> s = multiplicity_series(req, k, threads);
    return s[1].rationalize();
}

std::vector<Rational> rationalized_coeffs(const TSeries<Cyclo>& s) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int i = 0; i <= s.order(); ++i)
        out.push_back(s[i].rationalize());
    return out;
}

long default_period(const PairingRequest& req) {
    mpz_class l(1);
    for (const auto& a : req.marked)
        for (const auto& x : a)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    if (!l.fits_slong_p())
        throw ComputeError("marked weight denominators overflow the period");
    return l.get_si();
}

Rational QuasiPoly::evaluate(long k) const {
    const long r = ((k % period) + period) % period;
    const auto& coeffs = residue_coeffs[static_cast<std::size_t>(r)];
    if (coeffs.empty())
        throw ComputeError("no fitted polynomial on residue class " + std::to_string(r));
    return poly_eval(coeffs, Rational(k));
}

QuasiPoly quasi_poly_fit(const std::vector<std::pair<long, Rational>>& samples, long period,
                         int degree) {
    if (period < 1)
        throw SpecError("period must be at least 1");
    if (degree < 0)
        throw SpecError("degree bound must be nonnegative");
    std::vector<std::vector<std::pair<long, Rational>>> classes(static_cast<std::size_t>(period));
    for (const auto& s : samples) {
        const long r = ((s.first % period) + period) % period;
        classes[static_cast<std::size_t>(r)].push_back(s);
    }
    QuasiPoly out;
    out.period = period;
    out.degree = degree;
    out.residue_coeffs.resize(static_cast<std::size_t>(period));
    const std::size_t need = static_cast<std::size_t>(degree) + 2;
    for (long r = 0; r < period; ++r) {
        auto& cls = classes[static_cast<std::size_t>(r)];
        // A class with no samples at all is unreachable (e.g. levels that the
        // marked denominators rule out); leave it unfitted.
        if (cls.empty())
            continue;
        if (cls.size() < need)
            throw InsufficientSamples("residue class " + std::to_string(r) + " has " +
                                      std::to_string(cls.size()) + " samples, needs " +
                                      std::to_string(need));
        std::sort(cls.begin(), cls.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        const std::size_t m = static_cast<std::size_t>(degree) + 1;
        std::vector<Rational> coeffs(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> basis{Rational(1)};
            Rational denom(1);
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i)
                    continue;
                basis = poly_mul_linear(basis, Rational(cls[j].first));
                denom = denom * Rational(cls[i].first - cls[j].first);
            }
            const Rational scale = cls[i].second / denom;
            for (std::size_t t = 0; t < basis.size(); ++t)
                coeffs[t] += basis[t] * scale;
        }
        for (std::size_t i = m; i < cls.size(); ++i) {
            if (poly_eval(coeffs, Rational(cls[i].first)) != cls[i].second)
                throw ValidationMismatch("held-out sample at k=" + std::to_string(cls[i].first) +
                                         " disagrees with the degree-" + std::to_string(degree) +
                                         " fit");
        }
        out.residue_coeffs[static_cast<std::size_t>(r)] = std::move(coeffs);
    }
    return out;
}

QuasiPoly quasi_poly_fit_auto(const std::vector<std::pair<long, Rational>>& samples, long period,
                              int max_degree) {
    for (int deg = 0; deg <= max_degree; ++deg) {
        try {
            return quasi_poly_fit(samples, period, deg);
        } catch (const ValidationMismatch&) {
            continue;
        }
    }
    throw ValidationMismatch("no degree bound up to " + std::to_string(max_degree) +
                             " validates against the held-out samples");
}

}  // namespace flatk
