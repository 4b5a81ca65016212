#pragma once

#include <complex>
#include <optional>
#include <thread>
#include <vector>

#include "flatk/character.hpp"
#include "flatk/jet.hpp"
#include "flatk/root_datum.hpp"
#include "flatk/series.hpp"
#include "flatk/twist.hpp"

namespace flatk {

struct CurveInsertion {
    Character u1;
    Character u2;
    long intersection = 0; // pairing number of the two curve classes
};

// One fixed-point index computation: surface genus, boundary pairing
// characters (one per boundary component), level, deformation character and
// truncation order, optional point/curve insertions.
struct IndexJob {
    const RootDatum* datum = nullptr;
    int genus = 0;
    long level = 0;
    Character deformation; // empty support means no deformation
    int order = 0;
    std::vector<Character> boundary; // must hold at least one character
    std::optional<Character> point_insertion;
    std::optional<CurveInsertion> curve_insertion;

    long ell() const { return level + datum->dual_coxeter; }

    void validate() const {
        if (!datum)
            throw SpecError("index job without root datum");
        if (genus < 0)
            throw SpecError("genus must be non-negative");
        if (order < 0)
            throw SpecError("order must be non-negative");
        if (boundary.empty())
            throw SpecError("at least one boundary character is required");
        if (ell() < 1)
            throw NonIntegralLevel("level must exceed minus the dual Coxeter number");
    }
};

template <class S>
struct IndexValue {
    TSeries<S> total;
    std::vector<TorusPoint> points;
    std::vector<TSeries<S>> summands;
};

// Insertion factor at a solved jet: Tr_{U0}(g_t) for a point insertion,
// times m * alpha for a curve pair, where
//   alpha = -E1^T (ell G^{-1} + t S)^{-1} E2
// contracts the plain gradient data E of U1, U2 against the same matrix whose
// determinant normalizes the orbit summand. Both insertions absent gives 1.
template <class S>
TSeries<S> insertion_factor(const IndexJob& job, const Jet<S>& jet) {
    const RootDatum& d = *job.datum;
    const int order = jet.order;
    TSeries<S> factor = TSeries<S>::one(order);
    if (job.point_insertion)
        factor *= char_eval_jet(*job.point_insertion, jet);
    if (job.curve_insertion) {
        const auto& ins = *job.curve_insertion;
        if (ins.intersection == 0)
            return TSeries<S>(order);
        const int n = d.rank;
        TwistData vd = derivative_data(d, job.deformation);
        // A = ell G^{-1} + t S(g_t); invert by Neumann series around ell G^{-1}.
        // A^{-1} = G/ell - (G/ell) (t S) A^{-1}  =>  expand iteratively.
        std::vector<std::vector<TSeries<S>>> tS(n, std::vector<TSeries<S>>(n, TSeries<S>(order)));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                tS[p][q] = eval_twist_map(vd.hess[p][q], jet).shifted(1);
        // base inverse G/ell as constant series matrix
        std::vector<std::vector<TSeries<S>>> base(n, std::vector<TSeries<S>>(n, TSeries<S>(order)));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                base[p][q] = TSeries<S>::constant(order, ScalarOps<S>::from_rational(d.gram[p][q] / Rational(job.ell())));
        // ainv = sum_{m>=0} (-base*tS)^m * base, truncated
        std::vector<std::vector<TSeries<S>>> ainv = base;
        std::vector<std::vector<TSeries<S>>> term = base;
        for (int m = 1; m <= order; ++m) {
            // term <- -base * tS * term_prev ... compute product base*(tS*term)
            std::vector<std::vector<TSeries<S>>> st(n, std::vector<TSeries<S>>(n, TSeries<S>(order)));
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    TSeries<S> acc(order);
                    for (int k = 0; k < n; ++k)
                        acc += tS[p][k] * term[k][q];
                    st[p][q] = acc;
                }
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    TSeries<S> acc(order);
                    for (int k = 0; k < n; ++k)
                        acc += base[p][k] * st[k][q];
                    term[p][q] = -acc;
                }
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    ainv[p][q] += term[p][q];
        }
        // gradient data of the two curve characters
        TwistData d1 = derivative_data(d, ins.u1);
        TwistData d2 = derivative_data(d, ins.u2);
        std::vector<TSeries<S>> e1(n, TSeries<S>(order)), e2(n, TSeries<S>(order));
        for (int p = 0; p < n; ++p) {
            e1[p] = eval_twist_map(d1.grad[p], jet);
            e2[p] = eval_twist_map(d2.grad[p], jet);
        }
        TSeries<S> alpha(order);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                alpha += e1[p] * ainv[p][q] * e2[q];
        alpha = -alpha;
        factor *= alpha.scaled(Rational(ins.intersection));
    }
    return factor;
}

// Orbit summand at a regular torus point g:
//   ((-1)^{|R+|} J(g_t)^2 / (|T_ell| det(1 + (t/ell) S(g_t) G)))^{1-genus}
//     * insertions * prod_j f_j(g_t).
template <class S>
TSeries<S> orbit_summand(const IndexJob& job, const TorusPoint& g) {
    job.validate();
    const RootDatum& d = *job.datum;
    if (!d.is_regular(g))
        throw NonRegularPoint("orbit summand at a non-regular point");
    const long ell = job.ell();
    const int order = job.order;
    const int n = d.rank;

    TwistData vd = derivative_data(d, job.deformation);
    Jet<S> jet = solve_jet<S>(d, g, ell, vd, order);

    TSeries<S> result = TSeries<S>::one(order);
    if (job.genus != 1) {
        TSeries<S> j = weyl_denominator_jet(d, jet);
        TSeries<S> jsq = j * j;
        // det(1 + (t/ell) S G)
        TSeries<S> detfac = TSeries<S>::one(order);
        if (!job.deformation.empty() && order > 0) {
            std::vector<std::vector<TSeries<S>>> sval(n, std::vector<TSeries<S>>(n, TSeries<S>(order)));
            for (int p = 0; p < n; ++p)
                for (int k = 0; k < n; ++k)
                    sval[p][k] = eval_twist_map(vd.hess[p][k], jet);
            std::vector<std::vector<TSeries<S>>> m(n, std::vector<TSeries<S>>(n, TSeries<S>(order)));
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    TSeries<S> acc(order);
                    for (int k = 0; k < n; ++k) {
                        if (d.gram[k][q].is_zero())
                            continue;
                        acc += sval[p][k].scaled(d.gram[k][q]);
                    }
                    m[p][q] = acc.shifted(1).scaled(Rational(1, ell));
                    if (p == q)
                        m[p][q] += TSeries<S>::one(order);
                }
            detfac = series_det(m);
        }
        // |T_ell| = ell^rank * [Lambda : Pi]
        Rational t_ell(1);
        for (int i = 0; i < n; ++i)
            t_ell *= Rational(ell);
        t_ell *= Rational(d.weight_coroot_index);
        TSeries<S> base = jsq.scaled(Rational(1) / t_ell);
        if (d.positive_roots.size() % 2 == 1)
            base = -base;
        base *= detfac.inverse();
        result = (job.genus == 0) ? base : base.inverse().pow(job.genus - 1);
    }

    result *= insertion_factor(job, jet);
    for (const auto& f : job.boundary)
        result *= char_eval_jet(f, jet);
    return result;
}

namespace detail {

// Deterministic parallel map: results land in input order regardless of the
// worker count.
template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(threads, count);
    for (std::size_t tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([tid, nthreads, count, &body]() {
            for (std::size_t i = tid; i < count; i += nthreads)
                body(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace detail

// Full fixed-point sum over the canonical regular orbit representatives.
// Orbit summands may run concurrently; the reduction is always in canonical
// order, so the result is independent of the worker count.
template <class S>
IndexValue<S> index_pairing(const IndexJob& job, int threads = 1) {
    job.validate();
    const RootDatum& d = *job.datum;
    auto pts = torus_points(d, job.ell());
    IndexValue<S> out;
    out.total = TSeries<S>(job.order);
    out.points = pts.orbit_representatives;
    out.summands.assign(out.points.size(), TSeries<S>(job.order));
    detail::parallel_for(out.points.size(), threads, [&](std::size_t i) {
        out.summands[i] = orbit_summand<S>(job, out.points[i]);
    });
    for (const auto& s : out.summands)
        out.total += s;
    return out;
}

} // namespace flatk
