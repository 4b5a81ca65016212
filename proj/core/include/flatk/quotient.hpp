#pragma once

#include <utility>
#include <vector>

#include "flatk/engine.hpp"
#include "flatk/rational.hpp"

namespace flatk {

// Marked-point pairing request: rational alcove weights a_j, a schedule of
// levels k at which every k*a_j is an honest weight, and a deformation.
// Geometric hypotheses on the a_j (interior, far-wall) are caller-asserted.
struct PairingRequest {
    const RootDatum* datum = nullptr;
    long genus = 0;
    std::vector<std::vector<Rational>> marked;
    std::vector<long> schedule;
    Character deformation;
    int order = 0;
};

// Scaled marked weights k*a_j; throws if some coordinate is not an integer.
std::vector<Weight> scaled_marked_weights(const PairingRequest& req, long k);

// Runs the fixed-point engine with boundary characters Tr of the duals of
// the irreducibles with highest weights k*a_j.
TSeries<Cyclo> multiplicity_series(const PairingRequest& req, long k, int threads = 1);

// d/dt at t=0 of the multiplicity series, as a rational number.
Rational intersection_number(const PairingRequest& req, long k, int threads = 1);

// Extracts the rational coefficients of an exact series; throws NotRational
// if any coefficient fails to be rational.
std::vector<Rational> rationalized_coeffs(const TSeries<Cyclo>& s);

// lcm of the coordinate denominators of the marked weights (1 if none).
long default_period(const PairingRequest& req);

struct QuasiPoly {
    long period = 1;
    int degree = 0;
    // residue_coeffs[r][i] = coefficient of k^i on the class k = r mod period.
    std::vector<std::vector<Rational>> residue_coeffs;

    Rational evaluate(long k) const;
};

// Exact interpolation per residue class: the first degree+1 samples of each
// class fix the polynomial, every remaining sample must reproduce exactly.
// Each sampled class needs at least degree+2 samples; classes with no samples
// stay unfitted and evaluate() refuses them.
QuasiPoly quasi_poly_fit(const std::vector<std::pair<long, Rational>>& samples, long period,
                         int degree);

// Smallest degree bound in 0..max_degree whose fit validates.
QuasiPoly quasi_poly_fit_auto(const std::vector<std::pair<long, Rational>>& samples, long period,
                              int max_degree);

}  // namespace flatk
