#pragma once

#include <vector>

#include "flatk/character.hpp"
#include "flatk/rational.hpp"
#include "flatk/root_datum.hpp"

namespace flatk {

// Finitely supported rational combination of formal torus characters e^mu,
// keyed by weight. Multiplication is convolution (weights add).
using GroupPoly = std::map<Weight, Rational>;

GroupPoly gp_from_character(const Character& c);
GroupPoly gp_mul(const GroupPoly& a, const GroupPoly& b);
// Multiply by e^mu.
GroupPoly gp_shift(const GroupPoly& a, const Weight& mu);

// Formal Weyl numerator: sum over w of sign(w) e^{w rho}.
GroupPoly weyl_numerator_poly(const RootDatum& d);

// Directional derivative data of Tr_V at eta: sum over weights of
// mult(lambda) <lambda, eta> e^lambda. eta must pair integrally with the
// weight lattice (any coroot lattice point does).
GroupPoly pairing_gradient(const RootDatum& d, const Character& v, const Weight& eta);

// Brute-force genus-zero pairing: coefficients of t^0..t^order of the
// one-boundary index pairing against f, computed as a finite lattice sum
// over the coroot lattice window determined by the supports. Shares no
// code with the fixed-point engine.
std::vector<Rational> disk_pairing(const RootDatum& d, const Character& v, long level,
                                   const Character& f, int order);

// Checks, symbolically in the group ring and to the given t-order, that the
// lattice-sum contribution at eta' + eta equals the contribution at eta'
// multiplied by the shift factor e^{ell eta} exp(t D_eta), for eta' ranging
// over a generator test set.
bool affine_shift_check(const RootDatum& d, const Character& v, long level,
                        const Weight& eta, int order);

// SU(2) level-k fusion data: labels 0..k, fusion matrices from the truncated
// Clebsch-Gordan rule, handle matrix H = sum_i N_i N_i^T.
struct FusionData {
    long level = 0;
    std::vector<std::vector<std::vector<long>>> n;
    std::vector<std::vector<long>> handle;
};

FusionData fusion_data(long level);

// (H^genus * prod_j N_{labels[j]}) entry (0,0).
long fusion_verlinde(long level, long genus, const std::vector<long>& labels);

}  // namespace flatk
