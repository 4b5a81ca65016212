#pragma once

#include <map>
#include <vector>

#include "flatk/character.hpp"
#include "flatk/root_datum.hpp"

namespace flatk {

// Polynomial in t with rational coefficients, low to high.
using TPoly = std::vector<Rational>;

// Sparse derivative data of a character V = sum n_lambda u^lambda, in plain
// fundamental-weight coordinates:
//   grad[p]    : u^lambda coefficient n_lambda * lambda_p
//   hess[p][q] : u^lambda coefficient n_lambda * lambda_p * lambda_q
// Coefficients are t-polynomials so the same container carries both the plain
// data (degree 0) and the lambda-deformed twist series.
struct TwistData {
    int rank = 0;
    int order = 0; // t-degree carried by the coefficients
    std::vector<std::map<Weight, TPoly>> grad;
    std::vector<std::vector<std::map<Weight, TPoly>>> hess;
};

// Plain first and second derivative data of a character.
TwistData derivative_data(const RootDatum& d, const Character& c);

// Deformed twist: sum_{j>=1} ((-t)^{j-1} / j^2) * (derivative data of psi^j c),
// truncated at the given t-order.
TwistData lambda_twist_series(const RootDatum& d, const Character& c, int order);

// Independent expansion of the closed form for the adjoint twist,
//   sum_{alpha>0} alpha * (1/t)(log(1+t u^alpha) - log(1+t u^{-alpha})),
// via group-ring logarithm power series. Used to cross-check
// lambda_twist_series(adjoint).
TwistData adjoint_log_twist(const RootDatum& d, int order);

// Coefficientwise equality up to the common truncation order; missing map
// entries and trailing zero coefficients count as zero.
bool twist_data_equal(const TwistData& a, const TwistData& b);

} // namespace flatk
