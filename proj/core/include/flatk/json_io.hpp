#pragma once

#include <complex>
#include <string>

#include "json.hpp"

#include "flatk/character.hpp"
#include "flatk/cyclo.hpp"
#include "flatk/quotient.hpp"
#include "flatk/rational.hpp"
#include "flatk/series.hpp"

namespace flatk {

// Insertion order is preserved so serialized output is byte-stable.
using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& x);                  // ["num", "den"]
Rational rational_from_json(const ordered_json& j);

ordered_json cyclo_json(const Cyclo& x);                        // {"conductor", "coeffs"}
Cyclo cyclo_from_json(const ordered_json& j);

ordered_json series_json(const TSeries<Cyclo>& s);              // {"order", "coeffs"}
TSeries<Cyclo> series_from_json(const ordered_json& j);

ordered_json float_series_json(const TSeries<std::complex<double>>& s); // coeffs [re, im]

ordered_json character_json(const Character& c);                // [{"weight", "mult"}]
Character character_from_json(const ordered_json& j, int rank);

ordered_json quasi_poly_json(const QuasiPoly& q);

// Canonical dump: two-space indent plus trailing newline.
std::string json_dump(const ordered_json& j);

}  // namespace flatk
