#include "flatk/json_io.hpp"

#include "flatk/errors.hpp"

namespace flatk {

ordered_json rational_json(const Rational& x) {
    return ordered_json::array({x.num().get_str(), x.den().get_str()});
}

Rational rational_from_json(const ordered_json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
        return Rational(mpz_class(j[0].get<std::string>()), mpz_class(j[1].get<std::string>()));
    throw SpecError("rational value must be an integer, a \"p/q\" string, or a [num, den] pair");
}

ordered_json cyclo_json(const Cyclo& x) {
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : x.coeffs())
        coeffs.push_back(rational_json(c));
    return ordered_json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclo cyclo_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw SpecError("cyclotomic value must be an object with conductor and coeffs");
    const long n = j["conductor"].get<long>();
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"])
        coeffs.push_back(rational_from_json(c));
    return Cyclo(n, std::move(coeffs));
}

ordered_json series_json(const TSeries<Cyclo>& s) {
    ordered_json coeffs = ordered_json::array();
    for (int i = 0; i <= s.order(); ++i)
        coeffs.push_back(cyclo_json(s[i]));
    return ordered_json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TSeries<Cyclo> series_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw SpecError("series value must be an object with order and coeffs");
    const int order = j["order"].get<int>();
    if (order < 0 || j["coeffs"].size() != static_cast<std::size_t>(order) + 1)
        throw SpecError("series coefficient count must be order + 1");
    TSeries<Cyclo> s(order);
    for (int i = 0; i <= order; ++i)
        s[i] = cyclo_from_json(j["coeffs"][static_cast<std::size_t>(i)]);
    return s;
}

ordered_json float_series_json(const TSeries<std::complex<double>>& s) {
    ordered_json coeffs = ordered_json::array();
    for (int i = 0; i <= s.order(); ++i)
        coeffs.push_back(ordered_json::array({s[i].real(), s[i].imag()}));
    return ordered_json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

ordered_json character_json(const Character& c) {
    ordered_json out = ordered_json::array();
    for (const auto& [w, m] : c.support())
        out.push_back(ordered_json{{"weight", w}, {"mult", m}});
    return out;
}

Character character_from_json(const ordered_json& j, int rank) {
    if (!j.is_array())
        throw SpecError("character dump must be an array of weight/mult entries");
    Character c;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("weight") || !e.contains("mult"))
            throw SpecError("character entry must carry weight and mult");
        const auto w = e["weight"].get<Weight>();
        if (static_cast<int>(w.size()) != rank)
            throw SpecError("character weight has wrong rank");
        c.add(w, e["mult"].get<long>());
    }
    return c;
}

ordered_json quasi_poly_json(const QuasiPoly& q) {
    ordered_json residues = ordered_json::array();
    for (const auto& coeffs : q.residue_coeffs) {
        ordered_json poly = ordered_json::array();
        for (const Rational& c : coeffs)
            poly.push_back(rational_json(c));
        residues.push_back(std::move(poly));
    }
    return ordered_json{{"period", q.period}, {"degree", q.degree}, {"residues", std::move(residues)}};
}

std::string json_dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

}  // namespace flatk
