// JSON codecs for every exchanged type, plus the --face string parser.
//
// Schemas (all rationals as canonical strings "p" or "p/q"; cyclotomics as
// arrays of q rational strings in canonical form):
//   FunctionTable   {"q":..,"n":..,"values":[rational x q^n]}
//   SpectrumTable   {"q":..,"n":..,"values":[[rational x q] x q^n]}
//   HomoPoly        {"degree":k,"coeffs":[cyclotomic x k+1],"pretty":".."}
//   Coloring        {"q":..,"n":..,"r":..,"colors":[int x q^n]}
//   ParameterMatrix {"r":..,"rows":[[int x r] x r]}
//   SpectralData    {"mu":[int],"h":[int],"T":[[rational]]}
//   IdentityVerdict {"holds":..,"clearing":[e_sum,e_diff],"lhs":..,"rhs":..}
//
// nlohmann::json keeps object keys sorted, so identical inputs serialize to
// identical bytes.

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hcube/colorings.hpp"

namespace hcube::io {

using json = nlohmann::ordered_json;

inline json cyclotomic_to_json(const Cyclotomic& c) {
    json a = json::array();
    for (const Rational& r : c.coeffs()) a.push_back(rat_to_string(r));
    return a;
}

inline Cyclotomic cyclotomic_from_json(const json& j, int q) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(q))
        throw InputError("cyclotomic value must be an array of q rational strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const json& e : j) coeffs.push_back(rat_parse(e.get<std::string>()));
    return Cyclotomic::from_coeffs(q, std::move(coeffs));
}

// Human form of a coefficient: plain rational when possible, otherwise the
// coefficient array.
inline std::string coeff_pretty(const Cyclotomic& c) {
    if (c.is_rational()) return rat_to_string(c.as_rational());
    std::string s = "[";
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
        if (i != 0) s += ',';
        s += rat_to_string(c.coeffs()[i]);
    }
    return s + "]";
}

inline std::string homopoly_pretty(const HomoPoly& g) {
    std::string s;
    for (int j = 0; j <= g.degree(); ++j) {
        if (j != 0) s += " + ";
        s += coeff_pretty(g.coeff(j)) + " y^" + std::to_string(j) + " x^" +
             std::to_string(g.degree() - j);
    }
    return s;
}

inline json homopoly_to_json(const HomoPoly& g) {
    json coeffs = json::array();
    for (int j = 0; j <= g.degree(); ++j) coeffs.push_back(cyclotomic_to_json(g.coeff(j)));
    return json{{"degree", g.degree()}, {"coeffs", std::move(coeffs)}, {"pretty", homopoly_pretty(g)}};
}

inline json function_table_to_json(const FunctionTable& f) {
    json values = json::array();
    for (const Cyclotomic& v : f.values) values.push_back(rat_to_string(v.as_rational()));
    return json{{"q", f.params.q}, {"n", f.params.n}, {"values", std::move(values)}};
}

namespace detail {

inline SpaceParams params_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("n"))
        throw InputError("expected an object with \"q\" and \"n\"");
    return SpaceParams(j.at("q").get<int>(), j.at("n").get<int>());
}

inline const json& values_array(const json& j, std::size_t expected) {
    const json& values = j.at("values");
    if (!values.is_array() || values.size() != expected)
        throw InputError("\"values\" must be an array of length q^n");
    return values;
}

}  // namespace detail

inline FunctionTable function_table_from_json(const json& j) {
    const SpaceParams p = detail::params_from_json(j);
    const json& values = detail::values_array(j, p.vertex_count());
    FunctionTable f = make_zero_table(p);
    for (std::size_t i = 0; i < values.size(); ++i)
        f.values[i] = Cyclotomic(p.q, rat_parse(values[i].get<std::string>()));
    return f;
}

inline json spectrum_table_to_json(const SpectrumTable& spectrum) {
    json values = json::array();
    for (const Cyclotomic& v : spectrum.values) values.push_back(cyclotomic_to_json(v));
    return json{{"q", spectrum.params.q}, {"n", spectrum.params.n}, {"values", std::move(values)}};
}

inline SpectrumTable spectrum_table_from_json(const json& j) {
    const SpaceParams p = detail::params_from_json(j);
    const json& values = detail::values_array(j, p.vertex_count());
    SpectrumTable spectrum{p, std::vector<Cyclotomic>(p.vertex_count(), Cyclotomic(p.q))};
    for (std::size_t i = 0; i < values.size(); ++i)
        spectrum.values[i] = cyclotomic_from_json(values[i], p.q);
    return spectrum;
}

inline json coloring_to_json(const Coloring& c) {
    return json{{"q", c.params.q}, {"n", c.params.n}, {"r", c.r}, {"colors", c.colors}};
}

inline Coloring coloring_from_json(const json& j) {
    const SpaceParams p = detail::params_from_json(j);
    if (!j.contains("r") || !j.contains("colors")) throw InputError("coloring needs \"r\" and \"colors\"");
    return Coloring(p, j.at("r").get<int>(), j.at("colors").get<std::vector<int>>());
}

inline json parameter_matrix_to_json(const ParameterMatrix& m) {
    return json{{"r", m.r}, {"rows", m.s}};
}

inline ParameterMatrix parameter_matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("rows"))
        throw InputError("parameter matrix needs \"r\" and \"rows\"");
    ParameterMatrix m{j.at("r").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>()};
    validate_parameter_matrix(m);
    return m;
}

inline json rational_matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json spectral_data_to_json(const SpectralData& sd) {
    return json{{"mu", sd.mu}, {"h", sd.h}, {"T", rational_matrix_to_json(sd.T)}};
}

inline json identity_verdict_to_json(const IdentityVerdict& v) {
    return json{{"holds", v.holds},
                {"clearing", json::array({v.clear_sum, v.clear_diff})},
                {"lhs", homopoly_to_json(v.lhs)},
                {"rhs", homopoly_to_json(v.rhs)}};
}

inline json coloring_verdict_to_json(const ColoringDualityVerdict& v) {
    json columns = json::array();
    for (const IdentityVerdict& c : v.columns) columns.push_back(identity_verdict_to_json(c));
    return json{{"holds", v.holds}, {"mu", v.mu}, {"h", v.h}, {"columns", std::move(columns)}};
}

inline json bivar_poly_to_json(const BivarPoly& g) {
    json terms = json::array();
    for (const auto& [key, coeff] : g.terms())
        terms.push_back(json{{"x", key.first}, {"y", key.second}, {"c", rat_to_string(coeff)}});
    return json{{"terms", std::move(terms)}};
}

inline json matrix_enumerator_power_to_json(const MatrixEnumeratorPower& mp) {
    json rows = json::array();
    for (const auto& row : mp.entries) {
        json r = json::array();
        for (const BivarPoly& e : row) r.push_back(bivar_poly_to_json(e));
        rows.push_back(std::move(r));
    }
    return json{{"d", mp.d}, {"P", std::move(rows)}};
}

// Face argument syntax: "I=1,3;alpha=0120". Indices are 1-based; "I=" may
// be empty; alpha is n digits with coordinate 1 first and defaults to the
// all-zero vertex. Digits restrict the anchor syntax to q <= 10.
inline FaceSpec parse_face(const std::string& text, const SpaceParams& p) {
    std::vector<int> free_set;
    Vertex alpha = zero_vertex(p);
    std::size_t pos = 0;
    bool saw_i = false;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        const std::string part = text.substr(pos, end - pos);
        pos = end + 1;
        if (part.empty()) continue;
        const std::size_t eq = part.find('=');
        if (eq == std::string::npos) throw InputError("face part missing '=': \"" + part + "\"");
        const std::string key = part.substr(0, eq);
        const std::string value = part.substr(eq + 1);
        if (key == "I") {
            saw_i = true;
            std::size_t vp = 0;
            while (vp < value.size()) {
                std::size_t comma = value.find(',', vp);
                if (comma == std::string::npos) comma = value.size();
                const std::string item = value.substr(vp, comma - vp);
                vp = comma + 1;
                if (item.empty()) throw InputError("empty index in face free set");
                try {
                    std::size_t consumed = 0;
                    const int idx = std::stoi(item, &consumed);
                    if (consumed != item.size()) throw InputError("");
                    free_set.push_back(idx);
                } catch (const std::exception&) {
                    throw InputError("bad index \"" + item + "\" in face free set");
                }
            }
            std::sort(free_set.begin(), free_set.end());
        } else if (key == "alpha") {
            if (p.q > 10) throw InputError("alpha digit syntax supports q <= 10 only");
            if (value.size() != static_cast<std::size_t>(p.n))
                throw InputError("alpha must have exactly n digits");
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (value[i] < '0' || value[i] > '9')
                    throw InputError("alpha contains a non-digit");
                alpha.digits[i] = value[i] - '0';
            }
        } else {
            throw InputError("unknown face key \"" + key + "\"");
        }
    }
    if (!saw_i) throw InputError("face argument must contain \"I=\"");
    FaceSpec face{std::move(alpha), std::move(free_set)};
    validate_face(face, p);
    return face;
}

}  // namespace hcube::io
