#pragma once

// JSON (de)serialization and text parsing for the CLI and corpus runner.
//
// Polynomial JSON, ascending coefficients:
//   Q :  {"ring": "Q",  "coeffs": ["num/den", ...]}        ("/den" omitted when 1)
//   Qt:  {"ring": "Qt", "coeffs": [["c0", "c1", ...], ...]} (inner arrays in t)
//   Fp:  {"ring": "Fp", "p": 7, "coeffs": [0, 1, ...]}
//
// Curve strings: "a1,a2,a3,a4,a6" where each entry is a rational constant or an
// expression in t built from rationals, 't', '^', '*', '+', '-', parentheses.

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "tg/curve.hpp"
#include "tg/fppoly.hpp"

namespace tg {

using json = nlohmann::json;

json poly_to_json(const PolyQ& f);
json poly_to_json(const PolyQt& f);
json poly_to_json(const FpPoly& f);

PolyQ polyq_from_json(const json& j);
PolyQt polyqt_from_json(const json& j);
FpPoly fppoly_from_json(const json& j);

// Human-readable one-line form, descending powers: "x^3 - 1/3*x + 2",
// "x^8 + (8*t + 1/27)*x^6 - (t^2)*x^2".  Deterministic; not re-parsed.
std::string pretty(const PolyQ& f, const std::string& var = "x");
std::string pretty(const PolyQt& f, const std::string& var = "x", const std::string& param = "t");

// Expression in t (or a plain rational constant) -> element of Q[t].
PolyQ parse_t_expression(const std::string& text);

using ParsedCurve = std::variant<CurveQ, CurveQt>;

// "a1,a2,a3,a4,a6"; the curve is over Q[t] iff some entry mentions t.
ParsedCurve parse_curve(const std::string& text);

// "a,b,c" rationals.
LinearFunction parse_linear_function(const std::string& text);

std::string curve_to_string(const CurveQ& E);
std::string curve_to_string(const CurveQt& E);
std::string linear_function_to_string(const LinearFunction& u);

}  // namespace tg
