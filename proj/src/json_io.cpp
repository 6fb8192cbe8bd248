#include "tg/json_io.hpp"

#include <cctype>
#include <sstream>

namespace tg {

json poly_to_json(const PolyQ& f) {
    json coeffs = json::array();
    for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(rational_to_string(f.coeff(k)));
    return json{{"ring", "Q"}, {"coeffs", coeffs}};
}

json poly_to_json(const PolyQt& f) {
    json coeffs = json::array();
    for (int k = 0; k <= f.degree(); ++k) {
        json inner = json::array();
        const PolyQ& c = f.coeff(k);
        for (int j = 0; j <= c.degree(); ++j) inner.push_back(rational_to_string(c.coeff(j)));
        coeffs.push_back(inner);
    }
    return json{{"ring", "Qt"}, {"coeffs", coeffs}};
}

json poly_to_json(const FpPoly& f) {
    json coeffs = json::array();
    for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(f.coeff(k));
    return json{{"ring", "Fp"}, {"p", f.p()}, {"coeffs", coeffs}};
}

namespace {

Rational rational_from_json_scalar(const json& v) {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ArgumentError("polynomial JSON: expected a rational scalar, got " + v.dump());
}

void require_ring(const json& j, const char* ring) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("coeffs"))
        throw ArgumentError("polynomial JSON: need an object with 'ring' and 'coeffs'");
    if (j.at("ring").get<std::string>() != ring)
        throw ArgumentError(std::string("polynomial JSON: expected ring '") + ring + "', got '" +
                            j.at("ring").get<std::string>() + "'");
}

}  // namespace

PolyQ polyq_from_json(const json& j) {
    require_ring(j, "Q");
    std::vector<Rational> coeffs;
    for (const json& v : j.at("coeffs")) coeffs.push_back(rational_from_json_scalar(v));
    return PolyQ::from_coeffs(std::move(coeffs));
}

PolyQt polyqt_from_json(const json& j) {
    require_ring(j, "Qt");
    std::vector<PolyQ> coeffs;
    for (const json& v : j.at("coeffs")) {
        if (!v.is_array()) throw ArgumentError("polynomial JSON (Qt): coefficients must be arrays");
        std::vector<Rational> inner;
        for (const json& w : v) inner.push_back(rational_from_json_scalar(w));
        coeffs.push_back(PolyQ::from_coeffs(std::move(inner)));
    }
    return PolyQt::from_coeffs(std::move(coeffs));
}

FpPoly fppoly_from_json(const json& j) {
    require_ring(j, "Fp");
    if (!j.contains("p")) throw ArgumentError("polynomial JSON (Fp): missing 'p'");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    std::vector<std::uint64_t> coeffs;
    for (const json& v : j.at("coeffs")) {
        if (v.is_string()) {
            coeffs.push_back(std::stoull(v.get<std::string>()));
        } else {
            long val = v.get<long>();
            long pp = static_cast<long>(p);
            coeffs.push_back(static_cast<std::uint64_t>(((val % pp) + pp) % pp));
        }
    }
    return FpPoly(p, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Pretty printing
// ---------------------------------------------------------------------------

namespace {

// "3*x^2", "x", "1/2", with the coefficient's sign stripped by the caller.
std::string pretty_term(const std::string& coeff_text, bool coeff_is_one, const std::string& var, int k) {
    if (k == 0) return coeff_text;
    std::string power = (k == 1) ? var : var + "^" + std::to_string(k);
    if (coeff_is_one) return power;
    return coeff_text + "*" + power;
}

}  // namespace

std::string pretty(const PolyQ& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        Rational c = f.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational a = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += pretty_term(rational_to_string(a), a == 1, var, k);
    }
    return out;
}

std::string pretty(const PolyQt& f, const std::string& var, const std::string& param) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const PolyQ& c = f.coeff(k);
        if (c.is_zero()) continue;
        if (c.degree() == 0) {
            // Constant in t: print like the rational case.
            Rational r = c.coeff(0);
            const bool negative = r < 0;
            Rational a = negative ? Rational(-r) : r;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            out += pretty_term(rational_to_string(a), a == 1, var, k);
        } else {
            if (!out.empty()) out += " + ";
            out += pretty_term("(" + pretty(c, param) + ")", false, var, k);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

// Minimal recursive-descent parser for expressions in t over Q.
class TParser {
  public:
    explicit TParser(std::string text) : s_(std::move(text)) {}

    PolyQ parse() {
        PolyQ v = expression();
        skip_ws();
        if (pos_ != s_.size()) throw ArgumentError("unexpected trailing input in '" + s_ + "'");
        return v;
    }

  private:
    PolyQ expression() {
        PolyQ v = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v += term();
            } else if (peek() == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    PolyQ term() {
        PolyQ v = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v *= factor();
            } else {
                return v;
            }
        }
    }

    PolyQ factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        return atom();
    }

    PolyQ atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            PolyQ v = expression();
            skip_ws();
            if (peek() != ')') throw ArgumentError("missing ')' in '" + s_ + "'");
            ++pos_;
            return v;
        }
        if (c == 't') {
            ++pos_;
            skip_ws();
            int power = 1;
            if (peek() == '^') {
                ++pos_;
                power = static_cast<int>(parse_uint());
            }
            return PolyQ::monomial(Rational(1), power);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_uint();
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                long den = parse_uint();
                return PolyQ(make_rational(num, den));
            }
            return PolyQ(Rational(num));
        }
        throw ArgumentError("cannot parse '" + s_ + "' at position " + std::to_string(pos_));
    }

    long parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ArgumentError("expected a number in '" + s_ + "' at position " + std::to_string(pos_));
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::stol(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    std::string s_;
    std::size_t pos_ = 0;
};

// U+2212 (minus sign) -> ASCII '-'; everything else unchanged.
std::string normalize_minus(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out += '-';
            i += 2;
        } else {
            out += text[i];
        }
    }
    return out;
}

std::vector<std::string> split_commas(const std::string& text, std::size_t expected, const char* what) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != expected)
        throw ArgumentError(std::string(what) + ": expected " + std::to_string(expected) +
                            " comma-separated entries, got " + std::to_string(parts.size()));
    return parts;
}

}  // namespace

PolyQ parse_t_expression(const std::string& text) { return TParser(normalize_minus(text)).parse(); }

ParsedCurve parse_curve(const std::string& text) {
    std::string norm = normalize_minus(text);
    std::vector<std::string> parts = split_commas(norm, 5, "curve");
    bool over_t = norm.find('t') != std::string::npos;
    std::vector<PolyQ> a;
    for (const std::string& part : parts) a.push_back(parse_t_expression(part));
    if (over_t) return CurveQt(a[0], a[1], a[2], a[3], a[4]);
    std::vector<Rational> r;
    for (const PolyQ& c : a) r.push_back(c.coeff(0));
    return CurveQ(r[0], r[1], r[2], r[3], r[4]);
}

LinearFunction parse_linear_function(const std::string& text) {
    std::vector<std::string> parts = split_commas(normalize_minus(text), 3, "u");
    auto parse_one = [](const std::string& s) {
        PolyQ v = parse_t_expression(s);
        if (v.degree() > 0) throw ArgumentError("u coefficients must be rational constants");
        return v.coeff(0);
    };
    return LinearFunction{parse_one(parts[0]), parse_one(parts[1]), parse_one(parts[2])};
}

std::string curve_to_string(const CurveQ& E) {
    return rational_to_string(E.a1()) + "," + rational_to_string(E.a2()) + "," +
           rational_to_string(E.a3()) + "," + rational_to_string(E.a4()) + "," +
           rational_to_string(E.a6());
}

std::string curve_to_string(const CurveQt& E) {
    return pretty(E.a1(), "t") + "," + pretty(E.a2(), "t") + "," + pretty(E.a3(), "t") + "," +
           pretty(E.a4(), "t") + "," + pretty(E.a6(), "t");
}

std::string linear_function_to_string(const LinearFunction& u) {
    return rational_to_string(u.a) + "," + rational_to_string(u.b) + "," + rational_to_string(u.c);
}

}  // namespace tg
