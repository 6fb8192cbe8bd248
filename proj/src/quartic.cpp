#include <algorithm>
#include <optional>

#include "tg/poly.hpp"
#include "tg/quadext.hpp"

namespace tg {

namespace {

// Deterministic order: degree first, then ascending coefficient vectors.
bool factor_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = 0; k <= a.degree(); ++k) {
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

struct Depressed {
    Rational shift;  // x = y + shift
    Rational p, q, r;
    PolyQ poly;      // y^4 + p y^2 + q y + r
};

Depressed depress(const PolyQ& monic_quartic) {
    Rational shift = -monic_quartic.coeff(3) / 4;
    PolyQ g = monic_quartic.shifted_arg(shift);
    return {shift, g.coeff(2), g.coeff(1), g.coeff(0), g};
}

// Quadratic-pair factorizations of a depressed quartic track the split resolvent
// phi(T) = T^3 + 2p T^2 + (p^2 - 4r) T - q^2, whose roots are the squares of the
// y-coefficients of the quadratic factors.  phi(T) = r3(T + p) for the classical
// resolvent cubic r3.
PolyQ split_resolvent(const Depressed& d) {
    return PolyQ::from_coeffs({-d.q * d.q, d.p * d.p - 4 * d.r, 2 * d.p, Rational(1)});
}

PolyQ resolvent_cubic(const Depressed& d) {
    return PolyQ::from_coeffs({4 * d.p * d.r - d.q * d.q, -4 * d.r, -d.p, Rational(1)});
}

std::optional<std::pair<PolyQ, PolyQ>> quadratic_split(const Depressed& d) {
    const Rational &p = d.p, &q = d.q, &r = d.r;
    if (q == 0) {
        // Biquadratic: (y^2 + b)(y^2 + c) with b + c = p, b c = r ...
        if (auto s = is_square(p * p - 4 * r)) {
            PolyQ f1 = PolyQ::from_coeffs({(p - *s) / 2, Rational(0), Rational(1)});
            PolyQ f2 = PolyQ::from_coeffs({(p + *s) / 2, Rational(0), Rational(1)});
            return std::make_pair(f1, f2);
        }
        // ... or (y^2 + a y + b)(y^2 - a y + b) with b^2 = r, a^2 = 2b - p.
        if (auto b = is_square(r)) {
            for (int sign = 0; sign < 2; ++sign) {
                Rational bb = sign == 0 ? *b : -*b;
                if (auto a = is_square(2 * bb - p)) {
                    PolyQ f1 = PolyQ::from_coeffs({bb, *a, Rational(1)});
                    PolyQ f2 = PolyQ::from_coeffs({bb, -*a, Rational(1)});
                    return std::make_pair(f1, f2);
                }
            }
        }
        return std::nullopt;
    }
    // q != 0: need a rational root T0 of phi that is the square of a rational.
    for (const Rational& t0 : rational_roots(split_resolvent(d))) {
        auto alpha = is_square(t0);
        if (!alpha || *alpha == 0) continue;
        Rational beta = (p + t0 - q / *alpha) / 2;
        Rational gamma = (p + t0 + q / *alpha) / 2;
        PolyQ f1 = PolyQ::from_coeffs({beta, *alpha, Rational(1)});
        PolyQ f2 = PolyQ::from_coeffs({gamma, -*alpha, Rational(1)});
        if (f1 * f2 == d.poly) return std::make_pair(f1, f2);
    }
    return std::nullopt;
}

}  // namespace

QuarticFactorization factor_quartic(const PolyQ& f) {
    if (f.degree() != 4) throw ArgumentError("factor_quartic: degree must be 4");
    if (gcd_monic(f, f.derivative()).degree() != 0)
        throw ArgumentError("factor_quartic: input is not squarefree");

    QuarticFactorization out;
    out.unit = f.lc();
    PolyQ F = f.divided_by_scalar(f.lc());

    std::vector<PolyQ> linears;
    PolyQ rest = F;
    for (const Rational& r : rational_roots(F)) {
        linears.push_back(PolyQ::from_coeffs({-r, Rational(1)}));
        rest = exact_divide(rest, linears.back());
    }

    switch (linears.size()) {
        case 4:
            out.shape = QuarticShape::Linears;
            out.factors = linears;
            break;
        case 2:
            out.shape = QuarticShape::TwoLinearsQuadratic;
            out.factors = linears;
            out.factors.push_back(rest);  // quadratic with no rational roots
            break;
        case 1:
            out.shape = QuarticShape::LinearCubic;
            out.factors = linears;
            out.factors.push_back(rest);  // cubic with no rational roots
            break;
        case 0: {
            Depressed d = depress(F);
            if (auto split = quadratic_split(d)) {
                out.shape = QuarticShape::TwoQuadratics;
                out.factors = {split->first.shifted_arg(-d.shift),
                               split->second.shifted_arg(-d.shift)};
            } else {
                out.shape = QuarticShape::Irreducible;
                out.factors = {F};
            }
            break;
        }
        default:
            // 3 distinct rational roots of a squarefree quartic force a 4th.
            throw Error("factor_quartic: inconsistent rational root count");
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

namespace {

// Roots of a monic quadratic T^2 + u T + v inside Q(sqrt(disc)), if they lie there.
std::vector<QuadExt> quadratic_roots_in(const PolyQ& quad, const Rational& disc) {
    Rational u = quad.coeff(1), v = quad.coeff(0);
    Rational delta = u * u - 4 * v;
    std::vector<QuadExt> out;
    if (delta == 0) {
        out.emplace_back(-u / 2, Rational(0), disc);
        return out;
    }
    if (auto s = is_square(delta)) {
        out.emplace_back((-u + *s) / 2, Rational(0), disc);
        out.emplace_back((-u - *s) / 2, Rational(0), disc);
        return out;
    }
    if (auto m = is_square(delta / disc)) {
        // sqrt(delta) = m sqrt(disc)
        out.emplace_back(-u / 2, *m / 2, disc);
        out.emplace_back(-u / 2, -*m / 2, disc);
    }
    return out;
}

// Does the depressed quartic split into two quadratics over F = Q(sqrt(disc))?
// Used to separate C4 (splits) from D4 (does not) once the resolvent cubic has
// exactly one rational root and disc is not a square.
bool splits_over_quadratic_field(const Depressed& d, const Rational& disc) {
    const Rational &p = d.p, &q = d.q, &r = d.r;
    const PolyQ phi = split_resolvent(d);
    if (q == 0) {
        // (y^2 + b)(y^2 + c): b, c in F iff p^2 - 4r is a square times disc (or a
        // square, excluded here by irreducibility); the cross pattern needs
        // sqrt(r) in F as well.
        if (is_square((p * p - 4 * r) / disc)) return true;
        QuadExt rr = quadext_rational(r, disc);
        if (auto b = rr.sqrt()) {
            for (const QuadExt& bb : {*b, -*b}) {
                QuadExt a2 = bb + bb - quadext_rational(p, disc);
                if (a2.sqrt()) return true;
            }
        }
        return false;
    }
    // Collect the roots of phi that live in F, then test whether any is a square
    // in F; its square root alpha gives the split with beta, gamma in F.
    std::vector<QuadExt> candidates;
    PolyQ rest = phi;
    for (const Rational& t0 : rational_roots(phi)) {
        candidates.push_back(quadext_rational(t0, disc));
        rest = exact_divide(rest, PolyQ::from_coeffs({-t0, Rational(1)}));
    }
    if (rest.degree() == 2) {
        for (const QuadExt& t : quadratic_roots_in(rest, disc)) candidates.push_back(t);
    }
    for (const QuadExt& t : candidates) {
        if (t == QuadExt(disc)) continue;  // alpha = 0 would mean q = 0
        if (auto alpha = t.sqrt()) {
            // beta, gamma are rational expressions in alpha over F; existence of
            // alpha in F is the whole condition.
            (void)alpha;
            return true;
        }
    }
    return false;
}

}  // namespace

QuarticGroup quartic_galois(const PolyQ& f) {
    QuarticFactorization fac = factor_quartic(f);  // also validates degree/squarefree
    if (fac.shape != QuarticShape::Irreducible)
        throw ArgumentError("quartic_galois: quartic is reducible (" + to_string(fac.shape) + ")");
    PolyQ F = fac.factors[0];
    Depressed d = depress(F);
    Rational disc = discriminant(d.poly);

    std::vector<Rational> res_roots = rational_roots(resolvent_cubic(d));
    if (res_roots.empty()) return is_square(disc) ? QuarticGroup::A4 : QuarticGroup::S4;
    if (res_roots.size() >= 2) return QuarticGroup::V4;
    if (is_square(disc))
        throw Error("quartic_galois: square discriminant with one resolvent root");
    return splits_over_quadratic_field(d, disc) ? QuarticGroup::C4 : QuarticGroup::D4;
}

}  // namespace tg
