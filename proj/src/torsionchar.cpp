#include "tg/torsionchar.hpp"

#include <algorithm>

namespace tg {

PolyQ specialize_t(const PolyQt& f, const Rational& t0) {
    return map_coeffs<Rational>(f, [&](const PolyQ& c) { return c.evaluate(t0); });
}

CurveQ specialize_t(const CurveQt& E, const Rational& t0) {
    return CurveQ(E.a1().evaluate(t0), E.a2().evaluate(t0), E.a3().evaluate(t0),
                  E.a4().evaluate(t0), E.a6().evaluate(t0));
}

PolyQt charpoly(const CurveQt& E, const LinearFunction& u, long n, CharpolyMethod method) {
    if (n == 2) {
        if (!is_x_function(u))
            throw ArgumentError("charpoly: n = 2 supports only u = x (a=0, b=1, c=0)");
        return charpoly_n2(E);
    }
    if (n < 3) throw ArgumentError("charpoly: n must be >= 2");
    require_admissible(E, u);

    // t-degree bound for chi: coefficients of r^3 chi are Sylvester minors built
    // from 3 rows of psi~_n(E') coefficients and deg psi~_n rows of w_{E'}
    // coefficients; r and every route division are constant in t.
    const CurveQt Ep = transform_for_u(E, u);
    DivisionPolynomials<PolyQ> dp(Ep);
    const PolyQt& psi = dp.psi_tilde(n);
    const long d = psi.degree();
    long psi_t = 0;
    for (int k = 0; k <= psi.degree(); ++k)
        psi_t = std::max(psi_t, static_cast<long>(std::max(psi.coeff(k).degree(), 0)));
    long curve_t = 0;
    for (const PolyQ* a : {&Ep.a1(), &Ep.a2(), &Ep.a3(), &Ep.a4(), &Ep.a6()})
        curve_t = std::max(curve_t, static_cast<long>(std::max(a->degree(), 0)));
    const long points_needed = 3 * psi_t + d * curve_t + 1;

    std::vector<Rational> points;
    std::vector<PolyQ> values;
    points.reserve(static_cast<std::size_t>(points_needed));
    values.reserve(static_cast<std::size_t>(points_needed));
    for (long k = 0; static_cast<long>(points.size()) < points_needed; ++k) {
        const Rational t0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k / 2 + 1));
        try {
            const CurveQ E0 = specialize_t(E, t0);
            values.push_back(method == CharpolyMethod::Matrix ? charpoly_matrix(E0, u, n)
                                                              : charpoly_resultant(E0, u, n));
            points.push_back(t0);
        } catch (const ArgumentError&) {
            // singular fiber; try the next integer
        }
    }

    const long N = 2 * d;
    std::vector<PolyQ> coeffs;
    coeffs.reserve(static_cast<std::size_t>(N + 1));
    std::vector<Rational> column(points.size());
    for (long i = 0; i <= N; ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) column[j] = values[j].coeff(static_cast<int>(i));
        PolyQ in_t = interpolate(points, column);
        coeffs.push_back(std::move(in_t));
    }
    return PolyQt::from_coeffs(std::move(coeffs));
}

ScalingCheck scaling_experiment(const Rational& A, const Rational& B, long p, long m) {
    if (!is_prime(Integer(p))) throw ArgumentError("scaling_experiment: p must be prime");
    if (m < 0) throw ArgumentError("scaling_experiment: m must be >= 0");
    ScalingCheck out;
    out.A = A;
    out.B = B;
    out.p = p;
    out.m = m;

    Rational lambda(1);
    for (long i = 0; i < m; ++i) lambda *= p;
    const Rational l2 = lambda * lambda, l3 = l2 * lambda, l4 = l2 * l2, l6 = l4 * l2;

    const CurveQ E(Rational(0), Rational(0), Rational(0), A, B);
    const LinearFunction u{l3, l2, Rational(0)};
    const PolyQ chi = charpoly_resultant(E, u, 3);
    out.routes_agree = (chi == charpoly_matrix(E, u, 3));

    // Same functional through the isomorphism (x, y) -> (lambda^2 x, lambda^3 y):
    // u equals x'' + y'' on y^2 = x^3 + lambda^4 A x + lambda^6 B.
    const CurveQ Escaled(Rational(0), Rational(0), Rational(0), l4 * A, l6 * B);
    const PolyQ chi2 = charpoly_resultant(Escaled, LinearFunction{Rational(1), Rational(1), Rational(0)}, 3);
    out.scaled_model_agrees = (chi == chi2);

    const Integer P(p);
    out.bounds_hold = true;
    for (int i = 0; i <= 8; ++i) {
        long bound = 2 * m * (8 - i);
        long v = valuation_p(chi.coeff(i), P);
        out.valuations.push_back(v);
        out.bounds.push_back(bound);
        if (v < bound) out.bounds_hold = false;
    }
    out.pass = out.routes_agree && out.scaled_model_agrees && out.bounds_hold;
    out.chi = chi;
    return out;
}

double numeric_root_check(const CurveQ& E, const LinearFunction& u, long n, const PolyQ& chi,
                          const NumericOptions& opts) {
    if (n < 2) throw ArgumentError("numeric_root_check: n must be >= 2");
    using cd = std::complex<double>;
    std::vector<cd> chi_c;
    chi_c.reserve(static_cast<std::size_t>(chi.degree() + 1));
    for (int k = 0; k <= chi.degree(); ++k) chi_c.emplace_back(to_double(chi.coeff(k)), 0.0);

    DivisionPolynomials<Rational> dp(E);
    const PolyQ* xpoly;
    PolyQ two_torsion;
    if (n == 2) {
        two_torsion = E.two_torsion_quadric();
        xpoly = &two_torsion;
    } else {
        xpoly = &dp.psi_tilde(n);
    }

    const double a1 = to_double(E.a1()), a3 = to_double(E.a3());
    const double aa = to_double(u.a), bb = to_double(u.b), cc = to_double(u.c);
    double worst = 0.0;
    for (const cd& x0 : numeric_roots(*xpoly, opts)) {
        // w_E(x0, Y) = Y^2 + (a1 x0 + a3) Y - (x0^3 + a2 x0^2 + a4 x0 + a6)
        cd q = cd(a1) * x0 + cd(a3);
        cd s = evaluate_with<cd>(E.rhs_x(), x0, [](const Rational& r) { return cd(to_double(r)); });
        cd disc = q * q + cd(4.0) * s;
        cd root = std::sqrt(disc);
        for (int sign = 0; sign < 2; ++sign) {
            cd y = (-q + (sign ? -root : root)) / cd(2.0);
            if (n == 2 && sign == 1) continue;  // 2-torsion: the two y values coincide
            cd z = cd(aa) * y + cd(bb) * x0 + cd(cc);
            worst = std::max(worst, relative_residual(chi_c, z));
        }
    }
    return worst;
}

}  // namespace tg
