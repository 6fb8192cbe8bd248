#pragma once

// Weierstrass curves  y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6  over an
// exact base ring S (Rational, or PolyQ for one-parameter families).  The model
// is always required to be nonsingular.

#include <array>
#include <cstdint>
#include <optional>

#include "tg/poly.hpp"

namespace tg {

// Lift of a rational constant into the base ring.
template <class S>
S scalar_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<S, Rational>) {
        return r;
    } else {
        return S(r);
    }
}

template <class S>
struct BInvariants {
    S b2, b4, b6, b8;
};

template <class S>
class WeierstrassCurve {
  public:
    WeierstrassCurve(S a1, S a2, S a3, S a4, S a6)
        : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
        if (discriminant() == S(0)) throw ArgumentError("singular Weierstrass model");
    }

    const S& a1() const { return a1_; }
    const S& a2() const { return a2_; }
    const S& a3() const { return a3_; }
    const S& a4() const { return a4_; }
    const S& a6() const { return a6_; }

    bool operator==(const WeierstrassCurve& o) const {
        return a1_ == o.a1_ && a2_ == o.a2_ && a3_ == o.a3_ && a4_ == o.a4_ && a6_ == o.a6_;
    }

    BInvariants<S> b_invariants() const {
        S b2 = a1_ * a1_ + S(4) * a2_;
        S b4 = S(2) * a4_ + a1_ * a3_;
        S b6 = a3_ * a3_ + S(4) * a6_;
        S b8 = a1_ * a1_ * a6_ + S(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
        return {b2, b4, b6, b8};
    }

    S discriminant() const {
        auto [b2, b4, b6, b8] = b_invariants();
        return S(0) - b2 * b2 * b8 - S(8) * b4 * b4 * b4 - S(27) * b6 * b6 + S(9) * b2 * b4 * b6;
    }

    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6; the square of the
    // 2-division polynomial as a polynomial in x.
    Poly<S> two_torsion_quadric() const {
        auto [b2, b4, b6, b8] = b_invariants();
        (void)b8;
        return Poly<S>::from_coeffs({b6, S(2) * b4, b2, S(4)});
    }

    // y^2 = rhs_x() + rhs_y() * y on the curve.
    Poly<S> rhs_x() const { return Poly<S>::from_coeffs({a6_, a4_, a2_, S(1)}); }
    Poly<S> rhs_y() const { return Poly<S>::from_coeffs({S(0) - a3_, S(0) - a1_}); }

    // w_E as a cubic in X whose coefficients are polynomials in Y:
    //   -X^3 - a2 X^2 + (a1 Y - a4) X + (Y^2 + a3 Y - a6).
    Poly<Poly<S>> w_as_poly_in_x() const {
        using PS = Poly<S>;
        PS c0 = PS::from_coeffs({S(0) - a6_, a3_, S(1)});
        PS c1 = PS::from_coeffs({S(0) - a4_, a1_});
        PS c2 = PS(S(0) - a2_);
        PS c3 = PS(S(-1));
        return Poly<PS>::from_coeffs({c0, c1, c2, c3});
    }

  private:
    S a1_, a2_, a3_, a4_, a6_;
};

using CurveQ = WeierstrassCurve<Rational>;
using CurveQt = WeierstrassCurve<PolyQ>;

// u = a*y + b*x + c with rational constant coefficients.
struct LinearFunction {
    Rational a, b, c;
    bool operator==(const LinearFunction& o) const { return a == o.a && b == o.b && c == o.c; }
};

// u is admissible for E iff a != 0 and 2b - a1 a != 0 (u must separate P from -P
// away from 2-torsion; the second condition is a1' != 0 on the sheared model).
template <class S>
bool is_admissible(const WeierstrassCurve<S>& E, const LinearFunction& u) {
    if (u.a == 0) return false;
    S lhs = scalar_from_rational<S>(2 * u.b) - E.a1() * scalar_from_rational<S>(u.a);
    return !(lhs == S(0));
}

template <class S>
void require_admissible(const WeierstrassCurve<S>& E, const LinearFunction& u) {
    if (!is_admissible(E, u))
        throw InadmissibleUError("u = " + rational_to_string(u.a) + "*y + " + rational_to_string(u.b) +
                                 "*x + " + rational_to_string(u.c) +
                                 " is inadmissible (needs a != 0 and 2b - a1*a != 0)");
}

// The y-shear (x, y) -> (x, y + (b/a) x + c/a), an isomorphism of Weierstrass
// models under which the new y-coordinate equals u/a.  b-invariants and the
// discriminant are preserved exactly.
template <class S>
WeierstrassCurve<S> transform_for_u(const WeierstrassCurve<S>& E, const LinearFunction& u) {
    require_admissible(E, u);
    S beta = scalar_from_rational<S>(u.b / u.a);
    S gamma = scalar_from_rational<S>(u.c / u.a);
    return WeierstrassCurve<S>(E.a1() - S(2) * beta,
                               E.a2() + E.a1() * beta - beta * beta,
                               E.a3() - S(2) * gamma,
                               E.a4() + E.a1() * gamma + E.a3() * beta - S(2) * beta * gamma,
                               E.a6() + E.a3() * gamma - gamma * gamma);
}

// ---------------------------------------------------------------------------
// Reduction mod p and Frobenius traces (rational base only)
// ---------------------------------------------------------------------------

struct FpCurve {
    long p;
    std::array<std::uint64_t, 5> a;  // a1, a2, a3, a4, a6 mod p
    // Discriminant mod p; 0 means bad reduction.
    std::uint64_t discriminant() const;
};

// nullopt when p divides some denominator of the model (reduction undefined).
std::optional<FpCurve> reduce_mod_p(const CurveQ& E, long p);

// Frobenius trace a_p = p + 1 - #E(F_p); requires good reduction at p (throws
// ArgumentError otherwise).  |a_p| <= 2 sqrt(p) is asserted on the way out.
long ap(const CurveQ& E, long p);
long ap(const FpCurve& E);

}  // namespace tg
