#include "doctest.h"

#include "tg/curve.hpp"
#include "tg/errors.hpp"
#include "tg/torsionchar.hpp"

using namespace tg;

namespace {

CurveQ qcurve(long a1, long a2, long a3, long a4, long a6) {
    return CurveQ(Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6));
}

const LinearFunction kY{Rational(1), Rational(0), Rational(0)};
const LinearFunction kXY{Rational(1), Rational(1), Rational(0)};
const LinearFunction kX{Rational(0), Rational(1), Rational(0)};

}  // namespace

TEST_SUITE("torsionchar") {

TEST_CASE("the two routes agree bitwise over Q") {
    struct Combo {
        CurveQ E;
        LinearFunction u;
        long n;
    };
    const Combo combos[] = {
        {qcurve(1, 0, 0, 0, 1), kY, 3},
        {qcurve(1, 0, 0, 0, 1), kXY, 4},
        {qcurve(0, 0, 1, 0, 0), kXY, 3},
        {qcurve(0, -1, 1, -10, -20), kXY, 5},
        {qcurve(1, 1, 1, 0, 0), LinearFunction{Rational(1), Rational(1), Rational(1)}, 3},
        {qcurve(2, 0, 0, 0, 1), kY, 6},
    };
    for (const auto& c : combos) {
        PolyQ a = charpoly_matrix(c.E, c.u, c.n);
        PolyQ b = charpoly_resultant(c.E, c.u, c.n);
        CHECK(a == b);
        CHECK(a.degree() == 2 * primitive_degree(c.n));
        CHECK(a.lc() == Rational(1));
    }
}

TEST_CASE("degree-8 golden value, the published Borel example") {
    CurveQ E(Rational(1), Rational(0), Rational(0), Rational(0), rational_from_string("-4/13"));
    PolyQ chi = charpoly(E, kY, 3, CharpolyMethod::Resultant);
    CHECK(chi.coeff(8) == Rational(1));
    CHECK(chi.coeff(6) == rational_from_string("-851/351"));
    CHECK(chi.coeff(0) == rational_from_string("-6912/28561"));
}

TEST_CASE("u and its reflection u* give the same characteristic polynomial") {
    // u* = -a y + (b - a a1) x + (c - a a3) represents u composed with -id
    CurveQ E = qcurve(1, -1, 2, 0, 3);
    for (long n : {3L, 4L, 5L}) {
        const LinearFunction u{Rational(1), Rational(2), Rational(-1)};
        const LinearFunction ustar{-u.a, u.b - u.a * E.a1(), u.c - u.a * E.a3()};
        REQUIRE(is_admissible(E, u));
        REQUIRE(is_admissible(E, ustar));
        CHECK(charpoly_resultant(E, u, n) == charpoly_resultant(E, ustar, n));
        if (n == 3) CHECK(charpoly_matrix(E, u, n) == charpoly_matrix(E, ustar, n));
    }
}

TEST_CASE("n = 2 characteristic polynomial is the monic two-torsion cubic") {
    CurveQ E = qcurve(0, 0, 0, -1, 0);  // y^2 = x^3 - x
    PolyQ chi = charpoly(E, kX, 2, CharpolyMethod::Matrix);
    CHECK(chi.degree() == 3);
    CHECK(chi.lc() == Rational(1));
    // roots are exactly the 2-torsion x-coordinates 0, 1, -1
    CHECK(chi.evaluate(Rational(0)) == 0);
    CHECK(chi.evaluate(Rational(1)) == 0);
    CHECK(chi.evaluate(Rational(-1)) == 0);
    CHECK_THROWS_AS(charpoly(E, kXY, 2, CharpolyMethod::Matrix), ArgumentError);
}

TEST_CASE("inadmissible u is rejected") {
    CurveQ a1zero = qcurve(0, 0, 1, 0, 0);
    CHECK_THROWS_AS(charpoly_matrix(a1zero, kY, 3), InadmissibleUError);
    CHECK_THROWS_AS(charpoly_resultant(a1zero, kY, 3), InadmissibleUError);
    CurveQ a1two = qcurve(2, 0, 0, 0, 1);
    CHECK_THROWS_AS(charpoly_resultant(a1two, kXY, 3), InadmissibleUError);
}

TEST_CASE("interpolated family result matches the symbolic routes and specializes") {
    CurveQt E(PolyQ(1), PolyQ(0), PolyQ(0), PolyQ(0), PolyQ::x());
    PolyQt via_interp_m = charpoly(E, kY, 3, CharpolyMethod::Matrix);
    PolyQt via_interp_r = charpoly(E, kY, 3, CharpolyMethod::Resultant);
    CHECK(via_interp_m == via_interp_r);
    // symbolic template route, still exact over Q[t]
    PolyQt symbolic = charpoly_matrix(E, kY, 3);
    CHECK(symbolic == via_interp_m);
    PolyQt symbolic_r = charpoly_resultant(E, kY, 3);
    CHECK(symbolic_r == via_interp_m);
    // specialization far outside the interpolation nodes
    const Rational t0(100);
    CurveQ E0 = specialize_t(E, t0);
    CHECK(specialize_t(via_interp_m, t0) == charpoly_resultant(E0, kY, 3));
}

TEST_CASE("valuation profile") {
    CurveQ E(Rational(1), Rational(0), Rational(0), Rational(0), rational_from_string("-4/13"));
    PolyQ chi = charpoly_resultant(E, kY, 3);
    auto p3 = valuation_profile(E, kY, 3, chi, 3);
    CHECK(p3.applicable);
    CHECK(p3.bound == -3);
    CHECK(p3.pass);
    CHECK(p3.min_valuation >= -3);
    auto p13 = valuation_profile(E, kY, 3, chi, 13);
    CHECK_FALSE(p13.applicable);  // the model is not 13-integral
    auto p5 = valuation_profile(E, kY, 3, chi, 5);
    CHECK(p5.applicable);
    CHECK(p5.bound == 0);
    // non-normalized u is out of scope
    CurveQ E2 = qcurve(1, 0, 0, 0, 1);
    const LinearFunction u2{Rational(2), Rational(0), Rational(0)};
    PolyQ chi2 = charpoly_resultant(E2, u2, 3);
    CHECK_FALSE(valuation_profile(E2, u2, 3, chi2, 3).applicable);
    CHECK_THROWS_AS(valuation_profile(E2, kY, 3, chi2, 4), ArgumentError);
}

TEST_CASE("numeric root oracle accepts the exact polynomial and rejects a corruption") {
    CurveQ E = qcurve(1, 0, 0, 0, 1);
    PolyQ chi = charpoly_resultant(E, kY, 3);
    CHECK(numeric_root_check(E, kY, 3, chi) < 1e-8);
    PolyQ corrupted = chi + PolyQ(Rational(1));
    CHECK(numeric_root_check(E, kY, 3, corrupted) > 1e-4);
}

TEST_CASE("scaling experiment meets its valuation bounds") {
    ScalingCheck r = scaling_experiment(Rational(1), Rational(1), 5, 1);
    CHECK(r.pass);
    CHECK(r.routes_agree);
    CHECK(r.scaled_model_agrees);
    REQUIRE(r.valuations.size() == 9);
    for (int i = 0; i <= 8; ++i) {
        CHECK(r.bounds[static_cast<size_t>(i)] == 2 * (8 - i));
        CHECK(r.valuations[static_cast<size_t>(i)] >= r.bounds[static_cast<size_t>(i)]);
    }
    CHECK(r.chi.coeff(8) == Rational(1));
    // m = 0 degenerates to the plain x+y functional: bounds all zero
    ScalingCheck r0 = scaling_experiment(Rational(1), Rational(1), 5, 0);
    CHECK(r0.pass);
    CHECK_THROWS_AS(scaling_experiment(Rational(1), Rational(1), 6, 1), ArgumentError);
}

TEST_CASE("specialize_t") {
    PolyQt f = PolyQt::from_coeffs({PolyQ::x(), PolyQ(1) + PolyQ::x()});  // t + (1+t) X
    PolyQ at2 = specialize_t(f, Rational(2));
    CHECK(at2 == PolyQ::from_coeffs({Rational(2), Rational(3)}));
    CurveQt E(PolyQ(1), PolyQ(0), PolyQ(0), PolyQ(0), PolyQ::x());
    CHECK(specialize_t(E, Rational(1)) == qcurve(1, 0, 0, 0, 1));
    CHECK_THROWS_AS(specialize_t(E, Rational(0)), ArgumentError);  // singular fiber
}

}  // TEST_SUITE
