#include "doctest.h"

#include <random>

#include "tg/curve.hpp"
#include "tg/errors.hpp"
#include "tg/json_io.hpp"

using namespace tg;

namespace {

CurveQ qcurve(long a1, long a2, long a3, long a4, long a6) {
    return CurveQ(Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6));
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("b-invariants on reference models") {
    CurveQ e1 = qcurve(0, 0, 1, 0, 0);  // y^2 + y = x^3
    auto b1 = e1.b_invariants();
    CHECK(b1.b2 == 0);
    CHECK(b1.b4 == 0);
    CHECK(b1.b6 == 1);
    CHECK(b1.b8 == 0);
    CHECK(e1.discriminant() == Rational(-27));

    CurveQ e2 = qcurve(0, 0, 0, -1, 0);  // y^2 = x^3 - x
    auto b2 = e2.b_invariants();
    CHECK(b2.b2 == 0);
    CHECK(b2.b4 == -2);
    CHECK(b2.b6 == 0);
    CHECK(b2.b8 == -1);
    CHECK(e2.discriminant() == Rational(64));

    // y^2 + xy = x^3 + t over Q[t]: b8 = t
    CurveQt et(PolyQ(1), PolyQ(0), PolyQ(0), PolyQ(0), PolyQ::x());
    auto bt = et.b_invariants();
    CHECK(bt.b2 == PolyQ(1));
    CHECK(bt.b4 == PolyQ(0));
    CHECK(bt.b6 == PolyQ::monomial(Rational(4), 1));
    CHECK(bt.b8 == PolyQ::x());
    // disc = -t(1 + 432 t)
    PolyQ want = PolyQ(0) - (PolyQ::x() * (PolyQ(1) + PolyQ::monomial(Rational(432), 1)));
    CHECK(et.discriminant() == want);
}

TEST_CASE("4 b8 = b2 b6 - b4^2 on random integral models") {
    std::mt19937 rng(803701u);
    std::uniform_int_distribution<long> pick(-5, 5);
    int checked = 0;
    while (checked < 20) {
        long a1 = pick(rng), a2 = pick(rng), a3 = pick(rng), a4 = pick(rng), a6 = pick(rng);
        try {
            CurveQ E = qcurve(a1, a2, a3, a4, a6);
            auto b = E.b_invariants();
            CHECK(Rational(4) * b.b8 == b.b2 * b.b6 - b.b4 * b.b4);
            ++checked;
        } catch (const ArgumentError&) {
            // singular pick; try again
        }
    }
}

TEST_CASE("singular models are rejected") {
    CHECK_THROWS_AS(qcurve(0, 0, 0, 0, 0), ArgumentError);
    CHECK_THROWS_AS(qcurve(0, 0, 0, -3, 2), ArgumentError);  // disc(x^3 - 3x + 2) = 0
}

TEST_CASE("admissibility of u = a y + b x + c") {
    CurveQ a1zero = qcurve(0, 0, 1, 0, 0);
    CurveQ a1one = qcurve(1, 0, 0, 0, 1);
    CurveQ a1two = qcurve(2, 0, 0, 0, 1);
    const LinearFunction y{Rational(1), Rational(0), Rational(0)};
    const LinearFunction xy{Rational(1), Rational(1), Rational(0)};
    const LinearFunction xy1{Rational(1), Rational(1), Rational(1)};
    const LinearFunction x_only{Rational(0), Rational(1), Rational(0)};

    CHECK_FALSE(is_admissible(a1zero, y));  // u = y needs a1 != 0
    CHECK(is_admissible(a1zero, xy));
    CHECK(is_admissible(a1zero, xy1));
    CHECK(is_admissible(a1one, y));
    CHECK(is_admissible(a1one, xy));
    CHECK(is_admissible(a1two, y));
    CHECK_FALSE(is_admissible(a1two, xy));  // 2b - a1 a = 0
    CHECK_FALSE(is_admissible(a1two, xy1));
    CHECK_FALSE(is_admissible(a1one, x_only));  // a = 0 never admissible
    CHECK_THROWS_AS(require_admissible(a1two, xy), InadmissibleUError);
}

TEST_CASE("the shear for u preserves b-invariants and the discriminant") {
    CurveQ E = qcurve(1, -2, 3, 0, 1);
    const LinearFunction u{Rational(2), Rational(3), Rational(-1)};
    REQUIRE(is_admissible(E, u));
    CurveQ Ep = transform_for_u(E, u);
    auto b = E.b_invariants();
    auto bp = Ep.b_invariants();
    CHECK(b.b2 == bp.b2);
    CHECK(b.b4 == bp.b4);
    CHECK(b.b6 == bp.b6);
    CHECK(b.b8 == bp.b8);
    CHECK(E.discriminant() == Ep.discriminant());
    // sheared model has a1' = (2b - a1 a)/a != 0
    CHECK(Ep.a1() != 0);
    // u = y on E' corresponds to u/a: identity shear when u = y already
    const LinearFunction uy{Rational(1), Rational(0), Rational(0)};
    CHECK(transform_for_u(E, uy) == E);
}

TEST_CASE("reduction mod p and trace of Frobenius") {
    CurveQ e6 = qcurve(0, 0, 0, 0, 1);  // y^2 = x^3 + 1
    CHECK(ap(e6, 5) == 0);              // supersingular at 5
    CurveQ e1728 = qcurve(0, 0, 0, -1, 0);  // y^2 = x^3 - x
    CHECK(ap(e1728, 3) == 0);
    CHECK(ap(e1728, 5) == -2);  // #E(F_5) = 8
    CurveQ e11 = qcurve(0, -1, 1, -10, -20);
    CHECK(ap(e11, 2) == -2);
    CHECK(ap(e11, 3) == -1);
    CHECK(ap(e11, 7) == -2);
    CHECK_THROWS_AS(ap(e11, 11), ArgumentError);  // bad reduction

    CurveQ eden(Rational(1), Rational(0), Rational(0), Rational(0), rational_from_string("-4/13"));
    CHECK_FALSE(reduce_mod_p(eden, 13).has_value());
    CHECK(reduce_mod_p(eden, 7).has_value());

    // Hasse bound on a few primes
    for (long p : {5L, 7L, 13L, 101L}) {
        long a = ap(e11, p);
        CHECK(static_cast<double>(a) * a <= 4.0 * p);
    }
}

TEST_CASE("curve parsing round trip") {
    auto c = parse_curve("1,0,0,0,-4/13");
    REQUIRE(std::holds_alternative<CurveQ>(c));
    CHECK(curve_to_string(std::get<CurveQ>(c)) == "1,0,0,0,-4/13");
    auto ct = parse_curve("1,0,0,0,t");
    REQUIRE(std::holds_alternative<CurveQt>(ct));
}

}  // TEST_SUITE
