#include "doctest.h"

#include "tg/errors.hpp"
#include "tg/poly.hpp"
#include "tg/quadext.hpp"

using namespace tg;

namespace {

PolyQ qpoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return PolyQ::from_coeffs(std::move(v));
}

}  // namespace

TEST_SUITE("quartic") {

TEST_CASE("factorization shapes") {
    auto shape_of = [](const PolyQ& f) { return factor_quartic(f).shape; };
    CHECK(shape_of(qpoly({-1, 1}) * qpoly({-2, 1}) * qpoly({-3, 1}) * qpoly({-4, 1})) ==
          QuarticShape::Linears);
    CHECK(shape_of(qpoly({-1, 1}) * qpoly({1, 1}) * qpoly({-2, 0, 1})) ==
          QuarticShape::TwoLinearsQuadratic);
    CHECK(shape_of(qpoly({-2, 0, 1}) * qpoly({-3, 0, 1})) == QuarticShape::TwoQuadratics);
    CHECK(shape_of(qpoly({-1, 1}) * qpoly({-2, 0, 0, 1})) == QuarticShape::LinearCubic);
    CHECK(shape_of(qpoly({1, 1, 0, 0, 1})) == QuarticShape::Irreducible);
    // x^4 + 1 factors over no proper subfield of its splitting field, stays irreducible
    CHECK(shape_of(qpoly({1, 0, 0, 0, 1})) == QuarticShape::Irreducible);
}

TEST_CASE("factorization output is monic, sorted, with the unit split off") {
    PolyQ f = (qpoly({-2, 2})) * (qpoly({1, 0, 1}));  // 2(x-1)(x^2+1)
    PolyQ g = f * qpoly({3, 1});                      // times (x+3): quartic
    auto fac = factor_quartic(g);
    CHECK(fac.unit == Rational(2));
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0].degree() == 1);
    CHECK(fac.factors[1].degree() == 1);
    CHECK(fac.factors[2].degree() == 2);
    CHECK(fac.factors[0].lc() == Rational(1));
    PolyQ rebuilt(fac.unit);
    for (const auto& p : fac.factors) rebuilt = rebuilt * p;
    CHECK(rebuilt == g);
}

TEST_CASE("factor_quartic input validation") {
    CHECK_THROWS_AS(factor_quartic(qpoly({1, 1})), ArgumentError);
    CHECK_THROWS_AS(factor_quartic(qpoly({0, 0, 1}) * qpoly({0, 0, 1})), ArgumentError);  // x^4
    CHECK_THROWS_AS(factor_quartic(qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({1, 0, 1})),
                    ArgumentError);  // repeated root
}

TEST_CASE("quartic Galois groups") {
    CHECK(quartic_galois(qpoly({1, 1, 0, 0, 1})) == QuarticGroup::S4);    // x^4+x+1
    CHECK(quartic_galois(qpoly({12, 8, 0, 0, 1})) == QuarticGroup::A4);   // x^4+8x+12, square disc
    CHECK(quartic_galois(qpoly({2, 0, 4, 0, 1})) == QuarticGroup::C4);    // x^4+4x^2+2
    CHECK(quartic_galois(qpoly({-2, 0, 0, 0, 1})) == QuarticGroup::D4);   // x^4-2
    CHECK(quartic_galois(qpoly({1, 0, 0, 0, 1})) == QuarticGroup::V4);    // x^4+1
    CHECK(quartic_galois(qpoly({1, 1, 1, 1, 1})) == QuarticGroup::C4);    // 5th cyclotomic
    CHECK(quartic_galois(qpoly({-1, -1, 0, 0, 1})) == QuarticGroup::S4);  // x^4-x-1
    CHECK_THROWS_AS(quartic_galois(qpoly({-2, 0, 1}) * qpoly({-3, 0, 1})), ArgumentError);
}

TEST_CASE("quadratic extension arithmetic") {
    // Q(sqrt(5)): (1 + sqrt5)(2 - sqrt5) = 2 - sqrt5 + 2 sqrt5 - 5 = -3 + sqrt5
    QuadExt a = quadext_rational(Rational(1), Rational(5)) + QuadExt(Rational(0), Rational(1), Rational(5));
    QuadExt b(Rational(2), Rational(-1), Rational(5));
    QuadExt prod = a * b;
    CHECK(prod == QuadExt(Rational(-3), Rational(1), Rational(5)));
    CHECK((prod / b) == a);
    CHECK(a.norm() == Rational(1 - 5));
}

TEST_CASE("square roots inside a quadratic field") {
    // sqrt(3 + 2 sqrt2) = 1 + sqrt2 in Q(sqrt2)
    QuadExt v(Rational(3), Rational(2), Rational(2));
    auto r = v.sqrt();
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == v);
    // 2 is a square in Q(sqrt2): (sqrt2)^2
    auto two = quadext_rational(Rational(2), Rational(2)).sqrt();
    REQUIRE(two.has_value());
    CHECK((*two) * (*two) == quadext_rational(Rational(2), Rational(2)));
    // 3 is not a square in Q(sqrt2)
    CHECK_FALSE(quadext_rational(Rational(3), Rational(2)).sqrt().has_value());
    // 1 + sqrt2 has norm -1, not a rational square
    CHECK_FALSE(QuadExt(Rational(1), Rational(1), Rational(2)).sqrt().has_value());
}

}  // TEST_SUITE
