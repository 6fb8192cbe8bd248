#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "tg/errors.hpp"
#include "tg/numeric.hpp"
#include "tg/poly.hpp"

using namespace tg;

namespace {

PolyQ qpoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return PolyQ::from_coeffs(std::move(v));
}

double dist_to(const std::vector<std::complex<double>>& roots, std::complex<double> z) {
    double best = 1e300;
    for (const auto& r : roots) best = std::min(best, std::abs(r - z));
    return best;
}

}  // namespace

TEST_SUITE("numeric") {

TEST_CASE("real roots of a cubic") {
    PolyQ f = qpoly({-1, 1}) * qpoly({-2, 1}) * qpoly({-3, 1});
    auto roots = numeric_roots(f);
    REQUIRE(roots.size() == 3);
    for (double want : {1.0, 2.0, 3.0}) CHECK(dist_to(roots, {want, 0.0}) < 1e-9);
}

TEST_CASE("complex roots on the unit circle") {
    PolyQ f = qpoly({1, 0, 0, 0, 1});  // x^4 + 1
    auto roots = numeric_roots(f);
    REQUIRE(roots.size() == 4);
    for (const auto& r : roots) CHECK(std::abs(std::abs(r) - 1.0) < 1e-10);
    CHECK(dist_to(roots, std::polar(1.0, M_PI / 4)) < 1e-9);
}

TEST_CASE("roots at the origin are deflated exactly") {
    PolyQ f = qpoly({0, 0, 0, 1}) * qpoly({-5, 1});  // x^3 (x - 5)
    auto roots = numeric_roots(f);
    REQUIRE(roots.size() == 4);
    int zeros = 0;
    for (const auto& r : roots)
        if (std::abs(r) == 0.0) ++zeros;
    CHECK(zeros == 3);
    CHECK(dist_to(roots, {5.0, 0.0}) < 1e-9);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(numeric_roots(PolyQ(0)), ArgumentError);
    CHECK(numeric_roots(PolyQ(7)).empty());
    auto lin = numeric_roots(qpoly({-8, 2}));
    REQUIRE(lin.size() == 1);
    CHECK(std::abs(lin[0] - std::complex<double>(4.0, 0.0)) < 1e-12);
}

TEST_CASE("clustered roots still verify within the residual tolerance") {
    // (x - 1)^4 is ill-conditioned; residual verification must still accept
    PolyQ f = qpoly({-1, 1});
    f = f * f * f * f;
    auto roots = numeric_roots(f);
    REQUIRE(roots.size() == 4);
    for (const auto& r : roots) CHECK(std::abs(r - std::complex<double>(1.0, 0.0)) < 1e-2);
}

TEST_CASE("relative residual is tiny at a true root and large away from one") {
    std::vector<std::complex<double>> coeffs{{-2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};  // x^2 - 2
    CHECK(relative_residual(coeffs, {std::sqrt(2.0), 0.0}) < 1e-14);
    CHECK(relative_residual(coeffs, {10.0, 0.0}) > 1e-2);
}

}  // TEST_SUITE
