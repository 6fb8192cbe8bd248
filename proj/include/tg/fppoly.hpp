#pragma once

// Polynomials over F_p for machine-word primes.  Separate from Poly<T> on purpose:
// modular arithmetic wants value-plus-modulus state and uint64 coefficient storage,
// not the generic exact-ring protocol.

#include <cstdint>
#include <optional>
#include <vector>

#include "tg/poly.hpp"

namespace tg {

class FpPoly {
  public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> ascending);

    std::uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t coeff(int k) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;

    FpPoly monic() const;
    FpPoly derivative() const;

    static std::pair<FpPoly, FpPoly> divrem(const FpPoly& f, const FpPoly& g);
    static FpPoly gcd(FpPoly a, FpPoly b);  // monic gcd

    // x^(p^iterations) mod f, by repeated p-th powering via square-and-multiply.
    static FpPoly frobenius_power_x(const FpPoly& f, int iterations);

    static FpPoly x_power_mod(const FpPoly& f, const Integer& e);  // x^e mod f

  private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
    void trim();
};

// Reduction of f in Q[x] mod p followed by distinct-degree factorization.
// Returns nullopt (the "skip this prime" signal) when p divides a denominator or
// the leading coefficient, or when the reduction is not squarefree.
// Otherwise: the multiset (sorted ascending) of irreducible factor degrees.
std::optional<std::vector<int>> mod_p_degree_pattern(const PolyQ& f, long p);

}  // namespace tg
