#pragma once

// Division polynomials psi_n of a Weierstrass curve and their primitive parts
// psi~_n (the factor vanishing exactly on points of exact order n).
//
// Internal representation: psi_n = f_n            for odd n,
//                          psi_n = f_n * psi_2    for even n,
// where f_n is univariate in x and psi_2 = 2y + a1 x + a3.  The f_n satisfy
// recurrences in which psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 (univariate) appears
// with the parity-dependent placement below; this avoids y entirely.

#include <map>

#include "tg/curve.hpp"

namespace tg {

// Number of x-coordinates of points of exact order n (n >= 3): half of the
// Jordan totient J_2(n) = n^2 prod_{p | n} (1 - 1/p^2).
long primitive_degree(long n);

std::vector<long> divisors(long n);

// True iff n = prime^k (k >= 1); the prime is stored through prime_out if given.
bool is_prime_power(long n, long* prime_out = nullptr);

// Value p(x) + q(x)*y.
template <class S>
struct XYPoly {
    Poly<S> x_part;
    Poly<S> y_part;
};

template <class S>
class DivisionPolynomials {
  public:
    explicit DivisionPolynomials(WeierstrassCurve<S> E) : E_(std::move(E)), quadric_(E_.two_torsion_quadric()) {
        auto [b2, b4, b6, b8] = E_.b_invariants();
        f_[0] = Poly<S>();
        f_[1] = Poly<S>(1);
        f_[2] = Poly<S>(1);
        f_[3] = Poly<S>::from_coeffs({b8, S(3) * b6, S(3) * b4, b2, S(3)});
        f_[4] = Poly<S>::from_coeffs({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, S(10) * b8, S(10) * b6,
                                      S(5) * b4, b2, S(2)});
    }

    const WeierstrassCurve<S>& curve() const { return E_; }

    // Univariate cofactor: f_n = psi_n (n odd), psi_n / psi_2 (n even).
    const Poly<S>& f(long n) const {
        if (n < 0) throw ArgumentError("division polynomial index must be nonnegative");
        auto it = f_.find(n);
        if (it != f_.end()) return it->second;
        const long m = n / 2;
        Poly<S> value;
        if (n % 2 == 1) {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3; with psi_2
            // split off, psi_2^2 multiplies whichever side holds the even indices.
            Poly<S> left = f(m + 2) * f(m) * f(m) * f(m);
            Poly<S> right = f(m - 1) * f(m + 1) * f(m + 1) * f(m + 1);
            const Poly<S> q2 = quadric_ * quadric_;
            value = (m % 2 == 0) ? left * q2 - right : left - right * q2;
        } else {
            // psi_{2m} psi_2 = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2);
            // the psi_2 factors cancel uniformly in the f representation.
            value = f(m) * (f(m + 2) * f(m - 1) * f(m - 1) - f(m - 2) * f(m + 1) * f(m + 1));
        }
        return f_.emplace(n, std::move(value)).first->second;
    }

    // psi_n as p(x) + q(x) y.
    XYPoly<S> psi(long n) const {
        if (n < 1) throw ArgumentError("psi: n must be >= 1");
        const Poly<S>& fn = f(n);
        if (n % 2 == 1) return {fn, Poly<S>()};
        Poly<S> a1x_a3 = Poly<S>::from_coeffs({E_.a3(), E_.a1()});
        return {fn * a1x_a3, fn * Poly<S>(2)};
    }

    // Primitive part, vanishing exactly on x-coordinates of exact-order-n points:
    // psi~_n = f_n / prod { psi~_m : m | n, 3 <= m < n }.  Univariate for n >= 3.
    const Poly<S>& psi_tilde(long n) const {
        if (n < 3) throw ArgumentError("psi_tilde: n must be >= 3");
        auto it = tilde_.find(n);
        if (it != tilde_.end()) return it->second;
        Poly<S> value = f(n);
        for (long m : divisors(n)) {
            if (m >= 3 && m < n) value = exact_divide(value, psi_tilde(m));
        }
        return tilde_.emplace(n, std::move(value)).first->second;
    }

  private:
    WeierstrassCurve<S> E_;
    Poly<S> quadric_;  // psi_2^2 as a polynomial in x
    mutable std::map<long, Poly<S>> f_;
    mutable std::map<long, Poly<S>> tilde_;
};

}  // namespace tg
