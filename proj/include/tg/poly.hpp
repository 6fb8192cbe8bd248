#pragma once

// Dense univariate polynomials over an exact commutative ring T.
//
// T must provide: construction from long, +, -, *, ==, and an exact operator/
// that divides without remainder or throws.  Rational satisfies this natively;
// Poly<T> itself satisfies it (operator/ below is exact division), so nested
// instantiations like Poly<Poly<Rational>> work and are used for resultants of
// bivariate inputs.
//
// Coefficients are stored ascending (c[k] multiplies x^k) and trailing zeros are
// always trimmed, so equality of the coefficient vectors is equality of values.
// The zero polynomial has an empty vector and degree() == -1.

#include <string>
#include <utility>
#include <vector>

#include "tg/errors.hpp"
#include "tg/rational.hpp"

namespace tg {

template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(long constant) { c_.push_back(T(constant)); trim(); }
    explicit Poly(T constant) { c_.push_back(std::move(constant)); trim(); }

    static Poly from_coeffs(std::vector<T> ascending) {
        Poly f;
        f.c_ = std::move(ascending);
        f.trim();
        return f;
    }

    static Poly monomial(T coeff, int power) {
        Poly f;
        f.c_.assign(static_cast<std::size_t>(power) + 1, T(0));
        f.c_.back() = std::move(coeff);
        f.trim();
        return f;
    }

    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient of x^k, defined (as zero) beyond the degree.
    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const T& lc() const { return c_.back(); }  // undefined on the zero polynomial

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (T& v : r.c_) v = T(0) - v;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> prod(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                prod[i + j] = prod[i + j] + a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(prod));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Scalar operations.
    Poly scaled(const T& s) const {
        Poly r;
        r.c_.reserve(c_.size());
        for (const T& v : c_) r.c_.push_back(v * s);
        r.trim();
        return r;
    }
    // Divides every coefficient exactly by s (throws InexactDivisionError via T).
    Poly divided_by_scalar(const T& s) const {
        Poly r;
        r.c_.reserve(c_.size());
        for (const T& v : c_) r.c_.push_back(v / s);
        r.trim();
        return r;
    }

    // f(x) * x^k.
    Poly shifted_up(int k) const {
        if (is_zero()) return Poly();
        std::vector<T> v(static_cast<std::size_t>(k), T(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return from_coeffs(std::move(v));
    }

    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
        return from_coeffs(std::move(d));
    }

    // f(x + s): repeated synthetic division by (x - (-s)).
    Poly shifted_arg(const T& s) const {
        std::vector<T> a(c_);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = a.size() - 1; j-- > i;) a[j] = a[j] + s * a[j + 1];
        return from_coeffs(std::move(a));
    }

    // Exact division; remainder must be zero.
    friend Poly operator/(const Poly& f, const Poly& g) { return exact_divide(f, g); }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using PolyQ = Poly<Rational>;    // Q[x]; also the scalar ring Q[t]
using PolyQt = Poly<PolyQ>;      // (Q[t])[x]

// ---------------------------------------------------------------------------
// Generic algorithms
// ---------------------------------------------------------------------------

namespace detail {
template <class T>
std::string coeff_debug_string(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
        return rational_to_string(v);
    } else {
        return "<coeff>";
    }
}
}  // namespace detail

template <class T>
std::string poly_debug_string(const Poly<T>& f) {
    std::string s = "[";
    for (int k = 0; k <= f.degree(); ++k) {
        if (k) s += ", ";
        s += detail::coeff_debug_string(f.coeff(k));
    }
    return s + "]";
}

// Quotient of an exact division in T[x], valid over any integral domain when g | f.
// Throws InexactDivisionError otherwise; the message carries the remainder.
template <class T>
Poly<T> exact_divide(const Poly<T>& f, const Poly<T>& g) {
    if (g.is_zero()) throw ArgumentError("exact_divide by zero polynomial");
    Poly<T> q, r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        T c;
        try {
            c = r.lc() / g.lc();
        } catch (const Error&) {
            throw InexactDivisionError("exact_divide: leading coefficient not divisible; remainder " +
                                       poly_debug_string(r));
        }
        int k = r.degree() - g.degree();
        Poly<T> term = Poly<T>::monomial(c, k);
        q += term;
        r -= term * g;
    }
    if (!r.is_zero())
        throw InexactDivisionError("exact_divide: nonzero remainder " + poly_debug_string(r));
    return q;
}

// Division with remainder; requires T to be a field (used with T = Rational).
template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& f, const Poly<T>& g) {
    if (g.is_zero()) throw ArgumentError("divrem by zero polynomial");
    Poly<T> q, r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        T c = r.lc() / g.lc();
        int k = r.degree() - g.degree();
        Poly<T> term = Poly<T>::monomial(c, k);
        q += term;
        r -= term * g;
    }
    return {q, r};
}

// Monic gcd over a field.
template <class T>
Poly<T> gcd_monic(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.divided_by_scalar(a.lc());
}

// Determinant by Bareiss fraction-free elimination with row pivoting.  Every
// division is exact over an integral domain, so T = Poly<...> entries never leave
// the ring.  Consumes the matrix.
template <class T>
T det_bareiss(std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == T(0)) {
            std::size_t j = k + 1;
            while (j < n && m[j][k] == T(0)) ++j;
            if (j == n) return T(0);
            std::swap(m[k], m[j]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    return negate ? T(0) - m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Res(f, g) as the determinant of the Sylvester matrix with the f-block on top,
// so Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f.
// Conventions at the edges: either argument zero -> 0; deg f = 0 -> f^deg(g);
// deg g = 0 -> g^deg(f).
template <class T>
T resultant(const Poly<T>& f, const Poly<T>& g) {
    if (f.is_zero() || g.is_zero()) return T(0);
    const int m = f.degree(), n = g.degree();
    if (m == 0) {
        T acc(1);
        for (int i = 0; i < n; ++i) acc = acc * f.coeff(0);
        return acc;
    }
    if (n == 0) {
        T acc(1);
        for (int i = 0; i < m; ++i) acc = acc * g.coeff(0);
        return acc;
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<T>> s(size, std::vector<T>(size, T(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = f.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = g.coeff(n - j);
    return det_bareiss(s);
}

// disc(f) = (-1)^(m(m-1)/2) Res(f, f') / lc(f), m = deg f >= 1.  Field scalars.
template <class T>
T discriminant(const Poly<T>& f) {
    const int m = f.degree();
    if (m < 1) throw ArgumentError("discriminant requires degree >= 1");
    T r = resultant(f, f.derivative());
    r = r / f.lc();
    return (m % 4 == 2 || m % 4 == 3) ? T(0) - r : r;
}

// prod (x - r) over the given roots.
template <class T>
Poly<T> expand_from_roots(const std::vector<T>& roots) {
    Poly<T> f(1);
    for (const T& r : roots) f *= Poly<T>::from_coeffs({T(0) - r, T(1)});
    return f;
}

// Applies `lift` to each coefficient and Horner-evaluates in U.  Used to move a
// polynomial to another scalar domain (doubles, Q(sqrt(D)), F_p, t |-> t0, ...).
template <class U, class T, class F>
U evaluate_with(const Poly<T>& f, const U& x, F&& lift) {
    U acc = x - x;  // zero of U without requiring U(0)
    for (int k = f.degree(); k >= 0; --k) acc = acc * x + lift(f.coeff(k));
    return acc;
}

template <class U, class T, class F>
Poly<U> map_coeffs(const Poly<T>& f, F&& lift) {
    std::vector<U> out;
    out.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int k = 0; k <= f.degree(); ++k) out.push_back(lift(f.coeff(k)));
    return Poly<U>::from_coeffs(std::move(out));
}

// Unique polynomial of degree < points.size() through (points[i], values[i]).
// Newton divided differences; requires exact division (field scalars) and
// pairwise-distinct points.
template <class T>
Poly<T> interpolate(const std::vector<T>& points, const std::vector<T>& values) {
    if (points.size() != values.size() || points.empty())
        throw ArgumentError("interpolate: need one value per point");
    const std::size_t k = points.size();
    std::vector<T> dd = values;
    for (std::size_t order = 1; order < k; ++order)
        for (std::size_t j = k - 1; j >= order; --j) {
            const T span = points[j] - points[j - order];
            if (span == T(0)) throw ArgumentError("interpolate: repeated point");
            dd[j] = (dd[j] - dd[j - 1]) / span;
        }
    Poly<T> acc(dd[k - 1]);
    for (std::size_t j = k - 1; j-- > 0;)
        acc = acc * Poly<T>::from_coeffs({T(0) - points[j], T(1)}) + Poly<T>(dd[j]);
    return acc;
}

// ---------------------------------------------------------------------------
// Q[x]-specific operations (see src/poly.cpp, src/quartic.cpp)
// ---------------------------------------------------------------------------

// Smallest positive integer D with D*f in Z[x].
Integer common_denominator(const PolyQ& f);

// Distinct rational roots, ascending.  Divisor-candidate search on the
// denominator-cleared polynomial.
std::vector<Rational> rational_roots(const PolyQ& f);

// Degree multiset of a squarefree quartic's monic irreducible factors.
enum class QuarticShape { Linears, TwoLinearsQuadratic, TwoQuadratics, LinearCubic, Irreducible };

struct QuarticFactorization {
    QuarticShape shape;
    std::vector<PolyQ> factors;  // monic, sorted by (degree, coeffs) for determinism
    Rational unit;               // leading coefficient of the input
};

// Full factorization over Q of a squarefree quartic.  Throws ArgumentError when
// deg f != 4 or gcd(f, f') != 1.
QuarticFactorization factor_quartic(const PolyQ& f);

enum class QuarticGroup { S4, A4, D4, C4, V4 };

// Galois group of an irreducible quartic over Q (error when reducible), decided by
// the resolvent cubic, squareness of the discriminant, and - to split C4 from D4 -
// an exact splitting test over Q(sqrt(disc)).
QuarticGroup quartic_galois(const PolyQ& f);

std::string to_string(QuarticShape s);
std::string to_string(QuarticGroup g);

}  // namespace tg
