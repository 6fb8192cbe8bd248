#pragma once

// Exact arithmetic in Q(sqrt(D)) for a non-square rational D.  Elements are
// a + b*sqrt(D) with rational a, b.  Small on purpose: the only consumers are the
// C4-vs-D4 test for quartics and the exact two-C2-vs-V4 test of the mod-3
// classifier, which need +, -, *, exact /, equality, and square roots.

#include <optional>

#include "tg/rational.hpp"

namespace tg {

class QuadExt {
  public:
    // The zero element of Q(sqrt(D)).
    explicit QuadExt(Rational D) : a_(0), b_(0), d_(std::move(D)) {}
    QuadExt(Rational a, Rational b, Rational D)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(D)) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& D() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt operator+(const QuadExt& o) const { return {a_ + o.a_, b_ + o.b_, d_}; }
    QuadExt operator-(const QuadExt& o) const { return {a_ - o.a_, b_ - o.b_, d_}; }
    QuadExt operator-() const { return {-a_, -b_, d_}; }
    QuadExt operator*(const QuadExt& o) const {
        return {a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_};
    }
    QuadExt operator/(const QuadExt& o) const;

    // Norm a^2 - D b^2 (rational).
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

    // A square root inside Q(sqrt(D)) when one exists.
    std::optional<QuadExt> sqrt() const;

  private:
    Rational a_, b_, d_;
};

inline QuadExt quadext_rational(const Rational& r, const Rational& D) { return {r, Rational(0), D}; }

}  // namespace tg
