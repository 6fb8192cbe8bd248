#include "tg/quadext.hpp"

namespace tg {

QuadExt QuadExt::operator/(const QuadExt& o) const {
    // 1/(a + b sqrt(D)) = (a - b sqrt(D)) / (a^2 - D b^2); the norm of a nonzero
    // element is nonzero because D is not a square.
    Rational n = o.norm();
    if (n == 0) {
        if (o.a_ == 0 && o.b_ == 0) throw ArgumentError("QuadExt division by zero");
        throw ArgumentError("QuadExt: D is a rational square; the extension is degenerate");
    }
    QuadExt conj(o.a_, -o.b_, d_);
    QuadExt num = *this * conj;
    return {num.a_ / n, num.b_ / n, d_};
}

std::optional<QuadExt> QuadExt::sqrt() const {
    if (a_ == 0 && b_ == 0) return QuadExt(d_);
    if (b_ == 0) {
        // Purely rational: either sqrt(a) is rational or a/D is a square (then
        // sqrt(a) = s*sqrt(D)).
        if (auto s = is_square(a_)) return QuadExt(*s, Rational(0), d_);
        if (d_ != 0) {
            if (auto s = is_square(a_ / d_)) return QuadExt(Rational(0), *s, d_);
        }
        return std::nullopt;
    }
    // (x + y sqrt(D))^2 = a + b sqrt(D) with b != 0 forces x, y != 0 and
    // x^2 - D y^2 = +-m where m = sqrt(a^2 - D b^2) must be rational.
    auto m = is_square(norm());
    if (!m) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rational half = (sign == 0 ? Rational(a_ + *m) : Rational(a_ - *m)) / 2;
        if (auto x = is_square(half)) {
            if (*x == 0) continue;
            Rational y = b_ / (2 * *x);
            QuadExt cand(*x, y, d_);
            if (cand * cand == *this) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace tg
