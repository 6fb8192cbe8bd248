#include "tg/curve.hpp"

#include <cmath>
#include <vector>

namespace tg {

namespace {

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw ArgumentError("inv_mod_p: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace

std::uint64_t FpCurve::discriminant() const {
    const std::uint64_t P = static_cast<std::uint64_t>(p);
    auto mul = [P](std::uint64_t x, std::uint64_t y) { return x * y % P; };
    auto sub = [P](std::uint64_t x, std::uint64_t y) { return (x + P - y % P) % P; };
    std::uint64_t a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    std::uint64_t b2 = (mul(a1, a1) + 4 * a2) % P;
    std::uint64_t b4 = (2 * a4 + mul(a1, a3)) % P;
    std::uint64_t b6 = (mul(a3, a3) + 4 * a6) % P;
    std::uint64_t b8 = (mul(mul(a1, a1), a6) + mul(mul(4, a2), a6)) % P;
    b8 = (b8 + P - mul(mul(a1, a3), a4)) % P;
    b8 = (b8 + mul(a2, mul(a3, a3))) % P;
    b8 = (b8 + P - mul(a4, a4)) % P;
    std::uint64_t d = sub(0, mul(mul(b2, b2), b8));
    d = sub(d, mul(8, mul(b4, mul(b4, b4))));
    d = sub(d, mul(27, mul(b6, b6)));
    d = (d + mul(9, mul(b2, mul(b4, b6)))) % P;
    return d;
}

std::optional<FpCurve> reduce_mod_p(const CurveQ& E, long p) {
    if (!is_prime(Integer(p)) || p >= (1L << 31)) throw ArgumentError("reduce_mod_p: p must be a prime below 2^31");
    const Integer P(p);
    std::array<std::uint64_t, 5> a{};
    const Rational* coeffs[5] = {&E.a1(), &E.a2(), &E.a3(), &E.a4(), &E.a6()};
    for (int i = 0; i < 5; ++i) {
        if (coeffs[i]->get_den() % P == 0) return std::nullopt;
        Integer num = coeffs[i]->get_num() % P;
        if (num < 0) num += P;
        Integer den = coeffs[i]->get_den() % P;
        a[static_cast<std::size_t>(i)] =
            num.get_ui() * inv_mod_p(den.get_ui(), static_cast<std::uint64_t>(p)) % static_cast<std::uint64_t>(p);
    }
    return FpCurve{p, a};
}

long ap(const FpCurve& E) {
    const std::uint64_t P = static_cast<std::uint64_t>(E.p);
    if (P > (1ULL << 26)) throw ArgumentError("ap: prime too large for direct point counting");
    if (E.discriminant() == 0) throw ArgumentError("ap: bad reduction at " + std::to_string(E.p));
    long count = 0;  // affine points
    if (P == 2) {
        for (std::uint64_t x = 0; x < 2; ++x)
            for (std::uint64_t y = 0; y < 2; ++y) {
                std::uint64_t lhs = (y * y + E.a[0] * x * y + E.a[2] * y) % 2;
                std::uint64_t rhs = (x * x * x + E.a[1] * x * x + E.a[3] * x + E.a[4]) % 2;
                if (lhs == rhs) ++count;
            }
    } else {
        // Complete the square: #E(F_p) = p + 1 + sum_x chi(4x^3 + b2 x^2 + 2b4 x + b6).
        auto mul = [P](std::uint64_t x, std::uint64_t y) { return x * y % P; };
        std::uint64_t a1 = E.a[0], a2 = E.a[1], a3 = E.a[2], a4 = E.a[3], a6 = E.a[4];
        std::uint64_t b2 = (mul(a1, a1) + 4 * a2) % P;
        std::uint64_t b4 = (2 * a4 + mul(a1, a3)) % P;
        std::uint64_t b6 = (mul(a3, a3) + 4 * a6) % P;
        std::vector<bool> is_sq(P, false);
        for (std::uint64_t v = 0; v < P; ++v) is_sq[mul(v, v)] = true;
        long sum = 0;
        for (std::uint64_t x = 0; x < P; ++x) {
            std::uint64_t v = (mul(4, mul(x, mul(x, x))) + mul(b2, mul(x, x)) + mul(2 * b4 % P, x) + b6) % P;
            if (v == 0) continue;           // chi = 0
            sum += is_sq[v] ? 1 : -1;       // chi = +-1
        }
        long a_p = -sum;
        double bound = 2.0 * std::sqrt(static_cast<double>(P));
        if (std::abs(static_cast<double>(a_p)) > bound + 0.5)
            throw Error("ap: Hasse bound violated, internal error");
        return a_p;
    }
    long a_p = static_cast<long>(P) + 1 - (count + 1);
    return a_p;
}

long ap(const CurveQ& E, long p) {
    auto reduced = reduce_mod_p(E, p);
    if (!reduced) throw ArgumentError("ap: model does not reduce mod " + std::to_string(p));
    return ap(*reduced);
}

}  // namespace tg
