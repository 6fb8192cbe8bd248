#include "tg/fppoly.hpp"

#include <algorithm>

namespace tg {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid; p prime and a != 0 mod p.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw ArgumentError("inv_mod: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> ascending) : p_(p), c_(std::move(ascending)) {
    if (p_ < 2 || p_ >= (1ULL << 31))
        throw ArgumentError("FpPoly: modulus must be a prime below 2^31");
    for (auto& v : c_) v %= p_;
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) % p_;
    return {p_, std::move(v)};
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = (coeff(static_cast<int>(i)) + p_ - o.coeff(static_cast<int>(i))) % p_;
    return {p_, std::move(v)};
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return {p_, {}};
    std::vector<std::uint64_t> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % p_;  // products < 2^62
    }
    return {p_, std::move(v)};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = inv_mod(c_.back(), p_);
    std::vector<std::uint64_t> v(c_);
    for (auto& x : v) x = x * inv % p_;
    return {p_, std::move(v)};
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1) return {p_, {}};
    std::vector<std::uint64_t> v;
    v.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] % p_ * (k % p_) % p_);
    return {p_, std::move(v)};
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& f, const FpPoly& g) {
    if (g.is_zero()) throw ArgumentError("FpPoly divrem by zero");
    std::uint64_t p = f.p_;
    std::vector<std::uint64_t> r(f.c_), q;
    const int dg = g.degree();
    if (f.degree() >= dg) q.assign(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    std::uint64_t lg_inv = inv_mod(g.c_.back(), p);
    for (int k = f.degree(); k >= dg; --k) {
        std::uint64_t c = r[static_cast<std::size_t>(k)] % p * lg_inv % p;
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - dg)] = c;
        for (int j = 0; j <= dg; ++j) {
            auto& slot = r[static_cast<std::size_t>(k - dg + j)];
            slot = (slot + p - c * g.coeff(j) % p) % p;
        }
    }
    if (f.degree() >= dg) r.resize(static_cast<std::size_t>(dg));
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

FpPoly pow_mod(FpPoly base, Integer e, const FpPoly& f) {
    FpPoly acc(f.p(), {1});
    base = FpPoly::divrem(base, f).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = FpPoly::divrem(acc * base, f).second;
        base = FpPoly::divrem(base * base, f).second;
        e >>= 1;
    }
    return acc;
}

}  // namespace

FpPoly FpPoly::x_power_mod(const FpPoly& f, const Integer& e) {
    return pow_mod(FpPoly(f.p(), {0, 1}), e, f);
}

FpPoly FpPoly::frobenius_power_x(const FpPoly& f, int iterations) {
    FpPoly h(f.p(), {0, 1});
    for (int i = 0; i < iterations; ++i) h = pow_mod(h, Integer(static_cast<long>(f.p())), f);
    return h;
}

std::optional<std::vector<int>> mod_p_degree_pattern(const PolyQ& f, long p) {
    if (!is_prime(Integer(p))) throw ArgumentError("mod_p_degree_pattern: p must be prime");
    if (f.degree() < 1) throw ArgumentError("mod_p_degree_pattern: degree must be >= 1");
    const Integer P(p);
    // Reduction is undefined if p divides a denominator; degree must survive; the
    // image must be squarefree.  Any of these => "skip this prime".
    std::vector<std::uint64_t> coeffs;
    for (int k = 0; k <= f.degree(); ++k) {
        const Rational& c = f.coeff(k);
        if (c.get_den() % P == 0) return std::nullopt;
        Integer num = c.get_num() % P, den = c.get_den() % P;
        if (num < 0) num += P;
        std::uint64_t n64 = num.get_ui();
        std::uint64_t d64 = den.get_ui();
        coeffs.push_back(n64 * inv_mod(d64, static_cast<std::uint64_t>(p)) % static_cast<std::uint64_t>(p));
    }
    FpPoly fbar(static_cast<std::uint64_t>(p), std::move(coeffs));
    if (fbar.degree() != f.degree()) return std::nullopt;
    if (FpPoly::gcd(fbar, fbar.derivative()).degree() != 0) return std::nullopt;

    // Distinct-degree factorization: gcd(x^(p^d) - x, remaining) collects all
    // irreducible factors of degree d.
    std::vector<int> pattern;
    FpPoly rest = fbar.monic();
    FpPoly h(fbar.p(), {0, 1});  // x^(p^d) mod rest, maintained incrementally
    const FpPoly x(fbar.p(), {0, 1});
    for (int d = 1; rest.degree() > 0 && 2 * d <= rest.degree(); ++d) {
        h = pow_mod(h, P, rest);
        FpPoly g = FpPoly::gcd(h - x, rest);
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) pattern.push_back(d);
            rest = FpPoly::divrem(rest, g).first;
            h = FpPoly::divrem(h, rest).second;
        }
    }
    if (rest.degree() > 0) pattern.push_back(rest.degree());
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

}  // namespace tg
