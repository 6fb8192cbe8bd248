#include "tg/rational.hpp"

#include <cctype>

namespace tg {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    // mpq's own parser accepts "a/b" but does not canonicalize and is lenient about
    // whitespace; validate the shape ourselves.
    if (s.empty()) throw ArgumentError("empty rational literal");
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ArgumentError("malformed rational literal: '" + s + "'");
    return make_rational(Integer(num), Integer(den));
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string integer_to_string(const Integer& n) { return n.get_str(); }

namespace {

void require_prime(const Integer& p) {
    if (!is_prime(p)) throw ArgumentError("valuation_p: modulus " + p.get_str() + " is not prime");
}

// Exponent of p in n != 0.
long valuation_of_nonzero(Integer n, const Integer& p) {
    long v = 0;
    Integer r;
    while (true) {
        Integer quo;
        mpz_fdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        ++v;
        n = quo;
    }
}

}  // namespace

long valuation_p(const Integer& n, const Integer& p) {
    require_prime(p);
    if (n == 0) return kValInfinity;
    return valuation_of_nonzero(n, p);
}

long valuation_p(const Rational& q, const Integer& p) {
    require_prime(p);
    if (q == 0) return kValInfinity;
    return valuation_of_nonzero(q.get_num(), p) - valuation_of_nonzero(q.get_den(), p);
}

std::optional<Integer> is_square(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> is_square(const Rational& q) {
    auto num = is_square(Integer(q.get_num()));
    if (!num) return std::nullopt;
    auto den = is_square(Integer(q.get_den()));
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // 40 Miller-Rabin rounds; deterministic for anything this library passes in.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * 2; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace tg
