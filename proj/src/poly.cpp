#include "tg/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tg {

Integer common_denominator(const PolyQ& f) {
    Integer d(1);
    for (const Rational& c : f.coeffs()) d = lcm(d, c.get_den());
    return d;
}

namespace {

// Pollard-Brent rho; returns a nontrivial factor of composite n > 1.
Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return Integer(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4dUL);
    while (true) {
        Integer y = rng.get_z_range(n - 1) + 1;
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer x = y, d(1), q(1), ys = y;
        const long m = 128;
        long r = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time.
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd((x > ys) ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // Trial division first; keeps rho for the rare large composite cofactor.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    long d = 17;
    while (n > 1 && d < 100000 && Integer(d) * d <= n) {
        while (n % d == 0) {
            ++out[Integer(d)];
            n /= d;
        }
        d += 2;
    }
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer f = pollard_brent(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::map<Integer, int> fac;
    factor_into(abs(n), fac);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        Integer pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& f) {
    if (f.is_zero()) throw ArgumentError("rational_roots of the zero polynomial");
    // Work with the denominator-cleared integer polynomial.
    PolyQ g = f.scaled(Rational(common_denominator(f)));
    std::set<Rational> roots;
    // Strip the power of x first.
    int low = 0;
    while (g.coeff(low) == 0) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        std::vector<Rational> rest(g.coeffs().begin() + low, g.coeffs().end());
        g = PolyQ::from_coeffs(std::move(rest));
    }
    if (g.degree() >= 1) {
        const std::vector<Integer> ps = positive_divisors(g.coeff(0).get_num());
        const std::vector<Integer> qs = positive_divisors(g.lc().get_num());
        for (const Integer& p : ps)
            for (const Integer& q : qs) {
                Rational cand = make_rational(p, q);
                for (int sign = 0; sign < 2; ++sign) {
                    if (g.evaluate(cand) == 0) roots.insert(cand);
                    cand = -cand;
                }
            }
    }
    return {roots.begin(), roots.end()};
}

std::string to_string(QuarticShape s) {
    switch (s) {
        case QuarticShape::Linears: return "(1,1,1,1)";
        case QuarticShape::TwoLinearsQuadratic: return "(1,1,2)";
        case QuarticShape::TwoQuadratics: return "(2,2)";
        case QuarticShape::LinearCubic: return "(1,3)";
        case QuarticShape::Irreducible: return "(4)";
    }
    return "?";
}

std::string to_string(QuarticGroup g) {
    switch (g) {
        case QuarticGroup::S4: return "S4";
        case QuarticGroup::A4: return "A4";
        case QuarticGroup::D4: return "D4";
        case QuarticGroup::C4: return "C4";
        case QuarticGroup::V4: return "V4";
    }
    return "?";
}

}  // namespace tg
