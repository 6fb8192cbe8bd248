#include "tg/divpoly.hpp"

namespace tg {

std::vector<long> divisors(long n) {
    if (n < 1) throw ArgumentError("divisors: n must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime_power(long n, long* prime_out) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        long m = n;
        while (m % p == 0) m /= p;
        if (m == 1) {
            if (prime_out) *prime_out = p;
            return true;
        }
        return false;
    }
    if (prime_out) *prime_out = n;  // n itself is prime
    return true;
}

long primitive_degree(long n) {
    if (n < 3) throw ArgumentError("primitive_degree: n must be >= 3");
    // J_2(n)/2 computed exactly: n^2 prod (p^2 - 1)/p^2 over primes p | n.
    long j2 = n * n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        j2 = j2 / (p * p) * (p * p - 1);
        while (m % p == 0) m /= p;
    }
    if (m > 1) j2 = j2 / (m * m) * (m * m - 1);
    return j2 / 2;
}

}  // namespace tg
