#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrec {

// Exact arbitrary-precision arithmetic. mpq_class keeps values in canonical
// form (gcd-reduced, positive denominator), which is exactly the invariant
// the rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational ratio(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    Integer r;
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    // Generalized over negative n via the falling factorial.
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= Integer(n - i);
    Integer r = num / factorial(k);
    return r;
}

// 2^e as an exact rational, e may be negative.
inline Rational pow2(long e) {
    Integer p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : ratio(Integer(1), p);
}

inline Rational rat_pow(const Rational& a, long e) {
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw std::domain_error("0^negative");
        return 0;
    }
    Rational base = e < 0 ? Rational(ratio(Integer(a.get_den()), Integer(a.get_num()))) : a;
    long n = e < 0 ? -e : e;
    Rational acc = 1;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Hash suitable for memo keys; equality is still checked exactly by callers.
inline std::uint64_t hash_rational(const Rational& r) {
    const std::uint64_t p = 0xffffffffffffffc5ULL;  // largest 64-bit prime
    std::uint64_t hn = mpz_fdiv_ui(r.get_num().get_mpz_t(), 0x7fffffffULL);
    std::uint64_t hd = mpz_fdiv_ui(r.get_den().get_mpz_t(), 0x7fffffffULL);
    std::uint64_t h = 1469598103934665603ULL;
    h = (h ^ hn) * p;
    h = (h ^ hd) * p;
    if (sgn(r) < 0) h = (h ^ 0x9e3779b97f4a7c15ULL) * p;
    return h;
}

// Bernoulli numbers B_0..B_n (B_1 = -1/2 convention).
inline std::vector<Rational> bernoulli_numbers(int n) {
    std::vector<Rational> b(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        b[m] = (m == 0) ? Rational(1) : Rational(0);
        if (m == 0) continue;
        Rational acc = 0;
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * b[k];
        b[m] = -acc / Rational(m + 1);
    }
    return b;
}

// zeta(1-2g) = -B_{2g}/(2g) for g >= 1.
inline Rational zeta_negative_odd(int g) {
    if (g < 1) throw std::domain_error("zeta_negative_odd needs g >= 1");
    auto b = bernoulli_numbers(2 * g);
    return -b[2 * static_cast<size_t>(g)] / Rational(2 * g);
}

}  // namespace irrec
