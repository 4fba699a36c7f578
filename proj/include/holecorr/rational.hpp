#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace holecorr {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::invalid_argument("not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large for long");
    return r.get_num().get_si();
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// C(n, k) for non-negative integers.
inline Integer binom(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
inline Rational binom_gen(const Rational& a, unsigned long k) {
    Rational p = 1;
    for (unsigned long i = 0; i < k; ++i) p *= a - rat(static_cast<long>(i));
    return p / Rational(factorial(k));
}

// Rising factorial (a)_n = a(a+1)...(a+n-1).
inline Rational pochhammer(const Rational& a, unsigned long n) {
    Rational p = 1;
    for (unsigned long i = 0; i < n; ++i) p *= a + rat(static_cast<long>(i));
    return p;
}

// Shifted factorial (a)_{n,h} = a(a+h)(a+2h)...(a+(n-1)h).
inline Rational pochhammer_h(const Rational& a, unsigned long n, const Rational& h) {
    Rational p = 1;
    for (unsigned long i = 0; i < n; ++i) p *= a + rat(static_cast<long>(i)) * h;
    return p;
}

// r^k for integer k (negative k requires r != 0).
inline Rational pow_rat(const Rational& r, long k) {
    if (k == 0) return 1;
    if (k < 0) {
        if (r == 0) throw std::domain_error("zero to negative power");
        return pow_rat(1 / r, -k);
    }
    Rational acc = 1, base = r;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Mathematical mod, result in [0, m).
inline long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace holecorr
