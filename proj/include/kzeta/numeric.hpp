#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace kzeta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Floor division a/b for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer mod_floor(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

// Reduces q into [0, 1).
inline Rational frac_part(const Rational& q) {
    Integer fl = floor_div(num(q), den(q));
    return q - Rational(fl);
}

inline long to_long(const Integer& v) { return static_cast<long>(v); }

inline long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// True iff m == p^k for some k >= 0 (so m == 1 qualifies).
inline bool is_power_of(long m, long p) {
    if (m < 1) return false;
    while (m % p == 0) m /= p;
    return m == 1;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Inverse of a mod m (throws nothing; caller must guarantee gcd(a, m) == 1).
inline Integer mod_inverse(Integer a, Integer m) {
    Integer t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
    while (new_r != 0) {
        Integer q = r / new_r;
        Integer tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_floor(t, m);
}

}  // namespace kzeta
