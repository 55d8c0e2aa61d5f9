#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "regzeta/errors.hpp"

namespace regzeta {

// Arbitrary-precision exact arithmetic. cpp_rational keeps values reduced
// to lowest terms with a positive denominator, which is exactly the
// canonical form we promise.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

/// num/den as a canonical rational (lowest terms, positive denominator);
/// accepts negative denominators, refuses zero ones.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

inline Integer ipow(Integer base, std::uint64_t e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

/// Quotient a/b, required to be exact.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw DivisionByZero("exact_div: division by zero");
    Integer q = a / b;
    if (q * b != a)
        throw InexactDivision("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

/// The rational a, required to be an integer.
inline Integer require_integer(const Rational& a, const char* context) {
    if (denominator(a) != 1)
        throw InexactDivision(std::string(context) + ": value " +
                              a.str() + " is not an integer");
    return numerator(a);
}

/// Decimal string for integral rationals, "num/den" otherwise.
inline std::string exact_str(const Rational& v) {
    return denominator(v) == 1 ? numerator(v).str() : v.str();
}

/// Smallest prime factor of n >= 2 by trial division; 0 for n < 2.
inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) return 0;
    if (n % 2 == 0) return 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

inline bool is_prime_u64(std::uint64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

/// Writes n = p^k with p prime; returns false if n is not a prime power >= 2.
inline bool prime_power_decompose(std::uint64_t n, std::uint64_t& p, unsigned& k) {
    if (n < 2) return false;
    p = smallest_prime_factor(n);
    k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return n == 1;
}

}  // namespace regzeta
