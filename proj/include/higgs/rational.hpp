#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace higgs {

// Exact coefficient arithmetic. cpp_rational keeps gcd-reduced form with a
// positive denominator automatically, which is exactly the canonical form we
// need for coefficients.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::invalid_argument("rat_pow: zero to negative power");
        return Rat(0);
    }
    Int n = boost::multiprecision::numerator(base);
    Int d = boost::multiprecision::denominator(base);
    if (e < 0) {
        std::swap(n, d);
        e = -e;
        if (n < 0) { n = -n; d = -d; }
    }
    return Rat(int_pow(n, e), int_pow(d, e));
}

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0,
// via the generalized falling-factorial definition.
inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    Int den = 1;
    for (long j = 0; j < k; ++j) {
        num *= Int(n - j);
        den *= Int(j + 1);
    }
    // the product of k consecutive integers is divisible by k!
    return num / den;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long j = 2; j <= n; ++j) r *= j;
    return r;
}

inline std::string int_str(const Int& v) { return v.str(); }

} // namespace higgs
