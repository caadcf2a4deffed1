#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <delrep/error.hpp>

namespace delrep {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form we
// want; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0)
            throw error("cannot raise zero to a negative power");
        return rat_pow(Rational(1) / base, -exp);
    }
    Rational acc(1), b(base);
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1)
            acc *= b;
        b *= b;
    }
    return acc;
}

inline Integer factorial(int n) {
    Integer acc(1);
    for (int k = 2; k <= n; ++k)
        acc *= k;
    return acc;
}

} // namespace delrep
