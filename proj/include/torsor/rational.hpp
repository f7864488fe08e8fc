#pragma once

#include <gmpxx.h>

#include <string>

#include "torsor/errors.hpp"

namespace torsor {

// Exact arbitrary-precision rationals. GMP keeps values canonical
// (gcd(|num|, den) = 1, den > 0), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool rat_is_one(const Rational& q) { return q == 1; }

inline Rational rat_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

// Accepts "123", "-4/5", "2/4" (canonicalized).
inline Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        require(sgn(q.get_den()) != 0, "rational with zero denominator: " + s);
        return q;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("cannot parse rational: " + s);
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace torsor
