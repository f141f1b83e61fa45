#ifndef COGROWTH_RATIONAL_HPP
#define COGROWTH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cogrowth {

// Exact coefficient domain. mpq_class keeps values canonical
// (gcd-reduced, positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline Integer numer(const Rational& q) { return q.get_num(); }
inline Integer denom(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Truncated toward -infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer rational_floor(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

// Exact integer square root test; returns true and sets r if n = r^2.
bool exact_sqrt(const Integer& n, Integer& r);

// Exact rational square root test; root has the sign choice r >= 0.
bool exact_sqrt(const Rational& q, Rational& r);

}  // namespace cogrowth

#endif
