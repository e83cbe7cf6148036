#ifndef JTPOLY_RATIONAL_HPP
#define JTPOLY_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "jtpoly/errors.hpp"

namespace jtpoly {

// Exact rationals are GMP's canonical-form mpq_class: denominator positive,
// gcd(|num|, den) = 1, zero stored as 0/1. Every helper below preserves that
// canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(long num, long den = 1) {
    if (den == 0) throw ConfigError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p/q" or "p" with optional sign; canonicalizes.
Rational parseRational(const std::string& text);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string ratStr(const Rational& r);

// r^e for any integer e; r must be nonzero when e < 0.
Rational ratPow(const Rational& r, long e);

inline bool isInteger(const Rational& r) { return r.get_den() == 1; }

// Value as long; caller guarantees integrality and range.
long ratToLong(const Rational& r);

inline Rational ratAbs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int signPow(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace jtpoly

#endif
