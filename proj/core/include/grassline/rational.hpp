#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grassline {

// Canonical form (reduced, positive denominator) is maintained by gmpxx
// after every arithmetic operation; values built from strings go through
// parse_rational, which canonicalizes.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

// q^e for any integer e; q must be nonzero when e < 0.
Rational rational_pow(const Rational& q, int e);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace grassline
