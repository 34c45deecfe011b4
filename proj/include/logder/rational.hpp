#pragma once

#include <gmpxx.h>

#include <string>

namespace logder {

// Exact rationals, always canonical (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Parses "p" or "p/q" with optional sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace logder
