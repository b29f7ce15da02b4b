#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgt {

/// Exact lengths. Canonical (reduced, positive denominator) after every operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "3", "1.25" or "7/2". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace sgt
