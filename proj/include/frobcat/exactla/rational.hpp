#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace frobcat {

/// Exact rational scalar. GMP keeps numerator and denominator coprime with a
/// positive denominator once canonicalized.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading '-'). Throws ParseError on anything
/// else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace frobcat
