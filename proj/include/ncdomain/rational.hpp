#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncd {

/// Exact arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "p/q" or a plain decimal "12.375" into an exact rational.
/// Only nonnegative literals are accepted; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

std::string numerator_string(const Rational& r);
std::string denominator_string(const Rational& r);

/// Rebuilds a rational from decimal-string numerator and denominator.
Rational rational_from_strings(const std::string& num, const std::string& den);

} // namespace ncd
