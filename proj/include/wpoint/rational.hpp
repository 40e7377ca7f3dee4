#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wpoint {

using Integer = mpz_class;
/// GMP rationals are kept in lowest terms with a positive denominator by every
/// arithmetic operator; values built from raw parts must be canonicalized.
using Rational = mpq_class;

/// Parses "a" or "a/b" with an optional leading '-' on a and b > 0.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Least common multiple of the denominators (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

/// gcd of the absolute values; 0 when every entry is 0.
Integer content(std::span<const Integer> values);

}  // namespace wpoint
