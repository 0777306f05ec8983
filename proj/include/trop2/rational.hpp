#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trop2 {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "p/q", "-p/q" (optional surrounding whitespace). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" with q > 0 and gcd 1; integers print as "p/1".
std::string format_rational(const Rational& value);

/// Short human form: "p" for integers, "p/q" otherwise.
std::string pretty_rational(const Rational& value);

int sign(const Rational& value);

/// Exact k-th root of a positive rational, if it is rational.
std::optional<Rational> exact_root(const Rational& value, unsigned long k);

/// Exact value^exponent for value > 0; nullopt when the result is irrational.
std::optional<Rational> exact_power(const Rational& value, const Rational& exponent);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace trop2
