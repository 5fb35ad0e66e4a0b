#pragma once

// Exact rational scalars backed by GMP. Every arithmetic result of mpq_class
// is kept in lowest terms with a positive denominator, so equality on values
// is syntactic.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace avw {

using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (no decimals). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& s);

/// Decimal approximation for human-facing output only.
double approx(const Scalar& s);

/// Exact square root when s is the square of a rational.
std::optional<Scalar> rational_sqrt(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace avw
