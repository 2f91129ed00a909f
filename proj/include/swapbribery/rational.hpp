#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace swapbribery {

/// Exact non-negative rational used for swap costs, budgets and flow costs.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, with "/q" omitted when q == 1.
std::string to_string(const Rational& value);

/// GMP has no long long constructor; long is 64 bits on the supported targets.
inline Rational to_rational(long long value) { return Rational(static_cast<long>(value)); }

/// num/den in canonical form; mpq_class(num, den) alone does not reduce.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Largest integer not exceeding value.
long long floor_to_ll(const Rational& value);

}  // namespace swapbribery
