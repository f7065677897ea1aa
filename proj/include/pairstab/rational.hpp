#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pairstab {

// Exact rational number. Every quantity in this library is exact; there is no
// floating point anywhere.
using Rational = mpq_class;

// Accepts "n", "n/d" with optional leading '-' on the numerator. Throws
// InvalidInput on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

// Canonical "num/den" form, e.g. "2/1", "-3/4".
std::string to_string(const Rational& value);

static_assert(sizeof(long) == sizeof(long long), "twists are stored as long long");

inline Rational from_integer(long long value) { return Rational(static_cast<long>(value)); }

inline int sign(const Rational& value) { return sgn(value); }

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace pairstab
