#pragma once

#include <gmpxx.h>

#include <string>

namespace leibniz {

// Exact rational scalar. mpq_class keeps values canonical after every operation.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with q != 0. Result is reduced.
Rational parse_rational(const std::string& text);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

} // namespace leibniz
