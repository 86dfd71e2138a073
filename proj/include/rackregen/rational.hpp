#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rackregen {

// Every quantity in the library (file size, tau, costs, beta_e, alpha) is an
// exact rational so that knees and tight points compare with ==.
using Rational = mpq_class;

// Accepts "p/q", a bare integer "p", or a finite decimal such as "2.2"
// (converted exactly to 11/5). Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
// GMP arithmetic requires reduced operands.
Rational make_rational(long num, long den);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Fixed-point decimal rounded half-even to `significant` digits, trailing
// zeros trimmed. 1/94 -> "0.0106382978723".
std::string to_decimal(const Rational& value, int significant = 12);

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace rackregen
