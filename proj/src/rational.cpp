#include "rackregen/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rackregen {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class pow10(long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

mpz_class round_half_even(const Rational& y) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  mpz_class twice_rest = 2 * (y.get_num() - q * y.get_den());
  int cmp = mpz_cmp(twice_rest.get_mpz_t(), y.get_den_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + original + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + original + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    value = Rational(mpz_class(digits, 10), pow10(static_cast<long>(frac.size())));
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + original + "'");
    value = Rational(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational v(num, den);
  v.canonicalize();
  return v;
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  if (value == 0) return "0";
  Rational magnitude = abs(value);

  // exponent e with 10^e <= magnitude < 10^(e+1)
  long e = static_cast<long>(std::floor(std::log10(magnitude.get_d())));
  auto scaled_by = [](const Rational& x, long power) {
    return power >= 0 ? Rational(x * Rational(pow10(power)))
                      : Rational(x / Rational(pow10(-power)));
  };
  while (scaled_by(magnitude, -e) >= 10) ++e;
  while (scaled_by(magnitude, -e) < 1) --e;

  long shift = significant - 1 - e;
  mpz_class digits = round_half_even(scaled_by(magnitude, shift));
  if (digits == pow10(significant)) {
    digits /= 10;
    --shift;
  }

  std::string text = digits.get_str();
  if (shift <= 0) {
    text.append(static_cast<size_t>(-shift), '0');
  } else {
    if (text.size() <= static_cast<size_t>(shift)) {
      text.insert(0, static_cast<size_t>(shift) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<size_t>(shift), ".");
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return value < 0 ? "-" + text : text;
}

}  // namespace rackregen
