#include "latint/rational.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "latint/errors.hpp"

namespace latint {

namespace {

Integer pow10(unsigned exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("not a number: '" + std::string(text) + "'");

  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("bad exponent in '" + std::string(text) + "'");
    }
    pos = text.size();
  }
  if (pos != text.size()) throw ParseError("trailing characters in '" + std::string(text) + "'");
  if (exponent > 4000 || exponent < -4000) throw ParseError("exponent out of range in '" + std::string(text) + "'");

  Rational result(Integer(digits, 10));
  const long shift = exponent - scale;
  if (shift > 0) {
    result *= Rational(pow10(static_cast<unsigned>(shift)));
  } else if (shift < 0) {
    result /= Rational(pow10(static_cast<unsigned>(-shift)));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational result = num / den;
  result.canonicalize();
  return result;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite number");
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw ParseError("cannot render double");
  return parse_decimal(std::string_view(buffer, static_cast<std::size_t>(ptr - buffer)));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) significant = 1;
  if (value == 0) return "0";

  const bool negative = value < 0;
  const Rational magnitude = abs(value);

  // Decimal exponent e with 10^e <= |q| < 10^(e+1).
  long e = static_cast<long>(magnitude.get_num().get_str().size()) -
           static_cast<long>(magnitude.get_den().get_str().size());
  auto power = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                  : Rational(Integer(1), pow10(static_cast<unsigned>(-k)));
  };
  while (power(e) > magnitude) --e;
  while (power(e + 1) <= magnitude) ++e;

  Rational scaled = magnitude * power(significant - 1 - e);
  Integer digits_value = scaled.get_num() / scaled.get_den();
  const Rational remainder = scaled - Rational(digits_value);
  const Rational half(1, 2);
  if (remainder > half || (remainder == half && mpz_odd_p(digits_value.get_mpz_t()))) {
    digits_value += 1;
  }
  if (digits_value == pow10(static_cast<unsigned>(significant))) {
    digits_value /= 10;
    ++e;
  }

  std::string digits = digits_value.get_str();
  std::string out = negative ? "-" : "";
  auto strip = [](std::string s) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    return s;
  };

  if (e < -4 || e >= significant) {
    const std::string frac = strip(digits.substr(1));
    out += digits.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += e < 0 ? "e-" : "e+";
    std::string exp_digits = std::to_string(e < 0 ? -e : e);
    if (exp_digits.size() < 2) exp_digits.insert(0, "0");
    out += exp_digits;
  } else if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    out += digits.substr(0, int_len);
    const std::string frac = strip(digits.substr(int_len));
    if (!frac.empty()) out += "." + frac;
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + strip(digits);
  }
  return out;
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational factorial_ratio(unsigned a, unsigned b, unsigned c) {
  Rational result(factorial(a) * factorial(b), factorial(c));
  result.canonicalize();
  return result;
}

}  // namespace latint
