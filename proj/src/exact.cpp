#include "urn/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace urn {

Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw std::domain_error("rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

std::string to_fraction_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) {
      throw std::invalid_argument("rational: empty integer field");
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
      throw std::invalid_argument("rational: sign without digits");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw std::invalid_argument("rational: invalid digit in \"" + std::string(s) + "\"");
      }
    }
    return Int(std::string(s));
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("rational: zero denominator in \"" + std::string(text) + "\"");
  }
  return make_rational(num, den);
}

namespace {

Int pow10(int e) {
  Int out = 1;
  for (int i = 0; i < e; ++i) out *= 10;
  return out;
}

}  // namespace

std::string to_decimal_string(const Rational& value, int significant_digits) {
  if (significant_digits < 1) {
    throw std::domain_error("to_decimal_string: need at least one significant digit");
  }
  if (value == 0) {
    return "0";
  }
  const bool negative = value < 0;
  const Int a = abs(numerator(value));
  const Int b = denominator(value);

  // Exponent of the leading digit: value in [10^exp, 10^(exp+1)).
  int exp = 0;
  if (a >= b) {
    exp = static_cast<int>(Int(a / b).str().size()) - 1;
  } else {
    Int scaled = a;
    while (scaled < b) {
      scaled *= 10;
      --exp;
    }
  }

  // Scale so the rounded mantissa has exactly `significant_digits` digits.
  const int shift = significant_digits - 1 - exp;
  Int p = a;
  Int q = b;
  if (shift >= 0) {
    p *= pow10(shift);
  } else {
    q *= pow10(-shift);
  }
  Int mantissa = p / q;
  const Int rem = p % q;
  const Int twice = rem * 2;
  if (twice > q || (twice == q && (mantissa & 1) == 1)) {
    ++mantissa;
  }
  if (mantissa == pow10(significant_digits)) {  // carry, e.g. 0.999... -> 1.0
    mantissa = pow10(significant_digits - 1);
    ++exp;
  }

  std::string digits = mantissa.str();
  std::string out;
  if (exp >= significant_digits - 1) {
    out = digits + std::string(static_cast<std::size_t>(exp - significant_digits + 1), '0');
  } else if (exp >= 0) {
    out = digits.substr(0, static_cast<std::size_t>(exp + 1)) + "." +
          digits.substr(static_cast<std::size_t>(exp + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-exp - 1), '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    out.erase(out.find_last_not_of('0') + 1);
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

Int triangular(const Int& n) {
  if (n < 0) {
    throw std::domain_error("triangular: negative argument");
  }
  return n * (n + 1) / 2;
}

Int pyramidal(const Int& n) {
  if (n < 0) {
    throw std::domain_error("pyramidal: negative argument");
  }
  return n * (n + 1) * (2 * n + 1) / 6;
}

Int falling_factorial(const Int& x, const Int& k) {
  if (x < 0 || k < 0) {
    throw std::domain_error("falling_factorial: negative argument");
  }
  if (k > x) {
    return 0;
  }
  Int out = 1;
  for (Int i = 0; i < k; ++i) {
    out *= x - i;
  }
  return out;
}

Int binomial_coefficient(const Int& n, const Int& k) {
  if (n < 0 || k < 0) {
    throw std::domain_error("binomial_coefficient: negative argument");
  }
  if (k > n) {
    return 0;
  }
  const Int kk = std::min(k, Int(n - k));
  Int out = 1;
  for (Int i = 1; i <= kk; ++i) {
    out = out * (n - kk + i) / i;
  }
  return out;
}

}  // namespace urn
