#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace urn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Reduced, sign-normalized fraction num/den.
/// Throws std::domain_error when den == 0.
Rational make_rational(Int num, Int den);

/// "p/q" in lowest terms; bare "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q" or "p" (implied /1). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal rendering for display only, rounded half-to-even at
/// `significant_digits`. The exact fraction is the value of record.
std::string to_decimal_string(const Rational& value, int significant_digits = 12);

/// n(n+1)/2, the sum 1 + 2 + ... + n. triangular(0) == 0.
Int triangular(const Int& n);

/// n(n+1)(2n+1)/6, the sum 1^2 + 2^2 + ... + n^2. pyramidal(0) == 0.
Int pyramidal(const Int& n);

/// x(x-1)...(x-k+1). Empty product 1 when k == 0; 0 when k > x.
Int falling_factorial(const Int& x, const Int& k);

/// C(n, k); 0 when k > n.
Int binomial_coefficient(const Int& n, const Int& k);

}  // namespace urn
