#pragma once

/**
 * @file numeric.hpp
 * @brief Exact rational scalars and arbitrary-precision integers.
 *
 * Every value handled by the library is a Rational. Decimal literals such as
 * "0.00505" are read through powers of ten and never touch binary floating
 * point, so equality comparisons throughout the solver are exact.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace worpitzky {

using BigInt = boost::multiprecision::cpp_int;

/// Immutable exact fraction, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws ZeroDenominatorError when @p denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Canonical form: "p" for integers, "p/q" otherwise. Round-trips through
  /// parse_scalar.
  std::string to_string() const;

  /// True when the denominator has no prime factors other than 2 and 5.
  bool is_terminating_decimal() const;

  /// Exact decimal rendering ("0.00505") for terminating decimals, the
  /// canonical "p/q" form otherwise.
  std::string to_display_string() const;

 private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// x^n with x^0 = 1 for every x, including zero.
Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

BigInt factorial(unsigned n);

/// C(n, k), zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Parses `-?digits(.digits)?` or `-?digits/digits`, surrounding whitespace
/// ignored.
Rational parse_scalar(std::string_view text);

/// Parses newline- or comma-separated scalars. Blank lines and lines starting
/// with '#' are skipped. Errors name the 1-based line of the bad token.
std::vector<Rational> parse_scalar_list(std::string_view text);

}  // namespace worpitzky
