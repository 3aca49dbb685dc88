#include "worpitzky/numeric.hpp"

#include "worpitzky/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace worpitzky {

namespace {

std::string_view trim(std::string_view s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  auto first = std::find_if(s.begin(), s.end(), not_space);
  auto last = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return first < last ? std::string_view(first, last) : std::string_view{};
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// cpp_int reads a leading 0 as an octal prefix, so strip it first.
BigInt to_bigint(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw ZeroDenominatorError("zero denominator in " + numerator.str() + "/0");
  }
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(BigInt(-numerator), BigInt(-denominator));
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_zero() const { return value_ == 0; }
bool Rational::is_integer() const { return denominator() == 1; }
int Rational::sign() const { return value_.sign(); }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

bool Rational::is_terminating_decimal() const {
  BigInt d = denominator();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string Rational::to_display_string() const {
  if (is_integer() || !is_terminating_decimal()) return to_string();

  BigInt d = denominator();
  unsigned twos = 0;
  unsigned fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  const unsigned places = std::max(twos, fives);
  BigInt scaled = abs(numerator()) * (pow(BigInt(10), places) / denominator());

  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, 1, '.');
  return sign() < 0 ? "-" + digits : digits;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each partial product C(n, i) is an integer, so the division is exact.
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational parse_scalar(std::string_view text) {
  const std::string_view token = trim(text);
  auto fail = [&]() -> Rational {
    throw ParseError("invalid scalar '" + std::string(token) + "'");
  };
  if (token.empty()) return fail();

  std::string_view body = token;
  const bool negative = body.front() == '-';
  if (negative) body.remove_prefix(1);

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    BigInt n = to_bigint(num);
    const BigInt d = to_bigint(den);
    if (d == 0) {
      throw ZeroDenominatorError("zero denominator in '" + std::string(token) + "'");
    }
    return Rational(negative ? BigInt(-n) : n, d);
  }

  const auto dot = body.find('.');
  const auto whole = body.substr(0, dot);
  const auto frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (!all_digits(whole)) return fail();
  if (dot != std::string_view::npos && !all_digits(frac)) return fail();

  const BigInt scale = pow(BigInt(10), static_cast<unsigned>(frac.size()));
  BigInt n = to_bigint(whole) * scale + (frac.empty() ? BigInt(0) : to_bigint(frac));
  if (negative) n = -n;
  return Rational(n, scale);
}

std::vector<Rational> parse_scalar_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    while (true) {
      const auto comma = line.find(',');
      const std::string_view field = trim(line.substr(0, comma));
      if (!field.empty()) {
        try {
          values.push_back(parse_scalar(field));
        } catch (const ParseError& e) {
          throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const ZeroDenominatorError& e) {
          throw ZeroDenominatorError("line " + std::to_string(line_no) + ": " + e.what());
        }
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
  }
  return values;
}

}  // namespace worpitzky
