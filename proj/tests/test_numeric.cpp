#include "worpitzky/errors.hpp"
#include "worpitzky/numeric.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace worpitzky {
namespace {

TEST(ParseScalar, Examples) {
  EXPECT_EQ(parse_scalar("0.0036"), Rational(9, 2500));
  EXPECT_EQ(parse_scalar("10"), Rational(10));
  EXPECT_EQ(parse_scalar("1472.79189"), Rational(147279189, 100000));
}

TEST(ParseScalar, GrammarForms) {
  EXPECT_EQ(parse_scalar("-12"), Rational(-12));
  EXPECT_EQ(parse_scalar("7/3"), Rational(7, 3));
  EXPECT_EQ(parse_scalar("-14/6"), Rational(-7, 3));
  EXPECT_EQ(parse_scalar("3.3"), Rational(33, 10));
  EXPECT_EQ(parse_scalar("-0.0036"), Rational(-9, 2500));
  EXPECT_EQ(parse_scalar("  0.1 \t"), Rational(1, 10));
  EXPECT_EQ(parse_scalar("-0"), Rational(0));
  EXPECT_EQ(parse_scalar("0089.0090"), Rational(89009, 1000));
  EXPECT_EQ(parse_scalar("08/09"), Rational(8, 9));
  EXPECT_EQ(parse_scalar("123456789012345678901234567890"),
            Rational(BigInt("123456789012345678901234567890")));
}

TEST(ParseScalar, RejectsMalformed) {
  for (const char* bad : {"", "  ", "abc", "1.", ".5", "1e3", "1/2/3", "--1", "+1", "1.2.3",
                          "1 2", "0x10", "1/-2", "/3", "3/"}) {
    EXPECT_THROW(parse_scalar(bad), ParseError) << "'" << bad << "'";
  }
}

TEST(ParseScalar, ErrorNamesToken) {
  try {
    parse_scalar("12a");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("12a"), std::string::npos);
  }
}

TEST(ParseScalar, ZeroDenominatorIsDistinct) {
  EXPECT_THROW(parse_scalar("3/0"), ZeroDenominatorError);
  EXPECT_THROW(parse_scalar("-3/000"), ZeroDenominatorError);
}

TEST(ParseScalarList, SeparatorsAndComments) {
  const auto v = parse_scalar_list("# header\n1, 2,3\n\n  4.5\n# mid\n7/2,\n");
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v[2], Rational(3));
  EXPECT_EQ(v[3], Rational(9, 2));
  EXPECT_EQ(v[4], Rational(7, 2));
  EXPECT_TRUE(parse_scalar_list("").empty());
  EXPECT_TRUE(parse_scalar_list("# only a comment\n").empty());
}

TEST(ParseScalarList, ErrorCarriesLineNumber) {
  try {
    parse_scalar_list("1\n2\nfoo\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("foo"), std::string::npos);
  }
}

TEST(Rational, CanonicalForm) {
  const Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  const Rational zero(BigInt(0), BigInt(-17));
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), ZeroDenominatorError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, Rendering) {
  EXPECT_EQ(Rational(9, 2500).to_string(), "9/2500");
  EXPECT_EQ(Rational(9, 2500).to_display_string(), "0.0036");
  EXPECT_EQ(parse_scalar("0.00505").to_display_string(), "0.00505");
  EXPECT_EQ(parse_scalar("-206.49095").to_display_string(), "-206.49095");
  EXPECT_EQ(Rational(1, 3).to_display_string(), "1/3");
  EXPECT_EQ(Rational(-4).to_display_string(), "-4");
  EXPECT_EQ(Rational(0).to_string(), "0");
}

TEST(Rational, PowerOfZero) {
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
  EXPECT_EQ(pow(Rational(0), 3), Rational(0));
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
}

TEST(Binomial, PascalRule) {
  for (unsigned n = 1; n <= 30; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
    }
  }
}

TEST(Properties, DecimalTimesPowerOfTenIsInteger) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> digits(0, 9);
  std::uniform_int_distribution<int> len(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    std::string whole, frac;
    for (int i = len(rng); i > 0; --i) whole += static_cast<char>('0' + digits(rng));
    for (int i = len(rng); i > 0; --i) frac += static_cast<char>('0' + digits(rng));
    const std::string text = (trial % 2 ? "-" : "") + whole + "." + frac;
    const Rational scaled = parse_scalar(text) * Rational(pow(BigInt(10), frac.size()));
    EXPECT_TRUE(scaled.is_integer()) << text;
    BigInt digits_value = 0;
    for (char ch : whole + frac) digits_value = digits_value * 10 + (ch - '0');
    EXPECT_EQ(scaled, Rational(trial % 2 ? BigInt(-digits_value) : digits_value)) << text;
  }
}

TEST(Properties, AdditionMatchesCrossMultiplication) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational a = testing::random_rational(rng, 1000000, 1000000);
    const Rational b = testing::random_rational(rng, 1000000, 1000000);
    const BigInt num = a.numerator() * b.denominator() + b.numerator() * a.denominator();
    const BigInt den = a.denominator() * b.denominator();
    const Rational sum = a + b;
    EXPECT_EQ(sum, Rational(num, den));
    EXPECT_EQ(sum.numerator() * den, num * sum.denominator());
    EXPECT_EQ(gcd(abs(sum.numerator()), sum.denominator()), 1);
    EXPECT_GT(sum.denominator(), 0);
  }
}

TEST(Properties, CanonicalStringRoundTrips) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational r = testing::random_rational(rng, 100000, 5000);
    EXPECT_EQ(parse_scalar(r.to_string()), r);
    EXPECT_EQ(parse_scalar(r.to_display_string()), r);
  }
}

}  // namespace
}  // namespace worpitzky
