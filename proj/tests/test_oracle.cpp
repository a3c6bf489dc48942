#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gridarith/oracle.hpp"

using namespace gridarith;
using namespace gridarith::oracle;

namespace {

BigInteger random_big(std::mt19937_64& rng) {
  std::string s;
  if (rng() % 2) s += '-';
  const int digits = 1 + static_cast<int>(rng() % 40);
  for (int i = 0; i < digits; ++i) s += static_cast<char>('0' + rng() % 10);
  return BigInteger::parse(s);
}

}  // namespace

TEST_CASE("schoolbook examples") {
  CHECK(oracle_add(55, 150) == BigInteger(205));
  CHECK(oracle_mul(2507, 852) == BigInteger(2135964));
  const BigInteger a = BigInteger::parse("123456789012345678901234567890");
  CHECK(oracle_sub(a, a).is_zero());
  CHECK(oracle_divmod(2075, 25) == std::pair<BigInteger, BigInteger>{83, 0});
  CHECK(oracle_divmod(425, 23) == std::pair<BigInteger, BigInteger>{18, 11});
  CHECK(oracle_divmod(a, 1).first == a);
  CHECK_THROWS_AS(oracle_divmod(1, 0), std::domain_error);
  CHECK(oracle_divmod(-7, 2) == std::pair<BigInteger, BigInteger>{-3, -1});
}

TEST_CASE("radix conversion") {
  CHECK(BigInteger::parse("ff", 16) == BigInteger(255));
  CHECK(BigInteger(255).to_string(2) == "11111111");
  CHECK(BigInteger(-35).to_string(36) == "-Z");
  CHECK(BigInteger::parse("18446744073709551616").to_string(16) == "10000000000000000");
  CHECK(BigInteger(INT64_MIN).to_string() == "-9223372036854775808");
  CHECK_THROWS(BigInteger::parse("12", 2));
  CHECK_THROWS(BigInteger::parse("-"));
}

TEST_CASE("rationals stay reduced") {
  const Rational r(BigInteger(10), BigInteger(-4));
  CHECK(r.numerator() == BigInteger(-5));
  CHECK(r.denominator() == BigInteger(2));
  CHECK(r.to_string() == "-5/2");
  CHECK(Rational(BigInteger(1), BigInteger(3)) + Rational(BigInteger(1), BigInteger(6)) ==
        Rational(BigInteger(1), BigInteger(2)));
  CHECK(Rational(BigInteger(1), BigInteger(3)) < Rational(BigInteger(1), BigInteger(2)));
  CHECK_THROWS(Rational(BigInteger(1), BigInteger(0)));
  CHECK(numeral_value("-0.75", 10) == Rational(BigInteger(-3), BigInteger(4)));
  CHECK(numeral_value("1.1", 2) == Rational(BigInteger(3), BigInteger(2)));
}

TEST_CASE("ring axioms and the divmod identity on random triples") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10'000; ++i) {
    const BigInteger a = random_big(rng);
    const BigInteger b = random_big(rng);
    const BigInteger c = random_big(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE((a - b) + b == a);
    if (!b.is_zero()) {
      const auto [q, r] = divmod(a, b);
      REQUIRE(q * b + r == a);
      REQUIRE(r.abs() < b.abs());
      REQUIRE((r.is_zero() || r.signum() == a.signum()));
    }
  }
}

TEST_CASE("to_value and from_value round trip") {
  CHECK(to_value(PartedNumber({Part{2, 2}, Part{5, 0}}, BaseConfig{})) == Rational(205));
  CHECK(to_value(PartedNumber()) == Rational());
  std::mt19937_64 rng(11);
  for (int base : {2, 3, 10, 16}) {
    const BaseConfig cfg(base);
    for (int i = 0; i < 10'000; ++i) {
      const BigInteger v = random_big(rng);
      const PartedNumber n = from_value(v, cfg);
      REQUIRE(n.is_normalized());
      REQUIRE(to_value(n) == Rational(v));
      REQUIRE(from_value(to_value(n).numerator(), cfg).same_value_as(n));
    }
  }
}

TEST_CASE("case streams are reproducible and follow the profile") {
  auto s1 = gen_cases(0);
  auto s2 = gen_cases(0);
  for (int i = 0; i < 100; ++i) {
    const Case a = s1.next();
    const Case b = s2.next();
    REQUIRE(a.base == b.base);
    REQUIRE(a.lhs == b.lhs);
    REQUIRE(a.rhs == b.rhs);
  }

  CaseProfile binary;
  binary.bases = {2};
  auto bits = gen_cases(3, binary);
  for (int i = 0; i < 200; ++i) {
    const Case c = bits.next();
    REQUIRE(c.base == 2);
    REQUIRE(c.lhs.find_first_not_of("01") == std::string::npos);
    REQUIRE(c.rhs.size() <= 12);
  }

  CaseProfile fractional;
  fractional.fractional_depth = 2;
  fractional.signs = SignMix::mixed;
  auto frac = gen_cases(4, fractional);
  int with_point = 0;
  int negative = 0;
  for (int i = 0; i < 200; ++i) {
    const Case c = frac.next();
    with_point += c.lhs.find('.') != std::string::npos;
    negative += c.lhs.front() == '-';
    const auto point = c.lhs.find('.');
    if (point != std::string::npos) REQUIRE(c.lhs.size() - point - 1 <= 2);
  }
  CHECK(with_point > 0);
  CHECK(negative > 0);

  CaseProfile empty;
  empty.bases.clear();
  CHECK_THROWS(gen_cases(0, empty));
}
