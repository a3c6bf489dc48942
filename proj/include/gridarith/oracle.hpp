#pragma once

// Conventional arithmetic used only to check the grid engine and the chain
// module. It shares no code with either: magnitudes live in 32-bit limbs,
// whatever radix the numbers under test use.

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridarith/numeral.hpp"

namespace gridarith::oracle {

class BigInteger {
 public:
  BigInteger() = default;
  BigInteger(std::int64_t value);  // NOLINT(google-explicit-constructor)

  /// Digits in `radix` (2..36, case-insensitive), optional leading '-'.
  static BigInteger parse(std::string_view text, int radix = 10);

  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_negative() const noexcept { return negative_; }
  int signum() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }
  BigInteger abs() const;
  BigInteger operator-() const;

  std::string to_string(int radix = 10) const;

  friend BigInteger operator+(const BigInteger& a, const BigInteger& b);
  friend BigInteger operator-(const BigInteger& a, const BigInteger& b);
  friend BigInteger operator*(const BigInteger& a, const BigInteger& b);
  friend bool operator==(const BigInteger&, const BigInteger&) = default;
  friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b);

  /// Quotient rounded toward zero; remainder has the dividend's sign.
  friend std::pair<BigInteger, BigInteger> divmod(const BigInteger& a, const BigInteger& b);

 private:
  using Limbs = std::vector<std::uint32_t>;

  static int compare_magnitude(const Limbs& a, const Limbs& b);
  static Limbs add_magnitude(const Limbs& a, const Limbs& b);
  static Limbs sub_magnitude(const Limbs& a, const Limbs& b);
  static Limbs mul_magnitude(const Limbs& a, const Limbs& b);
  static std::pair<Limbs, Limbs> divmod_magnitude(const Limbs& a, const Limbs& b);
  static void trim(Limbs& v);

  BigInteger(Limbs limbs, bool negative);

  // Little-endian, no leading zero limbs; zero is empty and non-negative.
  Limbs limbs_;
  bool negative_ = false;
};

BigInteger oracle_add(const BigInteger& a, const BigInteger& b);
BigInteger oracle_sub(const BigInteger& a, const BigInteger& b);
BigInteger oracle_mul(const BigInteger& a, const BigInteger& b);
/// Throws std::domain_error for a zero divisor.
std::pair<BigInteger, BigInteger> oracle_divmod(const BigInteger& a, const BigInteger& b);

BigInteger gcd(BigInteger a, BigInteger b);
BigInteger pow(const BigInteger& base, unsigned exponent);

/// Exact fraction, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInteger value);  // NOLINT(google-explicit-constructor)
  Rational(BigInteger numerator, BigInteger denominator);

  const BigInteger& numerator() const noexcept { return num_; }
  const BigInteger& denominator() const noexcept { return den_; }
  bool is_integer() const { return den_ == BigInteger(1); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  BigInteger num_{0};
  BigInteger den_{1};
};

/// Exact value of a part collection (normalized or not).
Rational to_value(const PartedNumber& n);
/// Normalized parts of an integer in the given base.
PartedNumber from_value(const BigInteger& v, const BaseConfig& base);
/// Value of a numeral, parsed without the engine's parser.
Rational numeral_value(std::string_view text, int radix);

enum class SignMix { non_negative, mixed };

/// What gen_cases draws.
///
/// Per case: a base uniformly from `bases`; per operand, an integer digit
/// count uniform in [min_digits, max_digits] (leading digit non-zero) and a
/// fractional digit count uniform in [0, fractional_depth]; every other digit
/// uniform over the base. With SignMix::mixed each operand is negative with
/// probability 1/2. With allow_zero, each operand is "0" with probability
/// 1/32.
struct CaseProfile {
  int min_digits = 1;
  int max_digits = 12;
  std::vector<int> bases{2, 3, 10, 16};
  SignMix signs = SignMix::non_negative;
  int fractional_depth = 0;
  bool allow_zero = false;
};

struct Case {
  int base = 10;
  std::string lhs;
  std::string rhs;
};

/// Deterministic case stream: the same seed and profile always yield the
/// same sequence.
class CaseStream {
 public:
  CaseStream(std::uint64_t seed, CaseProfile profile);
  Case next();

 private:
  std::string numeral(int base);

  std::mt19937_64 rng_;
  CaseProfile profile_;
};

CaseStream gen_cases(std::uint64_t seed, CaseProfile profile = {});

}  // namespace gridarith::oracle
