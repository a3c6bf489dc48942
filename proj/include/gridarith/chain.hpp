#pragma once

// Chain division: a divisor split into parts d_1..d_k, each residue feeding
// the next division, evaluated exactly over rationals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridarith::chain {

using Integer = mpz_class;

class ChainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact fraction, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
  Rational(long value) : Rational(Integer(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int signum() const { return sgn(value_); }
  Rational abs() const;
  /// "n" or "n/d" in decimal.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws ChainError for a zero divisor.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

/// Parts d_1..d_k of a divisor: every part >= 1 and the parts sum to it.
class DivisorPartition {
 public:
  /// The trivial partition {1} of 1.
  DivisorPartition() : parts_{Integer(1)}, divisor_(1) {}
  /// Throws ChainError on an empty list, a part below 1, or a sum mismatch.
  DivisorPartition(std::vector<Integer> parts, const Integer& divisor);
  /// Divisor taken as the sum of the parts.
  static DivisorPartition of(std::vector<Integer> parts);

  const std::vector<Integer>& parts() const noexcept { return parts_; }
  const Integer& divisor() const noexcept { return divisor_; }
  std::size_t size() const noexcept { return parts_.size(); }

 private:
  std::vector<Integer> parts_;
  Integer divisor_;
};

struct ChainStep {
  std::size_t index = 1;  // 1-based
  Integer divisor_part;
  Rational residue;
};

struct ChainResult {
  Rational dividend;
  DivisorPartition partition;
  std::vector<ChainStep> steps;
  Rational result;  // r_1 - r_2 - ... - r_k
};

/// r_1 = N/d_1, r_2 = r_1*d_2/D, r_i = r_{i-1}*d_i/d_{i-1} for i >= 3.
/// Throws ChainError for a zero divisor or a partition of a different
/// divisor.
ChainResult chain_divide(const Rational& dividend, const Integer& divisor, const DivisorPartition& partition);

/// Chooses the partition of `divisor` used at an expansion site `level`
/// steps below the root (1 for the root's own site).
using PartitionChooser = std::function<DivisorPartition(int level, const Integer& divisor)>;

/// A chain whose r_2 division by the whole divisor may itself be a chain.
struct ChainNode {
  ChainResult chain;
  // Empty, or the single chain that replaced r_2's division by the divisor.
  std::vector<ChainNode> expansion;

  int depth() const;
};

/// Replaces the r_2 division by a nested chain, `depth` levels deep. Chains
/// with a single part have no expansion site and stay leaves. Throws
/// ChainError when the chooser returns a partition of another divisor.
ChainNode expand_chain(const ChainResult& cr, const PartitionChooser& chooser, int depth);

struct TransitionReport {
  std::vector<Integer> d_deltas;   // d_{i+1} - d_i
  std::vector<Rational> r_deltas;  // r_{i+1} - r_i
  Rational max_abs_r_delta;
  bool monotone_decreasing_r = false;
};

/// Throws ChainError when the chain has fewer than two parts.
TransitionReport transitions(const ChainResult& cr);

enum class Rounding { truncate, half_up };

/// Rounds to `precision` fractional digits in `base`. Truncation goes toward
/// zero; half-up rounds ties away from zero.
Rational round_to(const Rational& value, int precision, Rounding rounding, int base = 10);

/// Fixed-point text with exactly `precision` fractional digits.
std::string format_decimal(const Rational& value, int precision, Rounding rounding, int base = 10);

struct RoundingSpec {
  int precision = 2;
  Rounding rounding = Rounding::truncate;
  int base = 10;
};

/// The chain recomputed with every residue rounded before it is used.
struct RoundedChain {
  std::vector<Rational> residues;
  Rational result;
};

RoundedChain evaluate_rounded(const ChainResult& cr, const RoundingSpec& spec);

/// |rounded result - exact result|; zero without a rounding spec.
Rational fit_residual(const ChainResult& cr, const std::optional<RoundingSpec>& spec);

/// Header "i,d,r_num,r_den,r_decimal", then one row per step.
void write_csv(std::ostream& out, const ChainResult& cr, const RoundingSpec& spec);

}  // namespace gridarith::chain
