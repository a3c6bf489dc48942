#pragma once

// Single-digit lookup tables: the only arithmetic the grid algorithms do
// without moving entries around.

#include <cstdint>
#include <vector>

namespace gridarith {

/// Result digit plus the carry (add, mul) or borrow flag (sub).
struct DigitResult {
  int digit = 0;
  int carry = 0;

  friend bool operator==(const DigitResult&, const DigitResult&) = default;
};

struct SmallQuotient {
  int quotient = 0;
  int remainder = 0;
};

class DigitTables {
 public:
  explicit DigitTables(int base);

  int base() const noexcept { return base_; }

  /// a + b = carry * base + digit.
  DigitResult add(int a, int b) const;
  /// a - b, borrowing one base unit when a < b: digit = a + carry * base - b.
  DigitResult sub(int a, int b) const;
  /// a * b = carry * base + digit.
  DigitResult mul(int a, int b) const;
  /// n / d for n in 0..base*base-1 and d in 1..base-1.
  SmallQuotient divmod(int n, int d) const;

 private:
  void check_digit(int d) const;

  int base_;
  std::vector<DigitResult> add_;
  std::vector<DigitResult> sub_;
  std::vector<DigitResult> mul_;
  std::vector<SmallQuotient> divmod_;
};

/// Shared, lazily built tables for a radix in 2..36.
const DigitTables& digit_tables(int base);

enum class DigitOp { add, sub, mul };

/// Table lookup for one pair of digits. Throws std::out_of_range when a digit
/// is outside 0..base-1.
DigitResult primitive_digit_op(DigitOp op, int x, int y, int base);

}  // namespace gridarith
