#pragma once

// The four operators as grid procedures. Every call returns its value and the
// complete trace of grid steps that produced it.

#include <cstddef>
#include <stdexcept>

#include "gridarith/digit_tables.hpp"
#include "gridarith/grid.hpp"
#include "gridarith/numeral.hpp"

namespace gridarith {

class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ArithmeticOptions {
  // When true, a mixed-sign grid whose negative side is larger has all signs
  // flipped before borrowing and the result flipped back afterwards. When
  // false, levels that cannot borrow keep a negative digit and the level-pair
  // sign pass reconciles them at the end.
  bool swap_to_larger = true;
};

struct ArithmeticResult {
  PartedNumber value;
  Trace trace;
};

/// Quotient and remainder with quotient * divisor + remainder = dividend.
/// The quotient is truncated toward zero and the remainder takes the
/// dividend's sign.
struct DivisionOutcome {
  PartedNumber quotient;
  PartedNumber remainder;
};

struct DivisionResult {
  DivisionOutcome outcome;
  Trace trace;
  // Dividing rounds performed, including a closing direct division.
  std::size_t rounds = 0;
  // Places both operands were shifted by to make them integers.
  int scale = 0;
};

ArithmeticResult add(const PartedNumber& a, const PartedNumber& b, const ArithmeticOptions& options = {});
ArithmeticResult subtract(const PartedNumber& a, const PartedNumber& b, const ArithmeticOptions& options = {});
ArithmeticResult multiply(const PartedNumber& a, const PartedNumber& b);

/// Throws MathError for a zero divisor.
DivisionResult divide(const PartedNumber& dividend, const PartedNumber& divisor);

}  // namespace gridarith
