#pragma once

// Little-endian digit vectors driven by the rote tables. This is the
// conventional fallback the division procedure uses for the one division it
// cannot break into parts: a shifted part, or a recombined dividend, by the
// whole divisor.

#include <utility>
#include <vector>

#include "gridarith/digit_tables.hpp"
#include "gridarith/numeral.hpp"

namespace gridarith::detail {

using Digits = std::vector<int>;

/// Digits of a non-negative integer number; index = order.
Digits to_digits(const PartedNumber& n);
PartedNumber from_digits(const Digits& d, const BaseConfig& base, Sign sign = Sign::positive);

int compare_digits(const Digits& a, const Digits& b);
Digits times_digit(const Digits& a, int q, const DigitTables& t);
/// a - b for a >= b.
Digits minus(const Digits& a, const Digits& b, const DigitTables& t);

struct DigitQuotient {
  Digits quotient;
  Digits remainder;
};

/// Schoolbook long division, one quotient digit per dividend digit.
DigitQuotient long_divide(const Digits& n, const Digits& d, const DigitTables& t);

}  // namespace gridarith::detail
