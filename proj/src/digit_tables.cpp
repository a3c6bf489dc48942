#include "gridarith/digit_tables.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "gridarith/numeral.hpp"

namespace gridarith {

DigitTables::DigitTables(int base) : base_(base) {
  if (base < BaseConfig::kMinBase || base > BaseConfig::kMaxBase) throw std::invalid_argument("base must be in 2..36");
  const auto n = static_cast<std::size_t>(base);
  add_.resize(n * n);
  sub_.resize(n * n);
  mul_.resize(n * n);
  for (int a = 0; a < base; ++a) {
    for (int b = 0; b < base; ++b) {
      const std::size_t i = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
      add_[i] = {(a + b) % base, (a + b) / base};
      sub_[i] = a >= b ? DigitResult{a - b, 0} : DigitResult{a + base - b, 1};
      mul_[i] = {(a * b) % base, (a * b) / base};
    }
  }
  divmod_.resize(n * n * n);
  for (int v = 0; v < base * base; ++v) {
    for (int d = 1; d < base; ++d) {
      divmod_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(d)] = {v / d, v % d};
    }
  }
}

void DigitTables::check_digit(int d) const {
  if (d < 0 || d >= base_) throw std::out_of_range("digit " + std::to_string(d) + " outside 0..base-1");
}

DigitResult DigitTables::add(int a, int b) const {
  check_digit(a);
  check_digit(b);
  return add_[static_cast<std::size_t>(a * base_ + b)];
}

DigitResult DigitTables::sub(int a, int b) const {
  check_digit(a);
  check_digit(b);
  return sub_[static_cast<std::size_t>(a * base_ + b)];
}

DigitResult DigitTables::mul(int a, int b) const {
  check_digit(a);
  check_digit(b);
  return mul_[static_cast<std::size_t>(a * base_ + b)];
}

SmallQuotient DigitTables::divmod(int n, int d) const {
  if (n < 0 || n >= base_ * base_) throw std::out_of_range("small dividend outside 0..base^2-1");
  if (d < 1 || d >= base_) throw std::out_of_range("small divisor outside 1..base-1");
  return divmod_[static_cast<std::size_t>(n * base_ + d)];
}

const DigitTables& digit_tables(int base) {
  if (base < BaseConfig::kMinBase || base > BaseConfig::kMaxBase) throw std::invalid_argument("base must be in 2..36");
  static std::array<std::once_flag, BaseConfig::kMaxBase + 1> once;
  static std::array<std::unique_ptr<DigitTables>, BaseConfig::kMaxBase + 1> tables;
  const auto i = static_cast<std::size_t>(base);
  std::call_once(once[i], [&] { tables[i] = std::make_unique<DigitTables>(base); });
  return *tables[i];
}

DigitResult primitive_digit_op(DigitOp op, int x, int y, int base) {
  const DigitTables& t = digit_tables(base);
  switch (op) {
    case DigitOp::add: return t.add(x, y);
    case DigitOp::sub: return t.sub(x, y);
    case DigitOp::mul: return t.mul(x, y);
  }
  throw std::invalid_argument("unknown digit operation");
}

}  // namespace gridarith
