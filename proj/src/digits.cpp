#include "digits.hpp"

#include <stdexcept>

namespace gridarith::detail {

namespace {

void trim(Digits& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

}  // namespace

Digits to_digits(const PartedNumber& n) {
  Digits d;
  for (const Part& p : n.parts()) {
    if (p.order < 0) throw std::invalid_argument("digit vectors hold integers only");
    if (d.size() <= static_cast<std::size_t>(p.order)) d.resize(static_cast<std::size_t>(p.order) + 1, 0);
    d[static_cast<std::size_t>(p.order)] = p.digit;
  }
  trim(d);
  return d;
}

PartedNumber from_digits(const Digits& d, const BaseConfig& base, Sign sign) {
  std::vector<Part> parts;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] != 0) parts.push_back(Part{d[i], static_cast<int>(i), sign});
  }
  return PartedNumber(std::move(parts), base);
}

int compare_digits(const Digits& a, const Digits& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Digits times_digit(const Digits& a, int q, const DigitTables& t) {
  Digits out;
  out.reserve(a.size() + 1);
  int carry = 0;
  for (int digit : a) {
    const DigitResult product = t.mul(digit, q);
    const DigitResult sum = t.add(product.digit, carry);
    out.push_back(sum.digit);
    carry = product.carry + sum.carry;
  }
  if (carry != 0) out.push_back(carry);
  trim(out);
  return out;
}

Digits minus(const Digits& a, const Digits& b, const DigitTables& t) {
  if (compare_digits(a, b) < 0) throw std::logic_error("digit subtraction would go negative");
  Digits out(a.size(), 0);
  int borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const DigitResult first = t.sub(a[i], i < b.size() ? b[i] : 0);
    const DigitResult second = t.sub(first.digit, borrow);
    out[i] = second.digit;
    borrow = first.carry + second.carry;
  }
  trim(out);
  return out;
}

DigitQuotient long_divide(const Digits& n, const Digits& d, const DigitTables& t) {
  if (d.empty()) throw std::domain_error("division by zero");
  DigitQuotient out;
  out.quotient.assign(n.size(), 0);
  Digits rem;
  for (std::size_t i = n.size(); i-- > 0;) {
    rem.insert(rem.begin(), n[i]);
    trim(rem);
    int q = 0;
    Digits best;
    for (int trial = t.base() - 1; trial > 0; --trial) {
      Digits product = times_digit(d, trial, t);
      if (compare_digits(product, rem) <= 0) {
        q = trial;
        best = std::move(product);
        break;
      }
    }
    if (q != 0) rem = minus(rem, best, t);
    out.quotient[i] = q;
  }
  trim(out.quotient);
  out.remainder = std::move(rem);
  return out;
}

}  // namespace gridarith::detail
