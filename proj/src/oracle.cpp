#include "gridarith/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gridarith::oracle {

namespace {

int glyph_value(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isdigit(u)) return c - '0';
  if (std::isalpha(u)) return std::toupper(u) - 'A' + 10;
  return -1;
}

}  // namespace

BigInteger::BigInteger(std::int64_t value) {
  negative_ = value < 0;
  auto magnitude = negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  while (magnitude != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(magnitude));
    magnitude >>= 32;
  }
}

BigInteger::BigInteger(Limbs limbs, bool negative) : limbs_(std::move(limbs)), negative_(negative) {
  trim(limbs_);
  if (limbs_.empty()) negative_ = false;
}

void BigInteger::trim(Limbs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInteger BigInteger::parse(std::string_view text, int radix) {
  if (radix < 2 || radix > 36) throw std::invalid_argument("radix must be in 2..36");
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("no digits");
  Limbs acc;
  for (char c : text) {
    const int d = glyph_value(c);
    if (d < 0 || d >= radix) throw std::invalid_argument("digit outside radix");
    // acc = acc * radix + d
    std::uint64_t carry = static_cast<std::uint64_t>(d);
    for (auto& limb : acc) {
      const std::uint64_t t = static_cast<std::uint64_t>(limb) * static_cast<std::uint64_t>(radix) + carry;
      limb = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    if (carry != 0) acc.push_back(static_cast<std::uint32_t>(carry));
  }
  return BigInteger(std::move(acc), negative);
}

BigInteger BigInteger::abs() const { return BigInteger(limbs_, false); }

BigInteger BigInteger::operator-() const { return BigInteger(limbs_, !negative_); }

std::string BigInteger::to_string(int radix) const {
  if (radix < 2 || radix > 36) throw std::invalid_argument("radix must be in 2..36");
  if (is_zero()) return "0";
  static constexpr char kGlyphs[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::string out;
  Limbs v = limbs_;
  while (!v.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | v[i];
      v[i] = static_cast<std::uint32_t>(cur / static_cast<std::uint64_t>(radix));
      rem = cur % static_cast<std::uint64_t>(radix);
    }
    trim(v);
    out.push_back(kGlyphs[rem]);
  }
  if (negative_) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

int BigInteger::compare_magnitude(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

BigInteger::Limbs BigInteger::add_magnitude(const Limbs& a, const Limbs& b) {
  Limbs out(std::max(a.size(), b.size()) + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const std::uint64_t t = carry + (i < a.size() ? a[i] : 0u) + (i < b.size() ? b[i] : 0u);
    out[i] = static_cast<std::uint32_t>(t);
    carry = t >> 32;
  }
  out.back() = static_cast<std::uint32_t>(carry);
  trim(out);
  return out;
}

// Requires |a| >= |b|.
BigInteger::Limbs BigInteger::sub_magnitude(const Limbs& a, const Limbs& b) {
  Limbs out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    borrow = 0;
    if (t < 0) {
      t += std::int64_t{1} << 32;
      borrow = 1;
    }
    out[i] = static_cast<std::uint32_t>(t);
  }
  trim(out);
  return out;
}

BigInteger::Limbs BigInteger::mul_magnitude(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint64_t t = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      const std::uint64_t t = static_cast<std::uint64_t>(out[k]) + carry;
      out[k] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
      ++k;
    }
  }
  trim(out);
  return out;
}

// Restoring shift-subtract division, one bit at a time.
std::pair<BigInteger::Limbs, BigInteger::Limbs> BigInteger::divmod_magnitude(const Limbs& a, const Limbs& b) {
  if (b.empty()) throw std::domain_error("division by zero");
  if (compare_magnitude(a, b) < 0) return {{}, a};
  Limbs quotient(a.size(), 0);
  Limbs rem;
  for (std::size_t bit = a.size() * 32; bit-- > 0;) {
    // rem = rem * 2 + bit
    std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
    for (auto& limb : rem) {
      const std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry != 0) rem.push_back(carry);
    if (compare_magnitude(rem, b) >= 0) {
      rem = sub_magnitude(rem, b);
      quotient[bit / 32] |= 1u << (bit % 32);
    }
  }
  trim(quotient);
  return {quotient, rem};
}

BigInteger operator+(const BigInteger& a, const BigInteger& b) {
  if (a.negative_ == b.negative_) return BigInteger(BigInteger::add_magnitude(a.limbs_, b.limbs_), a.negative_);
  const int c = BigInteger::compare_magnitude(a.limbs_, b.limbs_);
  if (c == 0) return BigInteger();
  if (c > 0) return BigInteger(BigInteger::sub_magnitude(a.limbs_, b.limbs_), a.negative_);
  return BigInteger(BigInteger::sub_magnitude(b.limbs_, a.limbs_), b.negative_);
}

BigInteger operator-(const BigInteger& a, const BigInteger& b) { return a + (-b); }

BigInteger operator*(const BigInteger& a, const BigInteger& b) {
  return BigInteger(BigInteger::mul_magnitude(a.limbs_, b.limbs_), a.negative_ != b.negative_);
}

std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) {
  if (a.signum() != b.signum()) return a.signum() <=> b.signum();
  const int c = BigInteger::compare_magnitude(a.limbs_, b.limbs_);
  const int signed_c = a.negative_ ? -c : c;
  return signed_c <=> 0;
}

std::pair<BigInteger, BigInteger> divmod(const BigInteger& a, const BigInteger& b) {
  auto [q, r] = BigInteger::divmod_magnitude(a.limbs_, b.limbs_);
  return {BigInteger(std::move(q), a.negative_ != b.negative_), BigInteger(std::move(r), a.negative_)};
}

BigInteger oracle_add(const BigInteger& a, const BigInteger& b) { return a + b; }
BigInteger oracle_sub(const BigInteger& a, const BigInteger& b) { return a - b; }
BigInteger oracle_mul(const BigInteger& a, const BigInteger& b) { return a * b; }
std::pair<BigInteger, BigInteger> oracle_divmod(const BigInteger& a, const BigInteger& b) { return divmod(a, b); }

BigInteger gcd(BigInteger a, BigInteger b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInteger r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInteger pow(const BigInteger& base, unsigned exponent) {
  BigInteger result(1);
  BigInteger square = base;
  while (exponent != 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

Rational::Rational(BigInteger value) : num_(std::move(value)), den_(1) {}

Rational::Rational(BigInteger numerator, BigInteger denominator) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  if (denominator.is_negative()) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const BigInteger g = gcd(numerator, denominator);
  num_ = divmod(numerator, g).first;
  den_ = divmod(denominator, g).first;
}

std::string Rational::to_string() const {
  return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational to_value(const PartedNumber& n) {
  const BigInteger radix(n.base());
  Rational total;
  for (const Part& p : n.parts()) {
    BigInteger digit(p.digit);
    if (p.sign == Sign::negative) digit = -digit;
    const BigInteger scale = pow(radix, static_cast<unsigned>(p.order < 0 ? -p.order : p.order));
    total = total + (p.order >= 0 ? Rational(digit * scale) : Rational(digit, scale));
  }
  return total;
}

PartedNumber from_value(const BigInteger& v, const BaseConfig& base) {
  const Sign sign = v.is_negative() ? Sign::negative : Sign::positive;
  const BigInteger radix(base.base());
  BigInteger rest = v.abs();
  std::vector<Part> parts;
  int order = 0;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, radix);
    if (!r.is_zero()) parts.push_back(Part{std::stoi(r.to_string()), order, sign});
    rest = std::move(q);
    ++order;
  }
  std::reverse(parts.begin(), parts.end());
  return PartedNumber(std::move(parts), base);
}

Rational numeral_value(std::string_view text, int radix) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto point = text.find('.');
  std::string digits(text.substr(0, point));
  unsigned fraction = 0;
  if (point != std::string_view::npos) {
    const auto tail = text.substr(point + 1);
    digits += tail;
    fraction = static_cast<unsigned>(tail.size());
  }
  BigInteger whole = BigInteger::parse(digits, radix);
  if (negative) whole = -whole;
  return Rational(whole, pow(BigInteger(radix), fraction));
}

CaseStream::CaseStream(std::uint64_t seed, CaseProfile profile) : rng_(seed), profile_(std::move(profile)) {
  if (profile_.bases.empty()) throw std::invalid_argument("case profile needs at least one base");
  if (profile_.min_digits < 1 || profile_.max_digits < profile_.min_digits) {
    throw std::invalid_argument("case profile digit range is empty");
  }
  if (profile_.fractional_depth < 0) throw std::invalid_argument("fractional depth must be non-negative");
}

std::string CaseStream::numeral(int base) {
  static constexpr char kGlyphs[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  auto below = [this](std::uint64_t n) { return rng_() % n; };
  const auto b = static_cast<std::uint64_t>(base);

  if (profile_.allow_zero && below(32) == 0) return "0";
  std::string out;
  if (profile_.signs == SignMix::mixed && below(2) == 1) out.push_back('-');
  const auto span = static_cast<std::uint64_t>(profile_.max_digits - profile_.min_digits + 1);
  const int digits = profile_.min_digits + static_cast<int>(below(span));
  out.push_back(kGlyphs[1 + below(b - 1)]);
  for (int i = 1; i < digits; ++i) out.push_back(kGlyphs[below(b)]);
  const int fraction = static_cast<int>(below(static_cast<std::uint64_t>(profile_.fractional_depth) + 1));
  if (fraction > 0) {
    out.push_back('.');
    for (int i = 0; i < fraction; ++i) out.push_back(kGlyphs[below(b)]);
  }
  return out;
}

Case CaseStream::next() {
  Case c;
  c.base = profile_.bases[rng_() % profile_.bases.size()];
  c.lhs = numeral(c.base);
  c.rhs = numeral(c.base);
  return c;
}

CaseStream gen_cases(std::uint64_t seed, CaseProfile profile) { return CaseStream(seed, std::move(profile)); }

}  // namespace gridarith::oracle
