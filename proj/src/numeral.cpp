#include "gridarith/numeral.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gridarith {

namespace {

constexpr std::string_view kDefaultGlyphs = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

void check_base(int base) {
  if (base < BaseConfig::kMinBase || base > BaseConfig::kMaxBase) {
    throw std::invalid_argument("base must be in 2..36, got " + std::to_string(base));
  }
}

}  // namespace

BaseConfig::BaseConfig(int base) : base_(base), case_insensitive_(base > 10) {
  check_base(base);
  std::copy_n(kDefaultGlyphs.begin(), base, glyphs_.begin());
}

BaseConfig::BaseConfig(int base, std::string_view alphabet) : base_(base), case_insensitive_(false) {
  check_base(base);
  if (alphabet.size() != static_cast<std::size_t>(base)) {
    throw std::invalid_argument("alphabet must have exactly one glyph per digit value");
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const char g = alphabet[i];
    if (g == '-' || g == '.' || std::isspace(static_cast<unsigned char>(g))) {
      throw std::invalid_argument("alphabet glyphs may not be '-', '.' or whitespace");
    }
    if (alphabet.find(g, i + 1) != std::string_view::npos) {
      throw std::invalid_argument(std::string("duplicate glyph '") + g + "' in alphabet");
    }
    glyphs_[i] = g;
  }
}

char BaseConfig::glyph(int digit) const {
  if (digit < 0 || digit >= base_) throw std::out_of_range("digit outside the alphabet");
  return glyphs_[static_cast<std::size_t>(digit)];
}

std::optional<int> BaseConfig::digit_value(char g) const noexcept {
  if (case_insensitive_) g = static_cast<char>(std::toupper(static_cast<unsigned char>(g)));
  for (int i = 0; i < base_; ++i) {
    if (glyphs_[static_cast<std::size_t>(i)] == g) return i;
  }
  return std::nullopt;
}

bool PartedNumber::is_normalized() const noexcept {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Part& p = parts_[i];
    if (p.digit < 1 || p.digit >= base()) return false;
    if (p.sign != parts_.front().sign) return false;
    if (i > 0 && parts_[i - 1].order <= p.order) return false;
  }
  return true;
}

bool PartedNumber::is_integer() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](const Part& p) { return p.order >= 0; });
}

int PartedNumber::max_order() const noexcept {
  int m = parts_.empty() ? 0 : parts_.front().order;
  for (const Part& p : parts_) m = std::max(m, p.order);
  return m;
}

int PartedNumber::min_order() const noexcept {
  int m = parts_.empty() ? 0 : parts_.front().order;
  for (const Part& p : parts_) m = std::min(m, p.order);
  return m;
}

int PartedNumber::fractional_depth() const noexcept { return parts_.empty() ? 0 : std::max(0, -min_order()); }

PartedNumber PartedNumber::negated() const {
  PartedNumber out = *this;
  for (Part& p : out.parts_) p.sign = flip(p.sign);
  return out;
}

PartedNumber PartedNumber::magnitude() const {
  PartedNumber out = *this;
  for (Part& p : out.parts_) p.sign = Sign::positive;
  return out;
}

PartedNumber PartedNumber::shifted(int places) const {
  PartedNumber out = *this;
  for (Part& p : out.parts_) p.order += places;
  return out;
}

bool PartedNumber::same_value_as(const PartedNumber& other) const {
  if (base() != other.base() || parts_.size() != other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Part& a = parts_[i];
    const Part& b = other.parts_[i];
    if (a.digit != b.digit || a.order != b.order || a.sign != b.sign) return false;
  }
  return true;
}

PartedNumber parse_numeral(std::string_view text, const BaseConfig& cfg) {
  using Kind = ParseError::Kind;
  if (text.empty()) throw ParseError(Kind::empty_input, 0, "empty numeral");

  std::size_t pos = 0;
  Sign sign = Sign::positive;
  if (text[0] == '-') {
    sign = Sign::negative;
    pos = 1;
    if (text.size() == 1) throw ParseError(Kind::bare_sign, 0, "sign without digits at position 0");
  }

  std::vector<int> integer_digits;
  std::vector<int> fraction_digits;
  std::optional<std::size_t> point;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (point) {
        throw ParseError(Kind::multiple_points, pos, "second radix point at position " + std::to_string(pos));
      }
      if (integer_digits.empty()) {
        throw ParseError(Kind::missing_digits, pos, "radix point without leading digits at position " + std::to_string(pos));
      }
      point = pos;
      continue;
    }
    const auto value = cfg.digit_value(c);
    if (!value) {
      throw ParseError(Kind::invalid_glyph, pos,
                       std::string("invalid digit '") + c + "' at position " + std::to_string(pos));
    }
    (point ? fraction_digits : integer_digits).push_back(*value);
  }
  if (point && fraction_digits.empty()) {
    throw ParseError(Kind::missing_digits, *point, "radix point without trailing digits at position " + std::to_string(*point));
  }

  std::vector<Part> parts;
  const int int_len = static_cast<int>(integer_digits.size());
  for (int i = 0; i < int_len; ++i) {
    const int d = integer_digits[static_cast<std::size_t>(i)];
    if (d != 0) parts.push_back(Part{d, int_len - 1 - i, sign});
  }
  for (std::size_t q = 0; q < fraction_digits.size(); ++q) {
    const int d = fraction_digits[q];
    if (d != 0) parts.push_back(Part{d, -static_cast<int>(q) - 1, sign});
  }
  return PartedNumber(std::move(parts), cfg);
}

std::vector<PartedNumber> split(const PartedNumber& n, Tag first_tag) {
  std::vector<PartedNumber> out;
  out.reserve(n.parts().size());
  Tag tag = first_tag;
  for (Part p : n.parts()) {
    p.tag = tag++;
    out.emplace_back(std::vector<Part>{p}, n.base_config());
  }
  return out;
}

std::string rejoin(const std::vector<Part>& parts, const BaseConfig& cfg) {
  if (parts.empty()) return "0";
  std::map<int, int, std::greater<>> by_order;
  const Sign sign = parts.front().sign;
  for (const Part& p : parts) {
    if (p.sign != sign) throw std::invalid_argument("rejoin: parts have mixed signs");
    if (p.digit < 1 || p.digit >= cfg.base()) throw std::invalid_argument("rejoin: digit outside 1..base-1");
    if (!by_order.emplace(p.order, p.digit).second) {
      throw std::invalid_argument("rejoin: duplicate order " + std::to_string(p.order));
    }
  }
  const int high = std::max(0, by_order.begin()->first);
  const int low = std::min(0, by_order.rbegin()->first);

  std::string out;
  if (sign == Sign::negative) out.push_back('-');
  for (int order = high; order >= low; --order) {
    if (order == -1) out.push_back('.');
    const auto it = by_order.find(order);
    out.push_back(cfg.glyph(it == by_order.end() ? 0 : it->second));
  }
  return out;
}

PartedNumber normalize(const PartedNumber& n) {
  const int base = n.base();
  std::map<int, long long> sums;
  std::optional<Sign> sign;
  for (const Part& p : n.parts()) {
    if (p.digit < 0) throw std::invalid_argument("normalize: negative digit");
    if (p.digit == 0) continue;
    if (sign && *sign != p.sign) throw std::invalid_argument("normalize: mixed signs");
    sign = p.sign;
    sums[p.order] += p.digit;
  }

  // Carry upward; the map grows as carries reach new orders.
  for (auto it = sums.begin(); it != sums.end(); ++it) {
    const long long carry = it->second / base;
    if (carry == 0) continue;
    it->second %= base;
    sums[it->first + 1] += carry;
  }

  std::vector<Part> parts;
  for (auto it = sums.rbegin(); it != sums.rend(); ++it) {
    if (it->second != 0) parts.push_back(Part{static_cast<int>(it->second), it->first, *sign});
  }
  return PartedNumber(std::move(parts), n.base_config());
}

AlignedPair align_orders(const PartedNumber& a, const PartedNumber& b) {
  const int shift = std::max(a.fractional_depth(), b.fractional_depth());
  return AlignedPair{a.shifted(shift), b.shifted(shift), shift};
}

std::strong_ordering compare_magnitude(const PartedNumber& a, const PartedNumber& b) {
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].order != pb[i].order) return pa[i].order <=> pb[i].order;
    if (pa[i].digit != pb[i].digit) return pa[i].digit <=> pb[i].digit;
  }
  return pa.size() - i <=> pb.size() - i;
}

}  // namespace gridarith
