#pragma once

// Numbers as collections of single-digit parts with signed orders of
// magnitude, plus conversion to and from positional numerals.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridarith {

/// Radix plus the glyph used for each digit value.
///
/// The default alphabet is 0-9A-Z truncated to the radix; lookups through it
/// are case-insensitive for bases above 10. A custom alphabet must supply
/// exactly `base` distinct glyphs and is matched case-sensitively.
class BaseConfig {
 public:
  static constexpr int kMinBase = 2;
  static constexpr int kMaxBase = 36;

  explicit BaseConfig(int base = 10);
  BaseConfig(int base, std::string_view alphabet);

  int base() const noexcept { return base_; }
  char glyph(int digit) const;
  std::optional<int> digit_value(char glyph) const noexcept;
  std::string alphabet() const { return std::string(glyphs_.data(), static_cast<std::size_t>(base_)); }

  friend bool operator==(const BaseConfig&, const BaseConfig&) = default;

 private:
  int base_;
  bool case_insensitive_;
  std::array<char, kMaxBase> glyphs_{};
};

enum class Sign : std::uint8_t { positive, negative };

constexpr Sign flip(Sign s) noexcept { return s == Sign::positive ? Sign::negative : Sign::positive; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::positive : Sign::negative; }

/// Opaque identifier used to follow a part through a grid computation.
using Tag = std::uint32_t;
inline constexpr Tag kNoTag = 0;

/// One non-zero digit at a signed order of magnitude: sign * digit * base^order.
///
/// `digit` may temporarily exceed base-1 (or be zero) in collections handed to
/// normalize(); everywhere else it is in 1..base-1.
struct Part {
  int digit = 0;
  int order = 0;
  Sign sign = Sign::positive;
  Tag tag = kNoTag;

  friend bool operator==(const Part&, const Part&) = default;
};

/// A number as a collection of parts.
///
/// Normalized form: at most one part per order, parts sorted by descending
/// order, every digit in 1..base-1, one shared sign. Zero has no parts.
class PartedNumber {
 public:
  explicit PartedNumber(BaseConfig base = BaseConfig{}) : base_(base) {}
  PartedNumber(std::vector<Part> parts, BaseConfig base) : parts_(std::move(parts)), base_(base) {}

  const std::vector<Part>& parts() const noexcept { return parts_; }
  const BaseConfig& base_config() const noexcept { return base_; }
  int base() const noexcept { return base_.base(); }

  bool is_zero() const noexcept { return parts_.empty(); }
  bool is_normalized() const noexcept;
  bool is_integer() const noexcept;
  /// Sign of a normalized number; zero reports positive.
  Sign sign() const noexcept { return parts_.empty() ? Sign::positive : parts_.front().sign; }
  /// Highest and lowest order present. Undefined for zero.
  int max_order() const noexcept;
  int min_order() const noexcept;
  /// max(0, -min_order()): how many places the radix point sits left of units.
  int fractional_depth() const noexcept;

  PartedNumber negated() const;
  PartedNumber magnitude() const;
  /// Every order increased by `places` (value scaled by base^places).
  PartedNumber shifted(int places) const;

  /// Equality of represented parts (digit, order, sign); tags are ignored.
  bool same_value_as(const PartedNumber& other) const;

 private:
  std::vector<Part> parts_;
  BaseConfig base_;
};

/// Numeral syntax error with the offending character offset.
class ParseError : public std::invalid_argument {
 public:
  enum class Kind { empty_input, invalid_glyph, multiple_points, bare_sign, missing_digits };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::invalid_argument(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses `-? digit+ (. digit+)?` over the configured alphabet.
/// The integer digit p places left of the point gets order p; the fractional
/// digit q places right of it gets order -q.
PartedNumber parse_numeral(std::string_view text, const BaseConfig& cfg);

/// One single-part number per part of `n`, tagged first_tag, first_tag+1, ...
std::vector<PartedNumber> split(const PartedNumber& n, Tag first_tag = 1);

/// Writes each part's digit at its order, zeros elsewhere. Throws
/// std::invalid_argument on duplicate orders, mixed signs or digits outside
/// 1..base-1.
std::string rejoin(const std::vector<Part>& parts, const BaseConfig& cfg);
inline std::string rejoin(const PartedNumber& n) { return rejoin(n.parts(), n.base_config()); }

/// Merges duplicate orders, drops zero digits and carries digits >= base
/// upward. Throws std::invalid_argument on mixed signs or negative digits.
PartedNumber normalize(const PartedNumber& n);

struct AlignedPair {
  PartedNumber first;
  PartedNumber second;
  int shift = 0;
};

/// Scales both numbers by base^shift, shift = max(0, -lowest order of either),
/// so that every order is non-negative.
AlignedPair align_orders(const PartedNumber& a, const PartedNumber& b);

/// Compares |a| with |b| part by part from the highest order down.
std::strong_ordering compare_magnitude(const PartedNumber& a, const PartedNumber& b);

}  // namespace gridarith
