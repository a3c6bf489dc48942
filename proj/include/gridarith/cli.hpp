#pragma once

// Expression parsing and command execution behind the gridcalc tool.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "gridarith/chain.hpp"
#include "gridarith/numeral.hpp"

namespace gridarith::cli {

/// Malformed or invalid expression; `position` is a character offset.
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class Operator { add, subtract, multiply, divide };

struct BinaryCommand {
  PartedNumber lhs;
  Operator op = Operator::add;
  PartedNumber rhs;
};

struct ChainCommand {
  chain::Integer dividend;
  chain::Integer divisor;
  chain::DivisorPartition partition;
  int depth = 0;
};

using Command = std::variant<BinaryCommand, ChainCommand>;

/// expr := numeral op numeral
///       | 'chain(' numeral ',' numeral ';' numeral (',' numeral)* ')' ['@' depth]
/// Whitespace between tokens is ignored. Chain numerals must be positive
/// integers whose parts sum to the divisor; depth is decimal.
Command parse_expression(std::string_view text, const BaseConfig& cfg = BaseConfig{});

enum class Output { result_only, text_trace, json_trace };

struct Invocation {
  std::string expression;
  int base = 10;
  Output output = Output::result_only;
  int precision = 2;
  chain::Rounding rounding = chain::Rounding::truncate;
  // With an empty expression, draws one demo case from this seed.
  std::optional<std::uint64_t> seed;
  // Chain commands also write their steps here as CSV.
  std::optional<std::string> csv_path;
};

/// Exit status: 0 on success, 1 on a parse or validation error, 2 on a math
/// error. Errors print one diagnostic line to `err`. On success the last line
/// of `out` is the result: the numeral, "q=<q> r=<r>" for a division with a
/// non-zero remainder, or the rounded chain result.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// The expression a seeded demo invocation evaluates.
std::string demo_expression(std::uint64_t seed, int base);

}  // namespace gridarith::cli
