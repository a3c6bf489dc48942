#include "gridarith/cli.hpp"

#include <cctype>
#include <fstream>
#include <vector>

#include "gridarith/arithmetic.hpp"
#include "gridarith/grid.hpp"
#include "gridarith/oracle.hpp"

namespace gridarith::cli {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::size_t position() const { return pos_; }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (!accept(std::string_view(&c, 1))) {
      throw SyntaxError(pos_, "expected '" + std::string(1, c) + "' at position " + std::to_string(pos_));
    }
  }

  // An optional '-' followed by glyphs and points.
  std::pair<std::string_view, std::size_t> numeral() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(start, "expected a numeral at position " + std::to_string(start));
    return {text_.substr(start, pos_ - start), start};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

PartedNumber numeral_at(Scanner& sc, const BaseConfig& cfg) {
  const auto [text, start] = sc.numeral();
  try {
    return parse_numeral(text, cfg);
  } catch (const ParseError& e) {
    const std::size_t at = start + e.position();
    throw SyntaxError(at, std::string(e.what()) + " at position " + std::to_string(at));
  }
}

chain::Integer positive_integer(Scanner& sc, const BaseConfig& cfg) {
  const std::size_t start = (sc.skip_space(), sc.position());
  const PartedNumber n = numeral_at(sc, cfg);
  if (!n.is_integer() || n.sign() != Sign::positive || n.is_zero()) {
    throw SyntaxError(start, "chain operands must be positive integers (position " + std::to_string(start) + ")");
  }
  return chain::Integer(rejoin(n), cfg.base());
}

Command parse_chain(Scanner& sc, const BaseConfig& cfg) {
  sc.expect('(');
  ChainCommand cmd;
  cmd.dividend = positive_integer(sc, cfg);
  sc.expect(',');
  cmd.divisor = positive_integer(sc, cfg);
  sc.expect(';');
  std::vector<chain::Integer> parts{positive_integer(sc, cfg)};
  while (sc.accept(",")) parts.push_back(positive_integer(sc, cfg));
  sc.expect(')');
  const std::size_t close = sc.position();
  if (sc.accept("@")) {
    sc.skip_space();
    const std::size_t start = sc.position();
    const auto [text, at] = sc.numeral();
    if (text.size() > 3 || text.find_first_not_of("0123456789") != std::string_view::npos) {
      throw SyntaxError(at, "expansion depth must be a small decimal integer (position " + std::to_string(start) + ")");
    }
    cmd.depth = std::stoi(std::string(text));
  }
  try {
    cmd.partition = chain::DivisorPartition(std::move(parts), cmd.divisor);
  } catch (const chain::ChainError& e) {
    throw SyntaxError(close, e.what());
  }
  return cmd;
}

char op_glyph(Operator op) {
  switch (op) {
    case Operator::add: return '+';
    case Operator::subtract: return '-';
    case Operator::multiply: return '*';
    case Operator::divide: return '/';
  }
  return '?';
}

void emit_trace(const Trace& trace, Output output, std::ostream& out) {
  if (output == Output::json_trace) {
    for (const TraceEvent& e : trace) out << to_json(e).dump() << '\n';
    return;
  }
  if (output != Output::text_trace) return;
  for (const TraceEvent& e : trace) out << e.step << ' ' << to_string(e.kind) << ": " << e.note << '\n';
  if (!trace.empty()) out << render_text(trace.back().snapshot);
}

int run_binary(const BinaryCommand& cmd, const Invocation& inv, std::ostream& out) {
  if (cmd.op == Operator::divide) {
    const DivisionResult r = divide(cmd.lhs, cmd.rhs);
    emit_trace(r.trace, inv.output, out);
    const std::string q = rejoin(r.outcome.quotient);
    if (r.outcome.remainder.is_zero()) {
      out << q << '\n';
    } else {
      out << "q=" << q << " r=" << rejoin(r.outcome.remainder) << '\n';
    }
    return 0;
  }
  ArithmeticResult r;
  switch (cmd.op) {
    case Operator::add: r = add(cmd.lhs, cmd.rhs); break;
    case Operator::subtract: r = subtract(cmd.lhs, cmd.rhs); break;
    default: r = multiply(cmd.lhs, cmd.rhs); break;
  }
  emit_trace(r.trace, inv.output, out);
  out << rejoin(r.value) << '\n';
  return 0;
}

std::string glyphs(const chain::Integer& v, int base) {
  std::string s = v.get_str(base);
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

int run_chain(const ChainCommand& cmd, const Invocation& inv, std::ostream& out) {
  const chain::RoundingSpec spec{inv.precision, inv.rounding, inv.base};
  chain::ChainResult cr = chain::chain_divide(chain::Rational(cmd.dividend), cmd.divisor, cmd.partition);
  if (cmd.depth > 0) {
    const chain::DivisorPartition same = cmd.partition;
    cr = chain::expand_chain(cr, [&](int, const chain::Integer&) { return same; }, cmd.depth).chain;
  }
  const chain::RoundedChain rounded = chain::evaluate_rounded(cr, spec);
  auto fmt = [&](const chain::Rational& x) {
    return chain::format_decimal(x, inv.precision, inv.rounding, inv.base);
  };
  const auto& d = cmd.partition.parts();
  const int b = inv.base;

  if (inv.output == Output::text_trace) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      out << (i + 1) << ". ";
      if (i == 0) {
        out << glyphs(cmd.dividend, b) << " / " << glyphs(d[0], b);
      } else {
        const chain::Integer& below = i == 1 ? cmd.divisor : d[i - 1];
        out << fmt(rounded.residues[i - 1]) << " * (" << glyphs(d[i], b) << " / " << glyphs(below, b) << ')';
      }
      out << " = " << fmt(rounded.residues[i]) << '\n';
    }
    out << (d.size() + 1) << ". " << fmt(rounded.residues[0]);
    for (std::size_t i = 1; i < d.size(); ++i) out << " - " << fmt(rounded.residues[i]);
    out << " = " << fmt(rounded.result) << '\n';
    out << "exact " << cr.result.to_string() << '\n';
  } else if (inv.output == Output::json_trace) {
    for (std::size_t i = 0; i < cr.steps.size(); ++i) {
      nlohmann::ordered_json j;
      j["i"] = cr.steps[i].index;
      j["d"] = cr.steps[i].divisor_part.get_str();
      j["r_num"] = cr.steps[i].residue.numerator().get_str();
      j["r_den"] = cr.steps[i].residue.denominator().get_str();
      j["r_rounded"] = fmt(rounded.residues[i]);
      out << j.dump() << '\n';
    }
  }
  if (inv.csv_path) {
    std::ofstream csv(*inv.csv_path);
    if (!csv) throw std::runtime_error("cannot open " + *inv.csv_path);
    chain::write_csv(csv, cr, spec);
  }
  out << fmt(rounded.result) << '\n';
  return 0;
}

}  // namespace

Command parse_expression(std::string_view text, const BaseConfig& cfg) {
  Scanner sc(text);
  if (sc.at_end()) throw SyntaxError(0, "empty expression");
  Command cmd;
  if (sc.accept("chain")) {
    cmd = parse_chain(sc, cfg);
  } else {
    BinaryCommand bin;
    bin.lhs = numeral_at(sc, cfg);
    const std::size_t at = (sc.skip_space(), sc.position());
    switch (sc.peek()) {
      case '+': bin.op = Operator::add; break;
      case '-': bin.op = Operator::subtract; break;
      case '*': bin.op = Operator::multiply; break;
      case '/': bin.op = Operator::divide; break;
      default: throw SyntaxError(at, "expected one of + - * / at position " + std::to_string(at));
    }
    sc.accept(std::string(1, op_glyph(bin.op)));
    bin.rhs = numeral_at(sc, cfg);
    cmd = std::move(bin);
  }
  if (!sc.at_end()) {
    throw SyntaxError(sc.position(), "unexpected text at position " + std::to_string(sc.position()));
  }
  return cmd;
}

std::string demo_expression(std::uint64_t seed, int base) {
  oracle::CaseProfile profile;
  profile.bases = {base};
  profile.max_digits = 6;
  const oracle::Case c = oracle::gen_cases(seed, profile).next();
  return c.lhs + ' ' + op_glyph(static_cast<Operator>(seed % 4)) + ' ' + c.rhs;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    if (inv.precision < 0) throw SyntaxError(0, "precision must be non-negative");
    const BaseConfig cfg(inv.base);
    std::string expression = inv.expression;
    if (expression.empty() && inv.seed) expression = demo_expression(*inv.seed, inv.base);
    cmd = parse_expression(expression, cfg);
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  }
  try {
    if (const auto* bin = std::get_if<BinaryCommand>(&cmd)) return run_binary(*bin, inv, out);
    return run_chain(std::get<ChainCommand>(cmd), inv, out);
  } catch (const MathError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const chain::ChainError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace gridarith::cli
