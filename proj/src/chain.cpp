#include "gridarith/chain.hpp"

#include <algorithm>
#include <cctype>

namespace gridarith::chain {

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw ChainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const { return value_.get_str(10); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw ChainError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <=> 0; }

DivisorPartition::DivisorPartition(std::vector<Integer> parts, const Integer& divisor)
    : parts_(std::move(parts)), divisor_(divisor) {
  if (parts_.empty()) throw ChainError("a partition needs at least one part");
  Integer sum = 0;
  for (const Integer& d : parts_) {
    if (d < 1) throw ChainError("partition part " + d.get_str() + " is not a positive integer");
    sum += d;
  }
  if (sum != divisor_) {
    throw ChainError("parts sum " + sum.get_str() + " != " + divisor_.get_str());
  }
}

DivisorPartition DivisorPartition::of(std::vector<Integer> parts) {
  Integer sum = 0;
  for (const Integer& d : parts) sum += d;
  return DivisorPartition(std::move(parts), sum);
}

namespace {

ChainResult evaluate(const Rational& dividend, const DivisorPartition& partition, const Rational* r2_override) {
  const auto& d = partition.parts();
  ChainResult cr{dividend, partition, {}, {}};
  cr.steps.reserve(d.size());
  Rational r = dividend / Rational(d[0]);
  cr.steps.push_back({1, d[0], r});
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (i == 1) {
      r = r2_override ? *r2_override : r * Rational(d[1]) / Rational(partition.divisor());
    } else {
      r = r * Rational(d[i]) / Rational(d[i - 1]);
    }
    cr.steps.push_back({i + 1, d[i], r});
  }
  cr.result = cr.steps.front().residue;
  for (std::size_t i = 1; i < cr.steps.size(); ++i) cr.result = cr.result - cr.steps[i].residue;
  return cr;
}

ChainNode expand(const Rational& dividend, const DivisorPartition& partition, const PartitionChooser& chooser,
                 int level, int depth) {
  ChainNode node;
  if (depth == 0 || partition.size() < 2) {
    node.chain = evaluate(dividend, partition, nullptr);
    return node;
  }
  const Integer& divisor = partition.divisor();
  DivisorPartition sub = chooser(level, divisor);
  if (sub.divisor() != divisor) {
    throw ChainError("sub-partition divides " + sub.divisor().get_str() + ", site needs " + divisor.get_str());
  }
  const Rational site_dividend = dividend / Rational(partition.parts()[0]) * Rational(partition.parts()[1]);
  ChainNode child = expand(site_dividend, sub, chooser, level + 1, depth - 1);
  node.chain = evaluate(dividend, partition, &child.chain.result);
  node.expansion.push_back(std::move(child));
  return node;
}

}  // namespace

ChainResult chain_divide(const Rational& dividend, const Integer& divisor, const DivisorPartition& partition) {
  if (divisor == 0) throw ChainError("division by zero");
  if (partition.divisor() != divisor) {
    throw ChainError("partition is of " + partition.divisor().get_str() + ", not " + divisor.get_str());
  }
  return evaluate(dividend, partition, nullptr);
}

int ChainNode::depth() const { return expansion.empty() ? 0 : 1 + expansion.front().depth(); }

ChainNode expand_chain(const ChainResult& cr, const PartitionChooser& chooser, int depth) {
  if (depth < 0) throw ChainError("expansion depth must be non-negative");
  return expand(cr.dividend, cr.partition, chooser, 1, depth);
}

TransitionReport transitions(const ChainResult& cr) {
  if (cr.steps.size() < 2) throw ChainError("a chain with one part has no transitions");
  TransitionReport report;
  report.monotone_decreasing_r = true;
  for (std::size_t i = 1; i < cr.steps.size(); ++i) {
    report.d_deltas.push_back(cr.steps[i].divisor_part - cr.steps[i - 1].divisor_part);
    const Rational delta = cr.steps[i].residue - cr.steps[i - 1].residue;
    report.r_deltas.push_back(delta);
    report.max_abs_r_delta = std::max(report.max_abs_r_delta, delta.abs());
    if (delta.signum() >= 0) report.monotone_decreasing_r = false;
  }
  return report;
}

namespace {

Integer power(int base, int exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

void check_format(int precision, int base) {
  if (precision < 0) throw ChainError("precision must be non-negative");
  if (base < 2 || base > 36) throw ChainError("base must be in 2..36");
}

// |value| * base^precision, rounded to an integer.
Integer scaled_magnitude(const Rational& value, int precision, Rounding rounding, int base) {
  const Integer scale = power(base, precision);
  const Rational m = value.abs() * Rational(scale);
  Integer q = m.numerator() / m.denominator();
  if (rounding == Rounding::half_up) {
    const Integer twice_rem = 2 * (m.numerator() - q * m.denominator());
    if (twice_rem >= m.denominator()) ++q;
  }
  return q;
}

}  // namespace

Rational round_to(const Rational& value, int precision, Rounding rounding, int base) {
  check_format(precision, base);
  const Integer q = scaled_magnitude(value, precision, rounding, base);
  return Rational(value.signum() < 0 ? Integer(-q) : q, power(base, precision));
}

std::string format_decimal(const Rational& value, int precision, Rounding rounding, int base) {
  check_format(precision, base);
  const Integer q = scaled_magnitude(value, precision, rounding, base);
  std::string digits = q.get_str(base);
  std::transform(digits.begin(), digits.end(), digits.begin(),
                 [](char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); });
  if (digits.size() <= static_cast<std::size_t>(precision)) {
    digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
  }
  if (precision > 0) digits.insert(digits.size() - static_cast<std::size_t>(precision), 1, '.');
  if (value.signum() < 0 && q != 0) digits.insert(0, 1, '-');
  return digits;
}

RoundedChain evaluate_rounded(const ChainResult& cr, const RoundingSpec& spec) {
  const auto& d = cr.partition.parts();
  auto round = [&](const Rational& x) { return round_to(x, spec.precision, spec.rounding, spec.base); };
  RoundedChain out;
  Rational r = round(cr.dividend / Rational(d[0]));
  out.residues.push_back(r);
  out.result = r;
  for (std::size_t i = 1; i < d.size(); ++i) {
    const Integer& below = i == 1 ? cr.partition.divisor() : d[i - 1];
    r = round(r * Rational(d[i]) / Rational(below));
    out.residues.push_back(r);
    out.result = out.result - r;
  }
  return out;
}

Rational fit_residual(const ChainResult& cr, const std::optional<RoundingSpec>& spec) {
  if (!spec) return Rational{};
  return (evaluate_rounded(cr, *spec).result - cr.result).abs();
}

void write_csv(std::ostream& out, const ChainResult& cr, const RoundingSpec& spec) {
  out << "i,d,r_num,r_den,r_decimal\n";
  for (const ChainStep& s : cr.steps) {
    out << s.index << ',' << s.divisor_part.get_str() << ',' << s.residue.numerator().get_str() << ','
        << s.residue.denominator().get_str() << ',' << format_decimal(s.residue, spec.precision, spec.rounding, spec.base)
        << '\n';
  }
}

}  // namespace gridarith::chain
