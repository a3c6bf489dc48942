#include "gridarith/arithmetic.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "digits.hpp"
#include "session.hpp"

namespace gridarith {

namespace {

using detail::Session;

std::vector<Tag> all_tags(const GridState& grid) {
  std::vector<Tag> out;
  for (const CellEntry& e : grid.entries()) out.push_back(e.tag);
  return out;
}

std::set<Tag> tag_set(const GridState& grid) {
  const auto v = all_tags(grid);
  return {v.begin(), v.end()};
}

std::optional<CellEntry> entry_at(const GridState& grid, int row, Sign sign) {
  for (const CellEntry& e : grid.entries()) {
    if (e.address.row == row && e.sign == sign) return e;
  }
  return std::nullopt;
}

bool has_mixed_signs(const GridState& grid) {
  bool pos = false;
  bool neg = false;
  for (const CellEntry& e : grid.entries()) (e.sign == Sign::positive ? pos : neg) = true;
  return pos && neg;
}

std::vector<CellEntry> with_sign(const GridState& grid, Sign sign) {
  std::vector<CellEntry> out;
  for (const CellEntry& e : grid.entries()) {
    if (e.sign == sign) out.push_back(e);
  }
  return out;
}

void check_same_base(const PartedNumber& a, const PartedNumber& b) {
  if (a.base_config() != b.base_config()) throw std::invalid_argument("operands use different bases");
}

// Lends one unit from `lender` down to `row`: the lender moves one cell left,
// every row strictly between gets a base-1 entry, and the cell at `row` (the
// existing minuend entry, or a fresh zero entry) reads one base unit higher.
// Returns the borrower's tag.
Tag borrow(Session& s, const CellEntry& lender, int row, const std::optional<CellEntry>& minuend) {
  const int base = s.base();
  GridState next = s.state();
  std::vector<Tag> subject{lender.tag};
  std::vector<GridAddress> before{lender.address};
  std::vector<GridAddress> after;

  CellEntry lent = lender;
  lent.address.column -= 1;
  if (lent.address.column == 0) {
    next.erase(lender.tag);
  } else {
    next.update(lent);
    after.push_back(lent.address);
  }

  for (int r = lender.address.row - 1; r > row; --r) {
    const Tag fill = s.fresh_tag();
    CellEntry e{{r, base - 1}, Sign::positive, fill, Role::operand};
    next.insert(e);
    subject.push_back(fill);
    after.push_back(e.address);
  }

  CellEntry borrower;
  if (minuend) {
    borrower = *minuend;
    before.push_back(borrower.address);
  } else {
    borrower = CellEntry{{row, 0}, Sign::positive, s.fresh_tag(), Role::operand};
  }
  borrower.borrowed = true;
  if (minuend) {
    next.update(borrower);
  } else {
    next.insert(borrower);
  }
  subject.push_back(borrower.tag);
  after.push_back(borrower.address);

  const BaseConfig& cfg = s.base_config();
  std::string note = "borrow one from " + row_label(lender.address.row, base) + " (" +
                     detail::glyphs(lender.address.column, cfg) + " -> " + detail::glyphs(lent.address.column, cfg) + ")";
  if (lender.address.row - row > 1) note += ", fill " + detail::glyphs(base - 1, cfg) + " in between";
  note += "; " + row_label(row, base) + " cell reads 1" + detail::glyphs(borrower.address.column, cfg);
  s.record(EventKind::borrow, std::move(subject), std::move(before), std::move(after), std::move(note),
           std::move(next));
  return borrower.tag;
}

// Subtraction over a grid holding one positive and one negative entry per
// row at most: highest row first, borrowing from the nearest positive row
// above when the minuend digit is short.
void subtract_levels(Session& s) {
  for (int row = s.state().top_row(); row >= 0; --row) {
    const auto neg = entry_at(s.state(), row, Sign::negative);
    if (!neg) continue;
    const auto pos = entry_at(s.state(), row, Sign::positive);
    const int y = neg->address.column;
    const int x = pos ? pos->address.column : 0;

    if (pos && x >= y) {
      s.move(pos->tag, EventKind::move_left, y);
      std::vector<Tag> gone{neg->tag};
      if (x == y) gone.push_back(pos->tag);
      s.remove(gone, "subtrahend consumed at " + row_label(row, s.base()));
      continue;
    }

    std::optional<CellEntry> lender;
    for (const CellEntry& e : s.state().entries()) {
      if (e.sign == Sign::positive && e.address.row > row && (!lender || e.address.row < lender->address.row)) {
        lender = e;
      }
    }
    if (lender) {
      const Tag borrower = borrow(s, *lender, row, pos);
      s.move(borrower, EventKind::move_left, y);
      s.remove({neg->tag}, "subtrahend consumed at " + row_label(row, s.base()));
      continue;
    }

    // Nothing above to borrow from: the level keeps a negative digit.
    if (pos) {
      s.move(neg->tag, EventKind::move_left, x);
      s.remove({pos->tag}, "minuend consumed at " + row_label(row, s.base()) + "; negative digit stored");
    }
  }
}

// Pairs a negative row with the next occupied positive row below it, flips
// both, borrows a full unit into the lower row, subtracts, and flips back.
void reconcile_signs(Session& s) {
  while (has_mixed_signs(s.state())) {
    const auto& entries = s.state().entries();
    std::optional<std::pair<CellEntry, CellEntry>> pair;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      if (entries[i].sign == Sign::negative && entries[i + 1].sign == Sign::positive) {
        pair = {entries[i], entries[i + 1]};
        break;
      }
    }
    if (!pair) throw std::logic_error("positive row above a negative row after the level pass");
    const auto [hi, lo] = *pair;
    s.flip_signs({hi.tag, lo.tag}, "reverse signs of " + row_label(hi.address.row, s.base()) + " and " +
                                       row_label(lo.address.row, s.base()));

    const CellEntry lender = s.state().at(hi.tag);
    const Tag borrower = borrow(s, lender, lo.address.row, std::nullopt);
    s.move(borrower, EventKind::move_left, lo.address.column);
    s.remove({lo.tag}, "subtrahend consumed at " + row_label(lo.address.row, s.base()));

    std::vector<Tag> back;
    for (const CellEntry& e : s.state().entries()) {
      if (e.sign == Sign::positive && e.address.row <= hi.address.row && e.address.row >= lo.address.row) {
        back.push_back(e.tag);
      }
    }
    s.flip_signs(back, "switch the pair back to negative");
  }
}

void resolve_mixed(Session& s, const ArithmeticOptions& options) {
  bool flipped = false;
  if (options.swap_to_larger) {
    const auto positive = detail::read_number(with_sign(s.state(), Sign::positive), s.base_config(), 0);
    const auto negative = detail::read_number(with_sign(s.state(), Sign::negative), s.base_config(), 0);
    if (compare_magnitude(negative, positive) == std::strong_ordering::greater) {
      s.flip_signs(all_tags(s.state()), "negative side is larger: switch all signs, switch the result back at the end");
      flipped = true;
    }
  }
  subtract_levels(s);
  reconcile_signs(s);
  if (flipped && !s.state().empty()) s.flip_signs(all_tags(s.state()), "switch the result sign back");
}

ArithmeticResult finish(Session& s) {
  PartedNumber value = detail::read_number(s.state().entries(), s.base_config(), s.state().shift());
  s.rejoin("result " + rejoin(value));
  return {std::move(value), s.take_trace()};
}

ArithmeticResult combine(const PartedNumber& a_in, const PartedNumber& b_in, Role b_role, bool negate_b,
                         const ArithmeticOptions& options) {
  check_same_base(a_in, b_in);
  const PartedNumber a = normalize(a_in);
  const PartedNumber b = negate_b ? normalize(b_in).negated() : normalize(b_in);
  const auto aligned = align_orders(a, b);

  Session s(a.base_config(), aligned.shift);
  for (const Part& p : a.parts()) s.place(p, Role::operand);
  for (const Part& p : b.parts()) s.place(p, b_role);

  if (has_mixed_signs(s.state())) {
    resolve_mixed(s, options);
  } else {
    auto group = tag_set(s.state());
    detail::merge_levels(s, group);
  }
  return finish(s);
}

}  // namespace

ArithmeticResult add(const PartedNumber& a, const PartedNumber& b, const ArithmeticOptions& options) {
  return combine(a, b, Role::addend, false, options);
}

ArithmeticResult subtract(const PartedNumber& a, const PartedNumber& b, const ArithmeticOptions& options) {
  return combine(a, b, Role::subtrahend, true, options);
}

ArithmeticResult multiply(const PartedNumber& a_in, const PartedNumber& b_in) {
  check_same_base(a_in, b_in);
  const PartedNumber multiplicand = normalize(a_in);
  const PartedNumber multiplier = normalize(b_in);
  const BaseConfig& cfg = multiplicand.base_config();
  const Sign sign = multiplicand.sign() * multiplier.sign();

  Session s(cfg, multiplicand.fractional_depth() + multiplier.fractional_depth());
  std::set<Tag> products;
  for (const Part& m : multiplier.parts()) {
    const Tag mtag = s.place(m, Role::multiplier);
    std::set<Tag> group;
    for (const Part& x : multiplicand.parts()) {
      const Tag xtag = s.place(x, Role::multiplicand);
      if (m.order > 0) s.move(xtag, EventKind::move_up, m.order);
      if (m.order < 0) s.move(xtag, EventKind::move_down, -m.order);

      const CellEntry moved = s.state().at(xtag);
      const CellEntry mult = s.state().at(mtag);
      const DigitResult product = s.tables().mul(x.digit, m.digit);
      const int row = moved.address.row;
      GridState next = s.state();
      std::vector<Tag> subject{xtag, mtag};
      std::vector<GridAddress> after;
      if (product.digit != 0) {
        CellEntry replaced = moved;
        replaced.address.column = product.digit;
        replaced.sign = sign;
        next.update(replaced);
        group.insert(xtag);
        after.push_back(replaced.address);
      } else {
        next.erase(xtag);
      }
      std::string note = detail::glyphs(x.digit, cfg) + " x " + detail::glyphs(m.digit, cfg) + " = " +
                         (product.carry ? detail::glyphs(product.carry, cfg) : "") + detail::glyphs(product.digit, cfg) +
                         " at " + row_label(row, s.base());
      if (product.carry != 0) {
        const Tag high = s.fresh_tag();
        CellEntry carried{{row + 1, product.carry}, sign, high, Role::multiplicand};
        next.insert(carried);
        group.insert(high);
        subject.push_back(high);
        after.push_back(carried.address);
        note += ", split: " + detail::glyphs(product.carry, cfg) + " to " + row_label(row + 1, s.base());
      }
      s.record(EventKind::multiply_digit, std::move(subject), {moved.address, mult.address}, std::move(after),
               std::move(note), std::move(next));
      detail::merge_levels(s, group);
    }
    s.remove({mtag}, "multiplier part done; partial product saved");
    products.insert(group.begin(), group.end());
  }
  detail::merge_levels(s, products);
  return finish(s);
}

DivisionResult divide(const PartedNumber& dividend_in, const PartedNumber& divisor_in) {
  check_same_base(dividend_in, divisor_in);
  const PartedNumber dividend = normalize(dividend_in);
  const PartedNumber divisor = normalize(divisor_in);
  if (divisor.is_zero()) throw MathError("division by zero");
  const BaseConfig& cfg = dividend.base_config();
  const int base = cfg.base();
  const DigitTables& tables = digit_tables(base);

  // Both operands scaled to integers; grid rows are then scaled orders and
  // quotient entries sit `scale` rows above their true order.
  const int scale = std::max(dividend.fractional_depth(), divisor.fractional_depth());
  const PartedNumber whole_divisor = divisor.magnitude().shifted(scale);
  const detail::Digits divisor_digits = detail::to_digits(whole_divisor);
  const int divisor_top = whole_divisor.max_order();

  Session s(cfg, scale);
  std::set<Tag> remaining;
  std::set<Tag> quotient;
  for (const Part& p : dividend.parts()) remaining.insert(s.place(p, Role::dividend));
  if (dividend.sign() == Sign::negative && !dividend.is_zero()) {
    s.flip_signs(all_tags(s.state()), "divide magnitudes; signs are restored at the end");
  }

  auto current_dividend = [&] { return detail::read_number(detail::members(s.state(), remaining), cfg, 0); };

  std::size_t rounds = 0;
  while (compare_magnitude(current_dividend(), whole_divisor) != std::strong_ordering::less) {
    ++rounds;
    bool progress = false;
    for (const CellEntry& part : detail::members(s.state(), remaining)) {
      const int digit = part.address.column;
      // Lowest row at which this digit still reaches the divisor.
      const PartedNumber at_top({Part{digit, divisor_top}}, cfg);
      const int lowest = compare_magnitude(at_top, whole_divisor) == std::strong_ordering::less ? divisor_top + 1
                                                                                                : divisor_top;
      if (part.address.row < lowest) continue;
      const int drop = part.address.row - lowest;
      if (drop > 0) s.move(part.tag, EventKind::move_down, drop);

      const CellEntry moved = s.state().at(part.tag);
      const detail::Digits shifted = detail::to_digits(PartedNumber({Part{digit, lowest}}, cfg));
      const detail::DigitQuotient small = detail::long_divide(shifted, divisor_digits, tables);
      const int q = small.quotient.empty() ? 0 : small.quotient.front();
      if (small.quotient.size() != 1 || q < 1) throw std::logic_error("shifted part did not give a single quotient digit");

      GridState next = s.state();
      next.erase(part.tag);
      remaining.erase(part.tag);
      std::vector<Tag> subject{part.tag};
      std::vector<GridAddress> after;
      const Tag qtag = s.fresh_tag();
      CellEntry qentry{{drop + scale, q}, Sign::positive, qtag, Role::result};
      next.insert(qentry);
      quotient.insert(qtag);
      subject.push_back(qtag);
      after.push_back(qentry.address);
      const PartedNumber rest = detail::from_digits(small.remainder, cfg);
      for (const Part& r : rest.parts()) {
        const Tag rtag = s.fresh_tag();
        CellEntry rentry{{r.order + drop, r.digit}, Sign::positive, rtag, Role::dividend};
        next.insert(rentry);
        remaining.insert(rtag);
        subject.push_back(rtag);
        after.push_back(rentry.address);
      }
      s.record(EventKind::divide_step, std::move(subject), {moved.address}, std::move(after),
               rejoin(PartedNumber({Part{digit, lowest}}, cfg)) + " / " + rejoin(whole_divisor) + " = " +
                   detail::glyphs(q, cfg) + " remainder " + rejoin(rest) + "; quotient " + detail::glyphs(q, cfg) +
                   " at order " + std::to_string(drop) + ", remainder moved back up " + std::to_string(drop),
               std::move(next));
      progress = true;
    }
    detail::merge_levels(s, remaining);
    if (progress) continue;

    // Every part is below the divisor although their sum is not: divide the
    // recombined dividend directly and stop.
    const PartedNumber whole = current_dividend();
    const detail::DigitQuotient direct = detail::long_divide(detail::to_digits(whole), divisor_digits, tables);
    GridState next = s.state();
    std::vector<Tag> subject;
    std::vector<GridAddress> before;
    std::string terms;
    for (const CellEntry& e : detail::members(s.state(), remaining)) {
      terms += (terms.empty() ? "" : " + ") + rejoin(PartedNumber({Part{e.address.column, e.address.row}}, cfg));
      subject.push_back(e.tag);
      before.push_back(e.address);
      next.erase(e.tag);
    }
    remaining.clear();
    std::vector<GridAddress> after;
    const PartedNumber q = detail::from_digits(direct.quotient, cfg);
    const PartedNumber r = detail::from_digits(direct.remainder, cfg);
    for (const Part& p : q.parts()) {
      const Tag t = s.fresh_tag();
      CellEntry e{{p.order + scale, p.digit}, Sign::positive, t, Role::result};
      next.insert(e);
      quotient.insert(t);
      subject.push_back(t);
      after.push_back(e.address);
    }
    for (const Part& p : r.parts()) {
      const Tag t = s.fresh_tag();
      CellEntry e{{p.order, p.digit}, Sign::positive, t, Role::dividend};
      next.insert(e);
      remaining.insert(t);
      subject.push_back(t);
      after.push_back(e.address);
    }
    s.record(EventKind::direct_division, std::move(subject), std::move(before), std::move(after),
             "no part reaches the divisor; " + terms + " = " + rejoin(whole) + "; " + rejoin(whole) + " / " + rejoin(whole_divisor) + " = " + rejoin(q) +
                 " remainder " + rejoin(r),
             std::move(next));
    break;
  }
  detail::merge_levels(s, quotient);

  if (dividend.sign() != divisor.sign()) {
    const auto q = detail::members(s.state(), quotient);
    std::vector<Tag> tags;
    for (const CellEntry& e : q) tags.push_back(e.tag);
    if (!tags.empty()) s.flip_signs(tags, "quotient takes the sign of the operand signs' product");
  }
  if (dividend.sign() == Sign::negative) {
    std::vector<Tag> tags;
    for (const CellEntry& e : detail::members(s.state(), remaining)) tags.push_back(e.tag);
    if (!tags.empty()) s.flip_signs(tags, "remainder takes the dividend's sign");
  }

  DivisionOutcome outcome{detail::read_number(detail::members(s.state(), quotient), cfg, scale),
                          detail::read_number(detail::members(s.state(), remaining), cfg, scale)};
  std::string note = "quotient " + rejoin(outcome.quotient);
  if (!outcome.remainder.is_zero()) note += " remainder " + rejoin(outcome.remainder);
  s.rejoin(std::move(note));
  return DivisionResult{std::move(outcome), s.take_trace(), rounds, scale};
}

}  // namespace gridarith
