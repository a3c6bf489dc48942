#include "session.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

namespace gridarith::detail {

void Session::push(TraceEvent event) {
  event.step = trace_.size();
  trace_.push_back(std::move(event));
}

Tag Session::place(const Part& part, Role role) {
  const Tag tag = fresh_tag();
  GridStep step = gridarith::place(state_, part, role, tag);
  state_ = std::move(step.state);
  push(std::move(step.event));
  return tag;
}

void Session::move(Tag tag, EventKind kind, int steps) {
  auto outcome = gridarith::move(state_, tag, kind, steps);
  if (std::holds_alternative<EdgeSignal>(outcome)) {
    throw std::logic_error("grid move ran off the edge of the table");
  }
  GridStep& step = std::get<GridStep>(outcome);
  state_ = std::move(step.state);
  push(std::move(step.event));
}

void Session::remove(const std::vector<Tag>& tags, std::string note) {
  GridState next = state_;
  std::vector<GridAddress> before;
  for (Tag t : tags) {
    before.push_back(next.at(t).address);
    next.erase(t);
  }
  record(EventKind::remove, tags, std::move(before), {}, std::move(note), std::move(next));
}

void Session::flip_signs(const std::vector<Tag>& tags, std::string note) {
  GridState next = state_;
  std::vector<GridAddress> at;
  for (Tag t : tags) {
    CellEntry e = next.at(t);
    e.sign = flip(e.sign);
    at.push_back(e.address);
    next.update(e);
  }
  record(EventKind::sign_flip, tags, at, at, std::move(note), std::move(next));
}

void Session::rejoin(std::string note) {
  std::vector<Tag> tags;
  std::vector<GridAddress> at;
  for (const CellEntry& e : state_.entries()) {
    tags.push_back(e.tag);
    at.push_back(e.address);
  }
  record(EventKind::rejoin, std::move(tags), at, at, std::move(note), state_);
}

void Session::record(EventKind kind, std::vector<Tag> subject, std::vector<GridAddress> before,
                     std::vector<GridAddress> after, std::string note, GridState next) {
  state_ = std::move(next);
  TraceEvent ev;
  ev.kind = kind;
  ev.subject = std::move(subject);
  ev.before = std::move(before);
  ev.after = std::move(after);
  ev.note = std::move(note);
  ev.snapshot = state_;
  push(std::move(ev));
}

std::vector<CellEntry> members(const GridState& grid, const std::set<Tag>& group) {
  std::vector<CellEntry> out;
  for (const CellEntry& e : grid.entries()) {
    if (group.count(e.tag)) out.push_back(e);
  }
  return out;
}

PartedNumber read_number(const std::vector<CellEntry>& entries, const BaseConfig& base, int floor) {
  std::vector<Part> parts;
  parts.reserve(entries.size());
  for (const CellEntry& e : entries) {
    if (e.borrowed) throw std::logic_error("cannot read a cell that still holds a borrowed unit");
    if (e.address.column == 0) continue;
    parts.push_back(Part{e.address.column, e.address.row - floor, e.sign, e.tag});
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.order > b.order; });
  PartedNumber n(std::move(parts), base);
  if (!n.is_normalized()) throw std::logic_error("grid entries do not form a normalized number");
  return n;
}

std::string glyphs(long long value, const BaseConfig& base) {
  if (value == 0) return "0";
  std::string out;
  const bool negative = value < 0;
  unsigned long long v = negative ? static_cast<unsigned long long>(-value) : static_cast<unsigned long long>(value);
  const auto b = static_cast<unsigned long long>(base.base());
  while (v != 0) {
    out.insert(out.begin(), base.glyph(static_cast<int>(v % b)));
    v /= b;
  }
  if (negative) out.insert(out.begin(), '-');
  return out;
}

void merge_levels(Session& session, std::set<Tag>& group) {
  const DigitTables& t = session.tables();
  const BaseConfig& cfg = session.base_config();
  const int base = session.base();
  for (;;) {
    const std::vector<CellEntry> group_entries = members(session.state(), group);
    // Grid order is row-descending, so scanning from the back finds the
    // lowest row holding two entries; the later one has the larger digit.
    std::size_t i = group_entries.size();
    while (i > 1 && group_entries[i - 1].address.row != group_entries[i - 2].address.row) --i;
    if (i <= 1) return;
    const CellEntry keep = group_entries[i - 1];
    const CellEntry other = group_entries[i - 2];
    const int row = keep.address.row;
    const DigitResult sum = t.add(keep.address.column, other.address.column);
    const std::string what = glyphs(keep.address.column, cfg) + " + " + glyphs(other.address.column, cfg) + " = ";

    GridState next = session.state();
    if (sum.carry == 0) {
      CellEntry merged = keep;
      merged.address.column = sum.digit;
      next.erase(other.tag);
      next.update(merged);
      group.erase(other.tag);
      session.record(EventKind::merge_add, {keep.tag, other.tag}, {keep.address, other.address}, {merged.address},
                     what + glyphs(sum.digit, cfg) + " at " + row_label(row, base), std::move(next));
      continue;
    }

    next.erase(keep.tag);
    next.erase(other.tag);
    group.erase(keep.tag);
    group.erase(other.tag);
    std::vector<Tag> subject{keep.tag, other.tag};
    std::vector<GridAddress> after;
    if (sum.digit != 0) {
      const Tag low = session.fresh_tag();
      CellEntry e{{row, sum.digit}, keep.sign, low, keep.role};
      next.insert(e);
      group.insert(low);
      subject.push_back(low);
      after.push_back(e.address);
    }
    const Tag high = session.fresh_tag();
    CellEntry carried{{row + 1, sum.carry}, keep.sign, high, keep.role};
    next.insert(carried);
    group.insert(high);
    subject.push_back(high);
    after.push_back(carried.address);
    session.record(EventKind::carry_split, std::move(subject), {keep.address, other.address}, std::move(after),
                   what + glyphs(sum.carry, cfg) + glyphs(sum.digit, cfg) + " at " + row_label(row, base) + ": " +
                       glyphs(sum.digit, cfg) + " stays, " + glyphs(sum.carry, cfg) + " carried to " +
                       row_label(row + 1, base),
                   std::move(next));
  }
}

}  // namespace gridarith::detail
