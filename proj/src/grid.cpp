#include "gridarith/grid.hpp"

#include <algorithm>
#include <array>

namespace gridarith {

namespace {

constexpr std::array<std::string_view, 8> kRoleNames = {
    "operand", "addend", "subtrahend", "multiplier", "multiplicand", "dividend", "divisor", "result"};

constexpr std::array<std::string_view, 14> kKindNames = {
    "place",       "move_right",   "move_left",   "move_up",         "move_down",
    "merge_add",   "borrow",       "carry_split", "multiply_digit",  "divide_step",
    "direct_division", "sign_flip", "remove",     "rejoin"};

bool entry_order(const CellEntry& a, const CellEntry& b) {
  if (a.address.row != b.address.row) return a.address.row > b.address.row;
  if (a.address.column != b.address.column) return a.address.column < b.address.column;
  return a.tag < b.tag;
}

std::string describe(GridAddress a) { return "(" + std::to_string(a.row) + "," + std::to_string(a.column) + ")"; }

}  // namespace

std::string_view to_string(Role role) noexcept { return kRoleNames[static_cast<std::size_t>(role)]; }

std::string_view to_string(EventKind kind) noexcept { return kKindNames[static_cast<std::size_t>(kind)]; }

bool is_move(EventKind kind) noexcept {
  return kind == EventKind::move_right || kind == EventKind::move_left || kind == EventKind::move_up ||
         kind == EventKind::move_down;
}

GridState::GridState(BaseConfig base, int shift) : base_(base), shift_(shift) {
  if (shift < 0) throw std::invalid_argument("grid shift must be non-negative");
}

const CellEntry* GridState::find(Tag tag) const noexcept {
  const auto it = std::find_if(entries_.begin(), entries_.end(), [tag](const CellEntry& e) { return e.tag == tag; });
  return it == entries_.end() ? nullptr : &*it;
}

const CellEntry& GridState::at(Tag tag) const {
  const CellEntry* e = find(tag);
  if (!e) throw std::out_of_range("no grid entry tagged t" + std::to_string(tag));
  return *e;
}

int GridState::top_row() const noexcept { return entries_.empty() ? 0 : entries_.front().address.row; }

void GridState::check(const CellEntry& entry) const {
  if (entry.address.row < 0) throw std::out_of_range("grid row below 0");
  if (entry.address.column < 0 || entry.address.column >= base()) throw std::out_of_range("grid column outside 0..base-1");
  if (entry.tag == kNoTag) throw std::invalid_argument("grid entries need a tag");
}

void GridState::sort() { std::sort(entries_.begin(), entries_.end(), entry_order); }

void GridState::insert(const CellEntry& entry) {
  check(entry);
  if (find(entry.tag)) throw std::invalid_argument("duplicate grid tag t" + std::to_string(entry.tag));
  entries_.push_back(entry);
  sort();
}

void GridState::erase(Tag tag) {
  const auto it = std::find_if(entries_.begin(), entries_.end(), [tag](const CellEntry& e) { return e.tag == tag; });
  if (it == entries_.end()) throw std::out_of_range("no grid entry tagged t" + std::to_string(tag));
  entries_.erase(it);
}

void GridState::update(const CellEntry& entry) {
  check(entry);
  const auto it =
      std::find_if(entries_.begin(), entries_.end(), [&](const CellEntry& e) { return e.tag == entry.tag; });
  if (it == entries_.end()) throw std::out_of_range("no grid entry tagged t" + std::to_string(entry.tag));
  *it = entry;
  sort();
}

GridStep place(const GridState& grid, const Part& part, Role role, Tag tag) {
  const int row = part.order + grid.shift();
  if (row < 0) throw std::out_of_range("part order falls below the grid; re-align first");
  CellEntry entry{{row, part.digit}, part.sign, tag, role};
  GridStep out{grid, TraceEvent{}};
  out.state.insert(entry);
  out.event.kind = EventKind::place;
  out.event.subject = {tag};
  out.event.after = {entry.address};
  out.event.note = std::string(to_string(role)) + " part " + rejoin({Part{part.digit, part.order, part.sign}}, grid.base_config()) +
                   " at " + describe(entry.address);
  out.event.snapshot = out.state;
  return out;
}

std::variant<GridStep, EdgeSignal> move(const GridState& grid, Tag tag, EventKind kind, int steps) {
  if (!is_move(kind)) throw std::invalid_argument("move needs a move_* kind");
  if (steps < 0) throw std::invalid_argument("move steps must be non-negative");
  const CellEntry& from = grid.at(tag);
  const int base = grid.base();
  CellEntry to = from;
  switch (kind) {
    case EventKind::move_right:
    case EventKind::move_left: {
      const int reading = from.reading(base) + (kind == EventKind::move_right ? steps : -steps);
      if (reading < 0 || reading >= base) return EdgeSignal{tag, from.address, kind, steps};
      to.address.column = reading;
      to.borrowed = false;
      break;
    }
    case EventKind::move_up:
      to.address.row += steps;
      break;
    default:
      if (from.address.row - steps < 0) return EdgeSignal{tag, from.address, kind, steps};
      to.address.row -= steps;
      break;
  }

  GridStep out{grid, TraceEvent{}};
  out.state.update(to);
  out.event.kind = kind;
  out.event.subject = {tag};
  out.event.before = {from.address};
  out.event.after = {to.address};
  out.event.note = std::string(to_string(kind)) + " " + std::to_string(steps) + ": " + describe(from.address) + " -> " +
                   describe(to.address);
  out.event.snapshot = out.state;
  return out;
}

std::string row_label(int row, int base) {
  if (row == 0) return "Units";
  if (row <= 8) return "1" + std::string(static_cast<std::size_t>(row), '0') + "'s";
  return std::to_string(base) + "^" + std::to_string(row);
}

std::string render_text(const GridState& grid) {
  const int base = grid.base();
  const int top = std::max(0, grid.top_row());

  // Marks per cell: one sign character per entry, a leading '1' when the
  // entry carries a borrowed unit.
  std::vector<std::vector<std::string>> marks(static_cast<std::size_t>(top) + 1,
                                              std::vector<std::string>(static_cast<std::size_t>(base)));
  for (const CellEntry& e : grid.entries()) {
    std::string& cell = marks[static_cast<std::size_t>(e.address.row)][static_cast<std::size_t>(e.address.column)];
    if (e.borrowed) cell.push_back('1');
    cell.push_back(e.sign == Sign::positive ? '+' : '-');
  }

  std::size_t label_width = 3;
  std::size_t cell_width = 2;
  for (int row = 0; row <= top; ++row) {
    label_width = std::max(label_width, row_label(row, base).size());
    for (const auto& m : marks[static_cast<std::size_t>(row)]) cell_width = std::max(cell_width, m.size());
  }

  auto finish = [](std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    line.push_back('\n');
  };

  std::string out;
  std::string header = "row " + std::string(label_width, ' ') + " |";
  for (int c = 0; c < base; ++c) {
    header += ' ';
    header += grid.base_config().glyph(c);
    header += std::string(cell_width - 1, ' ');
  }
  finish(header);
  out += header;

  for (int row = top; row >= 0; --row) {
    std::string num = std::to_string(row);
    std::string label = row_label(row, base);
    std::string line = std::string(3 - std::min<std::size_t>(3, num.size()), ' ') + num + " " + label +
                       std::string(label_width - label.size(), ' ') + " |";
    for (const auto& m : marks[static_cast<std::size_t>(row)]) {
      const std::string text = m.empty() ? "." : m;
      line += ' ';
      line += text;
      line += std::string(cell_width - text.size(), ' ');
    }
    finish(line);
    out += line;
  }
  if (grid.shift() != 0) out += "shift " + std::to_string(grid.shift()) + "\n";
  return out;
}

namespace {

void apply_move(GridState& state, const TraceEvent& ev) {
  if (ev.subject.size() != 1 || ev.before.size() != 1 || ev.after.size() != 1) {
    throw CorruptTrace(ev.step, "move events carry exactly one subject, before and after");
  }
  const CellEntry* current = state.find(ev.subject[0]);
  if (!current) throw CorruptTrace(ev.step, "move of an entry that is not on the grid");
  if (current->address != ev.before[0]) throw CorruptTrace(ev.step, "move starts from the wrong cell");

  const GridAddress from = ev.before[0];
  const GridAddress to = ev.after[0];
  const int reading = current->reading(state.base());
  bool ok = false;
  switch (ev.kind) {
    case EventKind::move_right: ok = to.row == from.row && to.column > reading; break;
    case EventKind::move_left: ok = to.row == from.row && to.column < reading; break;
    case EventKind::move_up: ok = to.column == from.column && to.row > from.row; break;
    case EventKind::move_down: ok = to.column == from.column && to.row < from.row; break;
    default: break;
  }
  if (!ok) throw CorruptTrace(ev.step, std::string(to_string(ev.kind)) + " goes the wrong way");

  CellEntry moved = *current;
  moved.address = to;
  if (ev.kind == EventKind::move_right || ev.kind == EventKind::move_left) moved.borrowed = false;
  try {
    state.update(moved);
  } catch (const std::exception& e) {
    throw CorruptTrace(ev.step, e.what());
  }
}

void apply_event(GridState& state, const TraceEvent& ev) {
  const GridState& snap = ev.snapshot;
  switch (ev.kind) {
    case EventKind::place: {
      if (ev.subject.size() != 1 || ev.after.size() != 1) throw CorruptTrace(ev.step, "place carries one subject");
      if (state.find(ev.subject[0])) throw CorruptTrace(ev.step, "place reuses a live tag");
      const CellEntry* placed = snap.find(ev.subject[0]);
      if (!placed || placed->address != ev.after[0]) throw CorruptTrace(ev.step, "placed entry missing from snapshot");
      state.insert(*placed);
      return;
    }
    case EventKind::move_right:
    case EventKind::move_left:
    case EventKind::move_up:
    case EventKind::move_down:
      apply_move(state, ev);
      return;
    case EventKind::remove:
      for (Tag t : ev.subject) {
        if (!state.find(t)) throw CorruptTrace(ev.step, "remove of an entry that is not on the grid");
        state.erase(t);
      }
      return;
    case EventKind::sign_flip:
      for (Tag t : ev.subject) {
        const CellEntry* e = state.find(t);
        if (!e) throw CorruptTrace(ev.step, "sign flip of an entry that is not on the grid");
        CellEntry flipped = *e;
        flipped.sign = flip(flipped.sign);
        state.update(flipped);
      }
      return;
    case EventKind::rejoin:
      return;
    default:
      // Compound steps: every subject entry takes its snapshot form (or
      // disappears); everything else must stay as it was.
      for (Tag t : ev.subject) {
        const CellEntry* now = state.find(t);
        const CellEntry* next = snap.find(t);
        if (!now && !next) throw CorruptTrace(ev.step, "subject tag t" + std::to_string(t) + " appears nowhere");
        if (now && next) {
          state.update(*next);
        } else if (next) {
          state.insert(*next);
        } else {
          state.erase(t);
        }
      }
      return;
  }
}

}  // namespace

GridState replay(std::span<const TraceEvent> events) {
  if (events.empty()) return GridState{};
  GridState state(events.front().snapshot.base_config(), events.front().snapshot.shift());
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TraceEvent& ev = events[i];
    if (ev.step != i) throw CorruptTrace(i, "event out of sequence");
    if (ev.snapshot.base_config() != state.base_config() || ev.snapshot.shift() != state.shift()) {
      throw CorruptTrace(i, "snapshot changes base or shift");
    }
    try {
      apply_event(state, ev);
    } catch (const CorruptTrace&) {
      throw;
    } catch (const std::exception& e) {
      throw CorruptTrace(i, e.what());
    }
    if (!(state == ev.snapshot)) throw CorruptTrace(i, "replayed grid differs from the recorded snapshot");
  }
  return state;
}

nlohmann::ordered_json to_json(const GridState& grid) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const CellEntry& e : grid.entries()) {
    nlohmann::ordered_json j;
    j["row"] = e.address.row;
    j["column"] = e.address.column;
    j["sign"] = e.sign == Sign::positive ? "+" : "-";
    j["tag"] = e.tag;
    j["role"] = to_string(e.role);
    entries.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["shift"] = grid.shift();
  out["entries"] = std::move(entries);
  return out;
}

nlohmann::ordered_json to_json(const TraceEvent& event) {
  auto addresses = [](const std::vector<GridAddress>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const GridAddress& a : v) {
      nlohmann::ordered_json j;
      j["row"] = a.row;
      j["column"] = a.column;
      arr.push_back(std::move(j));
    }
    return arr;
  };
  nlohmann::ordered_json out;
  out["step"] = event.step;
  out["kind"] = to_string(event.kind);
  out["subject"] = event.subject;
  out["before"] = addresses(event.before);
  out["after"] = addresses(event.after);
  out["note"] = event.note;
  out["grid"] = to_json(event.snapshot);
  return out;
}

}  // namespace gridarith
