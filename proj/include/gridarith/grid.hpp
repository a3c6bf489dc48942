#pragma once

// The digit grid: rows are powers of the base, columns are digit values.
// Numbers live on it as tagged entries; every algorithm step is recorded as a
// TraceEvent carrying a full snapshot so traces can be replayed and audited.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gridarith/numeral.hpp"

namespace gridarith {

enum class Role : std::uint8_t { operand, addend, subtrahend, multiplier, multiplicand, dividend, divisor, result };

std::string_view to_string(Role role) noexcept;

/// Row = order of magnitude above the grid floor, column = digit value.
struct GridAddress {
  int row = 0;
  int column = 0;

  friend bool operator==(const GridAddress&, const GridAddress&) = default;
  friend auto operator<=>(const GridAddress&, const GridAddress&) = default;
};

struct CellEntry {
  GridAddress address;
  Sign sign = Sign::positive;
  Tag tag = kNoTag;
  Role role = Role::operand;
  // Set while a borrowed unit sits in front of the digit ("14" in a digit-4
  // cell). The column itself always stays below the base.
  bool borrowed = false;

  /// Digit value the cell currently reads, including a borrowed leading one.
  int reading(int base) const noexcept { return (borrowed ? base : 0) + address.column; }

  friend bool operator==(const CellEntry&, const CellEntry&) = default;
};

/// Immutable-by-convention snapshot of the grid.
///
/// Entries are kept sorted (row descending, column, tag) so equal states
/// compare and render identically regardless of how they were built. Tags are
/// unique within a state. `shift` is the alignment applied before placement:
/// an entry's true order is row - shift.
class GridState {
 public:
  GridState() : GridState(BaseConfig{}, 0) {}
  explicit GridState(BaseConfig base, int shift = 0);

  const BaseConfig& base_config() const noexcept { return base_; }
  int base() const noexcept { return base_.base(); }
  int shift() const noexcept { return shift_; }
  const std::vector<CellEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  const CellEntry* find(Tag tag) const noexcept;
  const CellEntry& at(Tag tag) const;
  /// Highest occupied row, or 0 for an empty grid.
  int top_row() const noexcept;

  void insert(const CellEntry& entry);
  void erase(Tag tag);
  void update(const CellEntry& entry);

  friend bool operator==(const GridState&, const GridState&) = default;

 private:
  void check(const CellEntry& entry) const;
  void sort();

  BaseConfig base_;
  int shift_;
  std::vector<CellEntry> entries_;
};

enum class EventKind : std::uint8_t {
  place,
  move_right,
  move_left,
  move_up,
  move_down,
  merge_add,
  borrow,
  carry_split,
  multiply_digit,
  divide_step,
  direct_division,
  sign_flip,
  remove,
  rejoin,
};

std::string_view to_string(EventKind kind) noexcept;
bool is_move(EventKind kind) noexcept;

struct TraceEvent {
  std::size_t step = 0;
  EventKind kind = EventKind::place;
  std::vector<Tag> subject;
  std::vector<GridAddress> before;
  std::vector<GridAddress> after;
  std::string note;
  GridState snapshot;
};

using Trace = std::vector<TraceEvent>;

struct GridStep {
  GridState state;
  TraceEvent event;
};

/// A move that would leave the grid: past digit base-1, below digit 0 or
/// below row 0. The arithmetic layer turns these into carries and borrows.
struct EdgeSignal {
  Tag tag = kNoTag;
  GridAddress from;
  EventKind kind = EventKind::move_right;
  int steps = 0;
};

/// Puts `part` on the grid at row part.order + shift, column part.digit.
/// Throws std::out_of_range if that row would be negative.
GridStep place(const GridState& grid, const Part& part, Role role, Tag tag);

/// Transposes one entry. Horizontal moves change the cell reading by `steps`
/// units at that row (a borrowed leading one is consumed by a left move);
/// vertical moves multiply or divide by base^steps.
std::variant<GridStep, EdgeSignal> move(const GridState& grid, Tag tag, EventKind kind, int steps);

/// Fixed-width table from the highest occupied row down to row 0.
std::string render_text(const GridState& grid);

/// Label for a row: "Units", "10's", "100's", ... written in the grid's own
/// base, falling back to "<base>^k" above the eighth power.
std::string row_label(int row, int base);

class CorruptTrace : public std::runtime_error {
 public:
  CorruptTrace(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Rebuilds the grid by applying each event to the accumulated state and
/// checking the result against the event's own snapshot. Throws CorruptTrace
/// on the first inconsistency.
GridState replay(std::span<const TraceEvent> events);

/// {step, kind, subject, before, after, note, grid:{shift, entries:[...]}}
nlohmann::ordered_json to_json(const TraceEvent& event);
nlohmann::ordered_json to_json(const GridState& grid);

}  // namespace gridarith
