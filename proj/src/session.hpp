#pragma once

// Private plumbing shared by the operator implementations: a grid plus the
// trace recorded so far.

#include <set>
#include <string>
#include <vector>

#include "gridarith/digit_tables.hpp"
#include "gridarith/grid.hpp"

namespace gridarith::detail {

class Session {
 public:
  Session(const BaseConfig& base, int shift) : state_(base, shift), tables_(&digit_tables(base.base())) {}

  const GridState& state() const noexcept { return state_; }
  const BaseConfig& base_config() const noexcept { return state_.base_config(); }
  int base() const noexcept { return state_.base(); }
  const DigitTables& tables() const noexcept { return *tables_; }

  Tag fresh_tag() noexcept { return next_tag_++; }

  Tag place(const Part& part, Role role);
  void move(Tag tag, EventKind kind, int steps);
  void remove(const std::vector<Tag>& tags, std::string note);
  void flip_signs(const std::vector<Tag>& tags, std::string note);
  void rejoin(std::string note);

  /// Records a compound step whose outcome is `next`.
  void record(EventKind kind, std::vector<Tag> subject, std::vector<GridAddress> before,
              std::vector<GridAddress> after, std::string note, GridState next);

  Trace take_trace() { return std::move(trace_); }

 private:
  void push(TraceEvent event);

  GridState state_;
  const DigitTables* tables_;
  Trace trace_;
  Tag next_tag_ = 1;
};

/// Entries whose tag is in `group`, in grid order.
std::vector<CellEntry> members(const GridState& grid, const std::set<Tag>& group);

/// Reads entries as parts with order row - `floor`. Entries must form a
/// normalized number (one per row, one sign, no borrowed units).
PartedNumber read_number(const std::vector<CellEntry>& entries, const BaseConfig& base, int floor);

/// Small integers in the grid's own glyphs, for notes.
std::string glyphs(long long value, const BaseConfig& base);

/// Repeatedly merges the lowest row holding two or more group entries, via
/// the addition table, splitting two-digit sums into the row above. New carry
/// entries join the group.
void merge_levels(Session& session, std::set<Tag>& group);

}  // namespace gridarith::detail
