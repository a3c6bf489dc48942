#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "gridarith/arithmetic.hpp"
#include "gridarith/grid.hpp"
#include "gridarith/oracle.hpp"

namespace gridarith::testing {

using oracle::BigInteger;
using oracle::Rational;

inline PartedNumber num(std::string_view text, int base = 10) { return parse_numeral(text, BaseConfig(base)); }

/// Value of one entry in grid units (rows counted from the grid floor).
inline Rational entry_value(const CellEntry& e, int base) {
  BigInteger v = BigInteger(e.reading(base)) * oracle::pow(BigInteger(base), static_cast<unsigned>(e.address.row));
  return e.sign == Sign::negative ? Rational(-v) : Rational(v);
}

inline Rational grid_value(const GridState& g) {
  Rational total;
  for (const CellEntry& e : g.entries()) total = total + entry_value(e, g.base());
  return total;
}

/// Checks every move event against the value rules: a horizontal move of s
/// steps changes the entry by +-s * base^row, a vertical move multiplies or
/// divides it by base^s, and no other entry changes. Returns a description
/// of the first violation.
inline std::optional<std::string> check_move_semantics(const Trace& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    const TraceEvent& ev = trace[i];
    if (!is_move(ev.kind)) continue;
    const std::string where = "step " + std::to_string(ev.step) + " (" + ev.note + ")";
    const GridState& prev = trace[i - 1].snapshot;
    const GridState& next = ev.snapshot;
    if (ev.subject.size() != 1) return where + ": move must have one subject";
    const Tag tag = ev.subject.front();
    const CellEntry* from = prev.find(tag);
    const CellEntry* to = next.find(tag);
    if (!from || !to) return where + ": subject missing";

    // Steps come from the note, "<kind> <steps>: ...".
    std::istringstream note(ev.note);
    std::string kind_word;
    int steps = -1;
    note >> kind_word >> steps;
    if (kind_word != to_string(ev.kind) || steps < 0) return where + ": note does not state the step count";

    const int b = prev.base();
    const Rational before = entry_value(*from, b);
    const Rational after = entry_value(*to, b);
    const Rational unit(oracle::pow(BigInteger(b), static_cast<unsigned>(from->address.row)));
    const Rational scale(oracle::pow(BigInteger(b), static_cast<unsigned>(steps)));
    const Rational sgn(BigInteger(from->sign == Sign::negative ? -1 : 1));
    switch (ev.kind) {
      case EventKind::move_right:
        if (after - before != sgn * Rational(BigInteger(steps)) * unit) return where + ": wrong horizontal value change";
        break;
      case EventKind::move_left:
        if (before - after != sgn * Rational(BigInteger(steps)) * unit) return where + ": wrong horizontal value change";
        break;
      case EventKind::move_up:
        if (after != before * scale) return where + ": vertical move did not scale by base^steps";
        break;
      default:
        if (after * scale != before) return where + ": vertical move did not scale by base^-steps";
        break;
    }
    if (prev.entries().size() != next.entries().size()) return where + ": entry count changed";
    for (const CellEntry& e : prev.entries()) {
      if (e.tag == tag) continue;
      const CellEntry* same = next.find(e.tag);
      if (!same || !(*same == e)) return where + ": another entry changed";
    }
  }
  return std::nullopt;
}

/// replay(trace) rendered must equal the live final grid rendered.
inline std::optional<std::string> check_replay(const Trace& trace) {
  if (trace.empty()) return "empty trace";
  try {
    const GridState replayed = replay(trace);
    if (render_text(replayed) != render_text(trace.back().snapshot)) return "replayed grid renders differently";
  } catch (const std::exception& e) {
    return std::string("replay failed: ") + e.what();
  }
  return std::nullopt;
}

inline std::string numeral_text(const PartedNumber& n) { return rejoin(n); }

/// Oracle value of an engine result, via an independent parse of its text.
inline Rational value_of(const PartedNumber& n) { return oracle::numeral_value(rejoin(n), n.base()); }

inline bool has_event(const Trace& trace, EventKind kind) {
  for (const TraceEvent& e : trace) {
    if (e.kind == kind) return true;
  }
  return false;
}

inline std::size_t count_events(const Trace& trace, EventKind kind) {
  std::size_t n = 0;
  for (const TraceEvent& e : trace) n += e.kind == kind;
  return n;
}

}  // namespace gridarith::testing
