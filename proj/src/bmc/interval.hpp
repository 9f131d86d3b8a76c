#pragma once

#include <cstdint>
#include <vector>

#include "bmc/term.hpp"
#include "minic/value.hpp"

namespace htg::bmc {

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  static Interval full(Width w) { return {w.min_value(), w.max_value()}; }
  static Interval point(std::int64_t v) { return {v, v}; }
  bool empty() const { return lo > hi; }
  bool singleton() const { return lo == hi; }
  std::uint64_t width_span() const {
    return empty() ? 0 : static_cast<std::uint64_t>(hi - lo);
  }
  Interval intersect(Interval o) const {
    return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
  }
  bool contains(std::int64_t v) const { return v >= lo && v <= hi; }
};

// Per-input-ordinal interval box.
using Box = std::vector<Interval>;

struct IntervalResult {
  Interval iv;
  // True when no intermediate wrapped: the enclosure is then an exact image
  // under unbounded integer arithmetic, which licenses backward narrowing.
  // The enclosure is sound either way.
  bool exact = true;
};

IntervalResult eval_interval(const Term& t, const Box& box, Width w);

// Assume the literal holds and narrow the box (HC4-style forward/backward
// pass). Returns false when some dimension became empty: the literal cannot
// hold anywhere in the box.
bool revise(const Literal& lit, Box& box, Width w);

// +1 literal certainly holds over the whole box, -1 certainly fails, 0 unknown.
int certainty(const Literal& lit, const Box& box, Width w);

}  // namespace htg::bmc
