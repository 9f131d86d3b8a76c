#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "minic/ast.hpp"
#include "minic/value.hpp"

namespace htg {

// Per-input-site value range extracted from branch conditions that match the
// (variable op literal) pattern on a nondet-fed variable.
//
// [lo, hi] and `excluded` carry must-hold constraints: intersected only when
// every execution reaching the non-error side of a guard satisfies them.
// `candidates` are must-try boundary intervals (equality points, literal
// neighborhoods) that the mutator snaps to but that do not restrict the
// domain.
struct InputRange {
  int site = -1;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::set<std::int64_t> excluded;
  std::vector<std::pair<std::int64_t, std::int64_t>> candidates;
  bool is_bool = false;

  static InputRange full(Width w, int site, bool is_bool = false);
  bool is_full(Width w) const;
  bool contains(std::int64_t v) const { return v >= lo && v <= hi && !excluded.count(v); }
  // Nearest value to v inside [lo,hi] \ excluded; lo if the range is empty.
  std::int64_t clamp(std::int64_t v) const;
};

struct RangeMap {
  Width width = kDefaultWidth;
  std::map<int, InputRange> by_site;
  // Read-site sequence observed on the analysis probe run; used to guess the
  // site of a stream position when no trace is available.
  std::vector<int> canonical_sites;

  const InputRange* for_site(int site) const;
  // Range governing stream position `ordinal`. `sites` (when given) is the
  // read-site sequence of the trace the value came from; the canonical
  // sequence is the fallback, extended by its last site for loop-carried
  // reads. Full domain when nothing is known.
  InputRange resolve(std::size_t ordinal, const std::vector<int>* sites = nullptr) const;
};

// Numbers every nondet read expression (pre-order over functions in source
// order); returns the number of sites. Run once on the instrumented program
// before analysis or execution.
int assign_nondet_sites(minic::Program& p);

// Best-effort range extraction per the (x op literal) pattern. When exactly
// one arm of a guard is an error call, the polarity avoiding it contributes
// must-constraints; all other comparisons only contribute candidates.
RangeMap extract_ranges(const minic::Program& p, Width w);

}  // namespace htg
