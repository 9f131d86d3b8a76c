#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bmc/interval.hpp"
#include "bmc/term.hpp"
#include "minic/ast.hpp"
#include "minic/value.hpp"

namespace htg::bmc {

struct BmcConfig {
  Width width = kDefaultWidth;
  int unwind_k = 8;        // max body entries per loop per path
  bool light_mode = false; // seed-generation settings: callers pair this with a small k
  std::uint64_t node_budget = 200'000;  // shared by path exploration and the solver
  int max_call_depth = 64;
};

enum class BmcStatus {
  Success,  // complete witness produced
  Failure,  // all paths within the unwind bound explored, target unreachable
            // within k (not a proof of unreachability)
  Timeout,  // budget or solver gave out; a partial witness may be attached
};

// Input assignment driving execution to the target goal. Partial witnesses
// carry the narrowed per-ordinal intervals reached when the engine gave up.
struct Witness {
  int target_goal = -1;
  bool complete = false;
  std::vector<std::int64_t> values;  // complete: per read ordinal
  std::vector<Interval> narrowed;    // partial: per read ordinal
};

struct BmcResult {
  BmcStatus status = BmcStatus::Failure;
  std::optional<Witness> witness;
  std::uint64_t nodes_used = 0;
  bool solver_gave_up = false;
};

// Depth-first symbolic execution of the instrumented program, then-branch
// first, loops unwound at most cfg.unwind_k times per path. Reaching the
// target label triggers the interval solver on the accumulated path
// constraint; models become complete witnesses (substitution-verified, and
// replaying them through the tracer hits the target by construction: every
// branch decision on the path is pinned by a literal, and divisions carry a
// nonzero-divisor literal).
BmcResult run_bmc(const minic::Program& instrumented, int target_goal, const BmcConfig& cfg);

}  // namespace htg::bmc
