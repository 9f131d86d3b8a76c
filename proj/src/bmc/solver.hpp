#pragma once

#include <cstdint>
#include <vector>

#include "bmc/interval.hpp"
#include "bmc/term.hpp"
#include "minic/value.hpp"

namespace htg::bmc {

enum class SolveStatus { Model, Unsat, Unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<std::int64_t> model;  // Model: one value per box dimension
  Box narrowed;                     // Unknown: deepest surviving box
  std::uint64_t nodes_used = 0;
};

// Interval propagation + branch-and-bound over the conjunction `pc`.
// Propagates every literal to a fixpoint, splits the widest dimension, and
// decides leaves by substitution through the exact W-bit evaluator; every
// returned model is substitution-verified. Deterministic for a given budget.
// Unknown carries the most-narrowed box reached, a subset of `initial`.
SolveResult solve(const std::vector<Literal>& pc, Box initial, Width w,
                  std::uint64_t node_budget);

}  // namespace htg::bmc
