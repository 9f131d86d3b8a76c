#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "analysis/loop_bounds.hpp"
#include "analysis/ranges.hpp"
#include "exec/interp.hpp"
#include "fuzz/seed.hpp"
#include "instrument/goals.hpp"

namespace htg {

struct FuzzBudget {
  // iterations > 0 bounds the number of executions (deterministic runs);
  // otherwise seconds bounds wall time.
  std::uint64_t iterations = 0;
  double seconds = 0.0;
  std::size_t min_case_len = 0;  // consumed input size, in values
  std::size_t max_case_len = 16;
};

struct FuzzResult {
  // Saved cases: runs that reached a new program state (new goal or new
  // goal-pair edge) or ended in an error/fault. Traces come from the capped
  // interpreter; goals in them are genuine (caps only shorten runs).
  std::vector<std::pair<TestCase, ExecutionTrace>> cases;
  std::set<int> covered;  // union over all executions
  std::uint64_t executions = 0;
  bool budget_exhausted = false;
  bool target_covered = false;
};

// Evolutionary mutation fuzzing: pick the best seed by (deepest goal depth,
// goals covered first, recency), spend its energy on mutants, retain mutants
// that reach new states as fresh seeds. After stalls the mutations switch to
// adding/removing a value. Mutated values come only from the extracted
// ranges; suspected-infinite loops run under the plan's iteration caps.
// Stops on budget, on covering the target goal, or on covering every goal.
FuzzResult run_fuzzer(const minic::Program& instrumented, const GoalsTree& tree,
                      std::optional<int> target_goal, std::vector<Seed> seeds,
                      const RangeMap& ranges, const LoopBoundPlan& loop_plan,
                      const FuzzBudget& budget, const ExecOptions& base_opts,
                      std::mt19937_64& rng);

}  // namespace htg
