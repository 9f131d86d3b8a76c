#pragma once

#include <random>
#include <set>

#include "analysis/ranges.hpp"
#include "exec/interp.hpp"
#include "fuzz/fuzzer.hpp"
#include "instrument/goals.hpp"

namespace htg {

// Fallback engine for the goals left after the main loop: no mutation, just
// random values drawn from the identified input ranges. Terminates upon
// covering all remaining goals or exhausting the budget. Saved cases are the
// runs that covered a remaining goal.
FuzzResult run_selective_fuzzer(const minic::Program& instrumented, const GoalsTree& tree,
                                const std::set<int>& remaining, const RangeMap& ranges,
                                const FuzzBudget& budget, const ExecOptions& base_opts,
                                std::mt19937_64& rng);

}  // namespace htg
