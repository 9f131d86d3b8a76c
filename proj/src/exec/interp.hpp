#pragma once

#include <cstdint>
#include <map>

#include "exec/testcase.hpp"
#include "minic/ast.hpp"
#include "minic/value.hpp"

namespace htg {

struct ExecOptions {
  Width width = kDefaultWidth;
  std::uint64_t step_limit = 1'000'000;
  // Per-loop iteration caps (loop_id -> bound). A capped loop aborts the run
  // with outcome StepLimit and loop_capped set: every goal recorded up to
  // that point was genuinely visited, so a capped trace never over-claims
  // coverage. Used by the fuzzer to keep runs on potentially infinite loops
  // cheap; official tracer replays run uncapped.
  const std::map<int, int>* loop_caps = nullptr;
  // When set, running out of input values aborts with InputExhausted instead
  // of substituting zeros.
  bool strict_input = false;
};

// Deterministic interpretation of (possibly instrumented) MiniC. PUT faults
// (division by zero) are trace outcomes, not errors of the tool.
ExecutionTrace execute(const minic::Program& p, const TestCase& t, const ExecOptions& opts = {});

}  // namespace htg
