#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "analysis/ranges.hpp"
#include "bmc/symexec.hpp"
#include "exec/interp.hpp"
#include "fuzz/seed.hpp"
#include "instrument/goals.hpp"

namespace htg {

struct CoverageRecord {
  std::set<int> covered;                    // grows monotonically
  std::map<int, std::string> first_cover;   // goal -> first covering test case
};

// The mutable pipeline state the tracer is the single writer of.
struct SharedState {
  std::vector<std::pair<TestCase, ExecutionTrace>> test_cases;  // T, officially replayed
  std::vector<int> goal_queue;  // G: pending goals in rank order
  CoverageRecord coverage;      // goals covered array
  std::vector<Seed> seeds;      // S
  int consumed_values = 0;      // max nondet reads observed on any trace
  int consumed_bytes = 0;       // same, in bytes
  int max_depth_seen = 0;       // deepest goal depth observed so far
};

struct TracerContext {
  const minic::Program* instrumented = nullptr;
  const GoalsTree* tree = nullptr;
  const RangeMap* ranges = nullptr;
  ExecOptions exec_opts;  // official replays: no loop caps
};

// Engine output entering the tracer: a complete test case, or a partial BMC
// witness to be completed randomly.
struct EngineOutput {
  std::optional<TestCase> testcase;
  std::optional<bmc::Witness> partial;
};

// Fills unconstrained ordinals of a partial witness uniformly at random from
// the witness's narrowed interval intersected with the extracted input range
// (full domain as fallback).
TestCase complete_testcase(const bmc::Witness& partial, const RangeMap& ranges, Width w,
                           std::mt19937_64& rng);

// Algorithm-3 step for one engine output: wrap/complete into a test case,
// replay it officially, record coverage, prune the goal queue, and add the
// case to the seed store. Returns the id of the appended test case.
std::string run_tracer(const TracerContext& ctx, const EngineOutput& output, SharedState& state,
                       std::mt19937_64& rng);

// Batch variant for fuzzer outputs: every case is replayed officially and
// recorded; only the highest-impact cases (new coverage, or reaching the
// maximum observed depth) are promoted to seeds.
void run_tracer_batch(const TracerContext& ctx,
                      const std::vector<std::pair<TestCase, ExecutionTrace>>& batch,
                      SharedState& state);

// Promotion rule by itself (used by the batch path and tested directly):
// trace index -> promoted?
std::vector<bool> promotion_mask(const std::vector<std::pair<TestCase, ExecutionTrace>>& replayed,
                                 const GoalsTree& tree, SharedState& state);

}  // namespace htg
