#include "tracer/tracer.hpp"

#include <algorithm>

namespace htg {

namespace {

int deepest_depth(const ExecutionTrace& t, const GoalsTree& tree) {
  int best = 0;
  for (int g : t.goals_hit)
    if (g >= 0 && g < tree.size()) best = std::max(best, tree.by_id(g).depth);
  return best;
}

// Official replay + bookkeeping shared by both tracer entry points.
ExecutionTrace record_case(const TracerContext& ctx, TestCase& tc, SharedState& state) {
  tc.id = "tc-" + std::to_string(state.test_cases.size());
  ExecutionTrace trace = execute(*ctx.instrumented, tc, ctx.exec_opts);
  for (int g : trace.goals_hit) {
    if (state.coverage.covered.insert(g).second)
      state.coverage.first_cover[g] = tc.id;
  }
  std::erase_if(state.goal_queue, [&](int g) { return state.coverage.covered.count(g) > 0; });
  state.consumed_values = std::max(state.consumed_values, trace.nondet_reads);
  state.consumed_bytes =
      std::max(state.consumed_bytes, consumed_bytes(trace, ctx.exec_opts.width.scalar_bytes()));
  state.max_depth_seen = std::max(state.max_depth_seen, deepest_depth(trace, *ctx.tree));
  state.test_cases.emplace_back(tc, trace);
  return state.test_cases.back().second;
}

Seed make_seed(const TestCase& tc, const ExecutionTrace& trace, const GoalsTree& tree,
               const SharedState& state) {
  Seed s;
  s.tc = tc;
  s.deepest_depth = deepest_depth(trace, tree);
  s.read_sites = trace.read_sites;
  int unique = 0;
  for (int g : trace.goals_hit) {
    auto it = state.coverage.first_cover.find(g);
    if (it != state.coverage.first_cover.end() && it->second == tc.id) ++unique;
  }
  s.unique_goals = unique;
  s.recency = state.test_cases.size();
  return s;
}

}  // namespace

TestCase complete_testcase(const bmc::Witness& partial, const RangeMap& ranges, Width w,
                           std::mt19937_64& rng) {
  TestCase tc;
  tc.provenance = Provenance::TracerCompleted;
  tc.values.reserve(partial.narrowed.size());
  for (std::size_t i = 0; i < partial.narrowed.size(); ++i) {
    bmc::Interval iv = partial.narrowed[i];
    if (iv.empty()) iv = bmc::Interval::full(w);
    if (iv.singleton()) {
      tc.values.push_back(iv.lo);
      continue;
    }
    InputRange r = ranges.resolve(i);
    InputRange draw = r;
    // Narrowed witness progress first, intersected with the static range.
    draw.lo = std::max(iv.lo, r.lo);
    draw.hi = std::min(iv.hi, r.hi);
    if (draw.lo > draw.hi) {
      draw.lo = iv.lo;
      draw.hi = iv.hi;
      draw.excluded.clear();
    }
    tc.values.push_back(draw_in_range(draw, rng));
  }
  return tc;
}

std::string run_tracer(const TracerContext& ctx, const EngineOutput& output, SharedState& state,
                       std::mt19937_64& rng) {
  TestCase tc;
  if (output.partial) {
    tc = complete_testcase(*output.partial, *ctx.ranges, ctx.exec_opts.width, rng);
  } else {
    tc = *output.testcase;
  }
  ExecutionTrace trace = record_case(ctx, tc, state);
  state.seeds.push_back(make_seed(tc, trace, *ctx.tree, state));
  return tc.id;
}

std::vector<bool> promotion_mask(const std::vector<std::pair<TestCase, ExecutionTrace>>& replayed,
                                 const GoalsTree& tree, SharedState& state) {
  std::vector<bool> mask(replayed.size(), false);
  for (std::size_t i = 0; i < replayed.size(); ++i) {
    const auto& [tc, trace] = replayed[i];
    bool covered_new = false;
    for (int g : trace.goals_hit) {
      auto it = state.coverage.first_cover.find(g);
      if (it != state.coverage.first_cover.end() && it->second == tc.id) covered_new = true;
    }
    int depth = deepest_depth(trace, tree);
    mask[i] = covered_new || (depth > 0 && depth == state.max_depth_seen);
  }
  return mask;
}

void run_tracer_batch(const TracerContext& ctx,
                      const std::vector<std::pair<TestCase, ExecutionTrace>>& batch,
                      SharedState& state) {
  std::vector<std::pair<TestCase, ExecutionTrace>> replayed;
  replayed.reserve(batch.size());
  for (const auto& [tc_in, capped_trace] : batch) {
    (void)capped_trace;
    TestCase tc = tc_in;
    ExecutionTrace trace = record_case(ctx, tc, state);
    replayed.emplace_back(std::move(tc), std::move(trace));
  }
  std::vector<bool> mask = promotion_mask(replayed, *ctx.tree, state);
  for (std::size_t i = 0; i < replayed.size(); ++i)
    if (mask[i])
      state.seeds.push_back(make_seed(replayed[i].first, replayed[i].second, *ctx.tree, state));
}

}  // namespace htg
