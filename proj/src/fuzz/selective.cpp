#include "fuzz/selective.hpp"

#include <chrono>

#include "fuzz/mutate.hpp"

namespace htg {

FuzzResult run_selective_fuzzer(const minic::Program& instrumented, const GoalsTree& tree,
                                const std::set<int>& remaining, const RangeMap& ranges,
                                const FuzzBudget& budget, const ExecOptions& base_opts,
                                std::mt19937_64& rng) {
  (void)tree;
  FuzzResult res;
  if (remaining.empty()) return res;

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.seconds));
  auto out_of_budget = [&]() {
    if (budget.iterations > 0) return res.executions >= budget.iterations;
    return std::chrono::steady_clock::now() >= deadline;
  };

  std::set<int> still = remaining;
  std::size_t lo = budget.min_case_len;
  std::size_t hi = std::max(budget.max_case_len, lo);

  while (!still.empty() && !out_of_budget()) {
    std::uniform_int_distribution<std::size_t> len_dist(lo, hi);
    std::size_t len = len_dist(rng);
    TestCase tc;
    tc.provenance = Provenance::Selective;
    tc.values.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
      tc.values.push_back(draw_in_range(ranges.resolve(i), rng));

    ++res.executions;
    ExecutionTrace trace = execute(instrumented, tc, base_opts);
    bool useful = false;
    for (int g : trace.goals_hit) {
      res.covered.insert(g);
      if (still.erase(g)) useful = true;
    }
    if (useful) res.cases.emplace_back(std::move(tc), std::move(trace));
  }
  res.budget_exhausted = !still.empty();
  return res;
}

}  // namespace htg
