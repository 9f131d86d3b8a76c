#include "fuzz/fuzzer.hpp"

#include <algorithm>
#include <chrono>

#include "fuzz/mutate.hpp"

namespace htg {

namespace {

int deepest_depth(const ExecutionTrace& t, const GoalsTree& tree) {
  int best = 0;
  for (int g : t.goals_hit)
    if (g >= 0 && g < tree.size()) best = std::max(best, tree.by_id(g).depth);
  return best;
}

struct Session {
  std::set<int> goals_seen;
  std::set<std::pair<int, int>> edges_seen;

  bool is_new_state(const ExecutionTrace& t) const {
    for (int g : t.goals_hit)
      if (!goals_seen.count(g)) return true;
    for (const auto& e : t.goal_edges)
      if (!edges_seen.count(e)) return true;
    return false;
  }

  int absorb(const ExecutionTrace& t) {
    int new_goals = 0;
    for (int g : t.goals_hit)
      if (goals_seen.insert(g).second) ++new_goals;
    for (const auto& e : t.goal_edges) edges_seen.insert(e);
    return new_goals;
  }
};

}  // namespace

FuzzResult run_fuzzer(const minic::Program& instrumented, const GoalsTree& tree,
                      std::optional<int> target_goal, std::vector<Seed> seeds,
                      const RangeMap& ranges, const LoopBoundPlan& loop_plan,
                      const FuzzBudget& budget, const ExecOptions& base_opts,
                      std::mt19937_64& rng) {
  FuzzResult res;
  Session session;

  std::map<int, int> caps = loop_plan.caps();
  ExecOptions opts = base_opts;
  opts.loop_caps = &caps;

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.seconds));
  auto out_of_budget = [&]() {
    if (budget.iterations > 0) return res.executions >= budget.iterations;
    return std::chrono::steady_clock::now() >= deadline;
  };

  std::set<std::vector<std::int64_t>> emitted;
  std::uint64_t recency = 0;

  auto finish_check = [&]() {
    if (target_goal && session.goals_seen.count(*target_goal)) {
      res.target_covered = true;
      return true;
    }
    return static_cast<int>(session.goals_seen.size()) >= tree.size();
  };

  // Executes a candidate; returns true when the run uncovered a new state.
  auto try_case = [&](TestCase tc) -> bool {
    if (emitted.count(tc.values)) return false;
    ++res.executions;
    ExecutionTrace trace = execute(instrumented, tc, opts);
    for (int g : trace.goals_hit) res.covered.insert(g);
    bool fresh = session.is_new_state(trace);
    int new_goals = session.absorb(trace);
    bool interesting = fresh || trace.outcome == Outcome::ReachedError ||
                       trace.outcome == Outcome::RuntimeFault;
    if (interesting) {
      emitted.insert(tc.values);
      if (fresh) {
        Seed next;
        next.tc = tc;
        next.deepest_depth = deepest_depth(trace, tree);
        next.unique_goals = new_goals;
        next.recency = ++recency;
        next.read_sites = trace.read_sites;
        seeds.push_back(std::move(next));
      }
      res.cases.emplace_back(std::move(tc), std::move(trace));
    }
    return fresh;
  };

  // Calibration pass over the starting seeds.
  for (const Seed& s : seeds) {
    if (out_of_budget()) break;
    try_case(s.tc);
    if (finish_check()) return res;
  }

  int stalls = 0;
  while (!out_of_budget()) {
    if (seeds.empty()) break;
    // Highest (deepest_depth, unique_goals, recency) first.
    std::size_t best = 0;
    for (std::size_t i = 1; i < seeds.size(); ++i) {
      const Seed& a = seeds[i];
      const Seed& b = seeds[best];
      auto key = [](const Seed& s) {
        return std::make_tuple(s.deepest_depth, s.unique_goals, s.recency);
      };
      if (key(a) > key(b)) best = i;
    }
    Seed current = seeds[best];

    bool any_fresh = false;
    MutationLimits limits{budget.min_case_len, budget.max_case_len};
    for (int e = 0; e < current.energy && !out_of_budget(); ++e) {
      const Seed* partner = nullptr;
      if (seeds.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
        partner = &seeds[pick(rng)];
      }
      TestCase tc =
          mutate(current, partner, ranges, limits, rng, /*force_length_change=*/stalls >= 3);
      any_fresh |= try_case(std::move(tc));
      if (finish_check()) return res;
    }
    stalls = any_fresh ? 0 : stalls + 1;
  }

  res.budget_exhausted = true;
  return res;
}

}  // namespace htg
