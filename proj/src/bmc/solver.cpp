#include "bmc/solver.hpp"

#include <algorithm>

namespace htg::bmc {

namespace {

constexpr int kRevisePasses = 16;

// Narrow `box` under all literals until stable. Returns false on emptiness.
bool propagate(const std::vector<Literal>& pc, Box& box, Width w) {
  for (int pass = 0; pass < kRevisePasses; ++pass) {
    Box before = box;
    for (const Literal& lit : pc)
      if (!revise(lit, box, w)) return false;
    bool changed = false;
    for (std::size_t i = 0; i < box.size(); ++i)
      if (box[i].lo != before[i].lo || box[i].hi != before[i].hi) changed = true;
    if (!changed) return true;
  }
  return true;
}

std::int64_t pick_value(Interval iv) {
  if (iv.contains(0)) return 0;
  return iv.lo + (iv.hi - iv.lo) / 2;
}

bool substitute(const std::vector<Literal>& pc, const std::vector<std::int64_t>& model, Width w) {
  for (const Literal& lit : pc)
    if (!eval_literal(lit, model, w)) return false;
  return true;
}

}  // namespace

SolveResult solve(const std::vector<Literal>& pc, Box initial, Width w,
                  std::uint64_t node_budget) {
  SolveResult res;

  int max_ord = -1;
  for (const Literal& lit : pc) {
    max_ord = std::max(max_ord, max_input_ordinal(*lit.lhs));
    max_ord = std::max(max_ord, max_input_ordinal(*lit.rhs));
  }
  while (static_cast<int>(initial.size()) <= max_ord) initial.push_back(Interval::full(w));

  struct Node {
    Box box;
    int depth;
  };
  std::vector<Node> stack;
  stack.push_back({std::move(initial), 0});

  Box best_box;
  int best_depth = -1;

  while (!stack.empty()) {
    if (++res.nodes_used > node_budget) {
      res.status = SolveStatus::Unknown;
      res.narrowed = best_depth >= 0 ? best_box : stack.back().box;
      return res;
    }
    Node node = std::move(stack.back());
    stack.pop_back();

    if (!propagate(pc, node.box, w)) continue;

    if (node.depth > best_depth) {
      best_depth = node.depth;
      best_box = node.box;
    }

    // Try the obvious point; also decides all-singleton and
    // certainly-true boxes.
    std::vector<std::int64_t> candidate;
    candidate.reserve(node.box.size());
    for (const Interval& iv : node.box) candidate.push_back(pick_value(iv));
    if (substitute(pc, candidate, w)) {
      res.status = SolveStatus::Model;
      res.model = std::move(candidate);
      return res;
    }

    bool all_singleton = true;
    int split_dim = -1;
    std::uint64_t widest = 0;
    for (std::size_t i = 0; i < node.box.size(); ++i) {
      if (!node.box[i].singleton()) {
        all_singleton = false;
        std::uint64_t span = node.box[i].width_span();
        if (split_dim < 0 || span > widest) {
          split_dim = static_cast<int>(i);
          widest = span;
        }
      }
    }
    if (all_singleton) continue;  // substitution already rejected this point

    bool certainly_false = false;
    for (const Literal& lit : pc)
      if (certainty(lit, node.box, w) < 0) {
        certainly_false = true;
        break;
      }
    if (certainly_false) continue;

    const Interval& dim = node.box[static_cast<std::size_t>(split_dim)];
    std::int64_t mid = dim.lo + (dim.hi - dim.lo) / 2;
    Node lo_half{node.box, node.depth + 1};
    lo_half.box[static_cast<std::size_t>(split_dim)] = {dim.lo, mid};
    Node hi_half{std::move(node.box), node.depth + 1};
    hi_half.box[static_cast<std::size_t>(split_dim)] = {mid + 1, dim.hi};
    // Lower half explored first.
    stack.push_back(std::move(hi_half));
    stack.push_back(std::move(lo_half));
  }

  res.status = SolveStatus::Unsat;
  return res;
}

}  // namespace htg::bmc
