#include "analysis/ranking.hpp"

#include <algorithm>
#include <stdexcept>

namespace htg {

const char* strategy_name(Strategy s) {
  return s == Strategy::DepthFirst ? "depth" : "rank";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "depth") return Strategy::DepthFirst;
  if (name == "rank") return Strategy::RankScore;
  throw std::invalid_argument("unknown strategy: " + name + " (expected depth or rank)");
}

std::vector<int> rank_goals(const GoalsTree& tree, Strategy strategy) {
  std::vector<int> ids;
  ids.reserve(tree.goals.size());
  for (const Goal& g : tree.goals) ids.push_back(g.id);
  auto by_depth = [&](int a, int b) {
    const Goal& ga = tree.by_id(a);
    const Goal& gb = tree.by_id(b);
    if (ga.depth != gb.depth) return ga.depth > gb.depth;
    return a < b;
  };
  auto by_rank = [&](int a, int b) {
    const Goal& ga = tree.by_id(a);
    const Goal& gb = tree.by_id(b);
    if (ga.rank != gb.rank) return ga.rank > gb.rank;
    if (ga.power != gb.power) return ga.power > gb.power;
    return a < b;
  };
  if (strategy == Strategy::DepthFirst)
    std::sort(ids.begin(), ids.end(), by_depth);
  else
    std::sort(ids.begin(), ids.end(), by_rank);
  return ids;
}

}  // namespace htg
