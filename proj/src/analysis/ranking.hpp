#pragma once

#include <string>
#include <vector>

#include "instrument/goals.hpp"

namespace htg {

enum class Strategy { DepthFirst, RankScore };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);  // "depth" | "rank"

// Full permutation of the goal ids.
//   DepthFirst: depth descending, ties by ascending id.
//   RankScore:  rank descending, ties by power descending, then ascending id.
// Depths must have been computed.
std::vector<int> rank_goals(const GoalsTree& tree, Strategy strategy);

}  // namespace htg
