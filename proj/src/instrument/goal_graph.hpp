#pragma once

#include "instrument/goals.hpp"
#include "minic/ast.hpp"

namespace htg {

// Walks the instrumented program and fills tree.edges / tree.back_edges.
// Assumes every function body starts with its goal label.
void build_goal_graph(const minic::Program& instrumented, GoalsTree& tree);

}  // namespace htg
