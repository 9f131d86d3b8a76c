#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minic/ast.hpp"

namespace htg {

enum class GoalKind {
  IfThen,
  Else,
  EmptyElse,
  LoopBody,
  AfterLoop,
  FunctionStart,
  FunctionEnd,
  MainStart,
  EndOfMain,
};

const char* goal_kind_name(GoalKind k);
GoalKind goal_kind_from_name(const std::string& name);

// Branching power, 1..5. Function goals score 4 except in main, whose start
// and end goals score 1.
int goal_power(GoalKind k);

struct Goal {
  int id = -1;
  GoalKind kind{};
  int depth = 0;  // longest root-to-goal path in the goals graph, root = 1
  int power = 1;
  int rank = 0;  // depth * power
  int parent = -1;  // deepest predecessor (DAG); -1 for the root
  std::string function;
  minic::SourceLoc loc;
  int loop_id = -1;      // LoopBody / AfterLoop
  bool error_goal = false;  // label falls directly into reach_error
};

// Goals plus the goal-level control-flow graph used for depth assignment.
// Edges follow syntactic control-flow succession (no reachability pruning):
// branches fan out, calls enter the callee's start goal and come back from
// its exit goals, loops contribute a back edge (kept separately) and an exit
// edge. Calls to reach_error terminate flow: the error location has no
// successors, which is what makes the end-of-main goal of the running
// example unreachable yet deepest.
struct GoalsTree {
  std::vector<Goal> goals;                       // dense, index == id
  std::vector<std::pair<int, int>> edges;        // depth DAG edges, sorted
  std::vector<std::pair<int, int>> back_edges;   // loop back edges, sorted

  Goal& by_id(int id) { return goals.at(static_cast<std::size_t>(id)); }
  const Goal& by_id(int id) const { return goals.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(goals.size()); }
};

}  // namespace htg
