#pragma once

#include <map>

#include "minic/ast.hpp"

namespace htg {

// Fuzzing-time iteration caps for loops that look like they may never
// terminate: constant-true condition, or no condition variable assigned in
// the body. Bounds start at 2 and double between fuzzing rounds up to a cap.
struct LoopBoundPlan {
  struct Entry {
    bool suspected_infinite = false;
    int current_bound = 2;
  };
  std::map<int, Entry> loops;  // loop_id -> entry
  int max_bound = 64;

  // loop_id -> iteration cap, suspected-infinite loops only.
  std::map<int, int> caps() const;
  // Doubles every bound, saturating at max_bound.
  void grow();
};

LoopBoundPlan plan_loop_bounds(const minic::Program& p);

}  // namespace htg
