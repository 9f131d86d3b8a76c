#pragma once

#include "instrument/goals.hpp"
#include "minic/ast.hpp"

namespace htg {

struct InstrumentResult {
  minic::Program instrumented;
  GoalsTree tree;
};

// Injects GOAL_<n> labels into a copy of the program:
//   - at the start of every if-then block, else block, and a synthesized
//     empty else block when the branch had none;
//   - at the start of every loop body and right after the loop;
//   - at the start of every function body; at its end when the body can
//     fall through (a body ending in `return` gets no end label, and an
//     empty body keeps just the start label);
//   - in main, the start label is GOAL_0 and the end-of-main label sits
//     before a trailing return.
// Ids are dense and deterministic: GOAL_0, then each non-main function in
// source order (start, end, then its branch goals in pre-order), then
// end-of-main, then main's branch goals in pre-order.
// The labels are no-ops; the instrumented program is functionally
// equivalent to the input.
InstrumentResult inject_goals(const minic::Program& p);

// Fills depth, rank and parent for every goal from the goals graph:
// depth = 1 + longest back-edge-free path from the root.
void compute_depths(GoalsTree& tree);

}  // namespace htg
