#include "analysis/loop_bounds.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace htg {

using minic::Expr;
using minic::ExprKind;
using minic::Program;
using minic::Stmt;
using minic::StmtKind;
using minic::StmtPtr;

namespace {

void free_vars(const Expr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::Var) out.insert(e.name);
  if (e.lhs) free_vars(*e.lhs, out);
  if (e.rhs) free_vars(*e.rhs, out);
  for (const auto& a : e.args) free_vars(*a, out);
}

void assigned_vars(const std::vector<StmtPtr>& list, std::set<std::string>& out) {
  for (const auto& s : list) {
    if (s->kind == StmtKind::Assign) out.insert(s->name);
    assigned_vars(s->body, out);
    assigned_vars(s->else_body, out);
  }
}

bool constant_true(const Expr& e) {
  if (e.kind == ExprKind::IntLit) return e.int_value != 0;
  if (e.kind == ExprKind::BoolLit) return e.int_value != 0;
  return false;
}

void scan(const std::vector<StmtPtr>& list, LoopBoundPlan& plan) {
  for (const auto& s : list) {
    if (s->kind == StmtKind::While) {
      LoopBoundPlan::Entry entry;
      if (constant_true(*s->expr)) {
        entry.suspected_infinite = true;
      } else {
        std::set<std::string> cond_vars;
        free_vars(*s->expr, cond_vars);
        std::set<std::string> assigned;
        assigned_vars(s->body, assigned);
        bool any_assigned = std::any_of(cond_vars.begin(), cond_vars.end(),
                                        [&](const std::string& v) { return assigned.count(v); });
        entry.suspected_infinite = !cond_vars.empty() && !any_assigned;
      }
      plan.loops[s->loop_id] = entry;
    }
    scan(s->body, plan);
    scan(s->else_body, plan);
  }
}

}  // namespace

std::map<int, int> LoopBoundPlan::caps() const {
  std::map<int, int> out;
  for (const auto& [id, e] : loops)
    if (e.suspected_infinite) out[id] = e.current_bound;
  return out;
}

void LoopBoundPlan::grow() {
  for (auto& [id, e] : loops) e.current_bound = std::min(e.current_bound * 2, max_bound);
}

LoopBoundPlan plan_loop_bounds(const Program& p) {
  LoopBoundPlan plan;
  for (const auto& f : p.functions) scan(f.body, plan);
  return plan;
}

}  // namespace htg
