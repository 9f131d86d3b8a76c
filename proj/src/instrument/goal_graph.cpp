#include "instrument/goal_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "instrument/instrument.hpp"

namespace htg {

using minic::Expr;
using minic::ExprKind;
using minic::FunctionDecl;
using minic::Program;
using minic::Stmt;
using minic::StmtKind;
using minic::StmtPtr;

namespace {

using PredSet = std::set<int>;

struct FnSummary {
  int entry_goal = -1;
  PredSet exit_preds;  // goals live at returns / fall-through end
  bool built = false;
  bool building = false;
};

class GraphBuilder {
 public:
  GraphBuilder(const Program& p, GoalsTree& tree) : prog_(p), tree_(tree) {}

  void run() {
    for (const auto& f : prog_.functions) summary(f.name);
    attach_orphans();
    tree_.edges.assign(edges_.begin(), edges_.end());
    tree_.back_edges.assign(back_edges_.begin(), back_edges_.end());
  }

 private:
  FnSummary& summary(const std::string& name) {
    FnSummary& s = summaries_[name];
    if (s.built || s.building) return s;
    const FunctionDecl* f = prog_.find(name);
    if (!f) throw std::logic_error("goal graph: undeclared function " + name);
    s.building = true;
    if (!f->body.empty() && f->body.front()->kind == StmtKind::Label)
      s.entry_goal = f->body.front()->goal_id;
    PredSet end = walk_stmts(f->body, {}, &s);
    s.exit_preds.insert(end.begin(), end.end());
    // reach_error is the error location: execution conceptually stops there,
    // so nothing flows out of it. This is what keeps code after an
    // unconditional error call out of reach in the depth graph.
    if (name == minic::kReachErrorName) s.exit_preds.clear();
    s.building = false;
    s.built = true;
    return s;
  }

  void visit_goal(int goal, const PredSet& preds) {
    for (int p : preds) edges_.emplace(p, goal);
  }

  PredSet walk_stmts(const std::vector<StmtPtr>& list, PredSet preds, FnSummary* fn) {
    for (const auto& sp : list) preds = walk_stmt(*sp, std::move(preds), fn);
    return preds;
  }

  PredSet walk_stmt(const Stmt& s, PredSet preds, FnSummary* fn) {
    switch (s.kind) {
      case StmtKind::Label:
        if (s.goal_id >= 0) {
          visit_goal(s.goal_id, preds);
          return {s.goal_id};
        }
        return preds;
      case StmtKind::Block:
        return walk_stmts(s.body, std::move(preds), fn);
      case StmtKind::Decl:
      case StmtKind::Assign:
        if (s.expr) preds = walk_expr(*s.expr, std::move(preds));
        return preds;
      case StmtKind::CallStmt:
        return walk_expr(*s.expr, std::move(preds));
      case StmtKind::Return:
        if (s.expr) preds = walk_expr(*s.expr, std::move(preds));
        fn->exit_preds.insert(preds.begin(), preds.end());
        return {};
      case StmtKind::AssertFail: {
        if (const FunctionDecl* re = prog_.find(minic::kReachErrorName)) {
          FnSummary& callee = summary(re->name);
          if (callee.entry_goal >= 0) visit_goal(callee.entry_goal, preds);
        }
        return {};  // terminal
      }
      case StmtKind::If: {
        preds = walk_expr(*s.expr, std::move(preds));
        PredSet at_branch = preds;
        PredSet t_exit = walk_branch(s.body, at_branch, fn);
        PredSet e_exit = walk_branch(s.else_body, at_branch, fn);
        t_exit.insert(e_exit.begin(), e_exit.end());
        return t_exit;
      }
      case StmtKind::While: {
        preds = walk_expr(*s.expr, std::move(preds));
        PredSet entry = preds;
        int body_goal = -1;
        if (!s.body.empty() && s.body.front()->kind == StmtKind::Label)
          body_goal = s.body.front()->goal_id;
        PredSet body_exit = walk_branch(s.body, entry, fn);
        if (body_goal >= 0)
          for (int p : body_exit) back_edges_.emplace(p, body_goal);
        // Loop exit: taken either before the first iteration or after any
        // body completion; the after-loop label right behind the statement
        // picks these up.
        PredSet out = entry;
        out.insert(body_exit.begin(), body_exit.end());
        return out;
      }
    }
    return preds;
  }

  PredSet walk_branch(const std::vector<StmtPtr>& body, const PredSet& preds, FnSummary* fn) {
    return walk_stmts(body, preds, fn);
  }

  // Threads control through calls in evaluation order (left to right).
  PredSet walk_expr(const Expr& e, PredSet preds) {
    switch (e.kind) {
      case ExprKind::IntLit:
      case ExprKind::BoolLit:
      case ExprKind::Var:
      case ExprKind::NondetInt:
      case ExprKind::NondetBool:
        return preds;
      case ExprKind::Unary:
        return walk_expr(*e.lhs, std::move(preds));
      case ExprKind::Binary:
        preds = walk_expr(*e.lhs, std::move(preds));
        return walk_expr(*e.rhs, std::move(preds));
      case ExprKind::Call: {
        for (const auto& a : e.args) preds = walk_expr(*a, std::move(preds));
        FnSummary& callee = summary(e.name);
        if (callee.entry_goal >= 0) {
          visit_goal(callee.entry_goal, preds);
          if (callee.building) return {callee.entry_goal};  // recursive cycle
          return callee.exit_preds;
        }
        return preds;
      }
    }
    return preds;
  }

  // Goals with no incoming edge (never-called functions, code behind an
  // unconditional return) hang off the root so depth stays defined.
  void attach_orphans() {
    for (;;) {
      std::set<int> reach;
      std::map<int, std::vector<int>> adj;
      for (auto [a, b] : edges_) adj[a].push_back(b);
      std::vector<int> stack{0};
      reach.insert(0);
      while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        for (int m : adj[n])
          if (reach.insert(m).second) stack.push_back(m);
      }
      int orphan = -1;
      for (const Goal& g : tree_.goals)
        if (!reach.count(g.id)) { orphan = g.id; break; }
      if (orphan < 0) return;
      edges_.emplace(0, orphan);
    }
  }

  const Program& prog_;
  GoalsTree& tree_;
  std::map<std::string, FnSummary> summaries_;
  std::set<std::pair<int, int>> edges_;
  std::set<std::pair<int, int>> back_edges_;
};

}  // namespace

void build_goal_graph(const Program& instrumented, GoalsTree& tree) {
  GraphBuilder(instrumented, tree).run();
}

void compute_depths(GoalsTree& tree) {
  const int n = tree.size();
  if (n == 0) return;

  // The forward edge set can still contain cycles through recursive calls;
  // drop edges that close a cycle in a deterministic DFS from the root.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : tree.edges) adj[static_cast<std::size_t>(a)].push_back(b);
  for (auto& v : adj) std::sort(v.begin(), v.end());

  std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<int, int>> dag;
  std::vector<int> topo;
  // Iterative DFS, children in ascending id order.
  struct Frame { int node; std::size_t next = 0; };
  std::vector<Frame> stack;
  stack.push_back({0});
  color[0] = 1;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    auto& out = adj[static_cast<std::size_t>(fr.node)];
    if (fr.next < out.size()) {
      int child = out[fr.next++];
      if (color[static_cast<std::size_t>(child)] == 1) continue;  // cycle edge, dropped
      dag.emplace_back(fr.node, child);
      if (color[static_cast<std::size_t>(child)] == 0) {
        color[static_cast<std::size_t>(child)] = 1;
        stack.push_back({child});
      }
    } else {
      color[static_cast<std::size_t>(fr.node)] = 2;
      topo.push_back(fr.node);
      stack.pop_back();
    }
  }
  std::reverse(topo.begin(), topo.end());

  std::vector<std::vector<int>> dag_in(static_cast<std::size_t>(n));
  for (auto [a, b] : dag) dag_in[static_cast<std::size_t>(b)].push_back(a);

  for (Goal& g : tree.goals) {
    g.depth = 0;
    g.parent = -1;
  }
  tree.by_id(0).depth = 1;
  for (int node : topo) {
    Goal& g = tree.by_id(node);
    for (int p : dag_in[static_cast<std::size_t>(node)]) {
      const Goal& pred = tree.by_id(p);
      if (pred.depth + 1 > g.depth || (pred.depth + 1 == g.depth && p < g.parent)) {
        g.depth = pred.depth + 1;
        g.parent = p;
      }
    }
  }
  for (Goal& g : tree.goals) {
    if (g.depth == 0) g.depth = 1;  // defensive: everything is root-reachable
    g.rank = g.depth * g.power;
  }
}

}  // namespace htg
