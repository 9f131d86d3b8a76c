#include "bmc/symexec.hpp"

#include <functional>
#include <map>
#include <string>

#include "bmc/solver.hpp"

namespace htg::bmc {

using minic::Expr;
using minic::ExprKind;
using minic::FunctionDecl;
using minic::Program;
using minic::Stmt;
using minic::StmtKind;
using minic::StmtPtr;

namespace {

struct BudgetOut {};

struct SymFrame {
  const FunctionDecl* fn = nullptr;
  std::vector<std::map<std::string, TermRef>> scopes;
};

struct SymState {
  std::vector<SymFrame> frames;
  std::vector<Literal> pc;
  Box box;  // one dimension per nondet read so far
  int reads = 0;
};

class Engine {
 public:
  Engine(const Program& p, int target, const BmcConfig& cfg)
      : prog_(p), target_(target), cfg_(cfg) {}

  BmcResult run() {
    try {
      SymState st;
      call_function(std::move(st), prog_.main_function(), {},
                    [](SymState, TermRef) { /* program returned, path ends */ });
    } catch (const BudgetOut&) {
      incomplete_ = true;
    }
    BmcResult res = std::move(result_);
    res.nodes_used = used_;
    if (res.status != BmcStatus::Success) {
      res.status = incomplete_ ? BmcStatus::Timeout : BmcStatus::Failure;
      if (res.status == BmcStatus::Timeout && partial_) res.witness = partial_;
      res.solver_gave_up = solver_gave_up_;
    }
    return res;
  }

 private:
  using IntCont = std::function<void(SymState, TermRef)>;
  using BoolCont = std::function<void(SymState, bool)>;
  using NormalCont = std::function<void(SymState)>;
  using ReturnCont = std::function<void(SymState, TermRef)>;

  void tick() {
    if (++used_ > cfg_.node_budget) throw BudgetOut{};
  }

  bool add_literal(SymState& st, Literal lit) {
    // Quick infeasibility check; the full solver runs at the target.
    if (!revise(lit, st.box, cfg_.width)) return false;
    if (!revise(lit, st.box, cfg_.width)) return false;
    st.pc.push_back(std::move(lit));
    return true;
  }

  void fork_literal(SymState st, Literal lit, const BoolCont& k) {
    tick();
    SymState t = st;
    if (add_literal(t, lit)) k(std::move(t), true);
    if (done_) return;
    Literal neg{lit.lhs, negate_cmp(lit.op), lit.rhs};
    if (add_literal(st, std::move(neg))) k(std::move(st), false);
  }

  void visit_goal(SymState st, int goal, const NormalCont& k) {
    if (done_) return;
    if (goal != target_) {
      k(std::move(st));
      return;
    }
    // Reached the target: decide the path constraint. The path ends here
    // either way; sibling paths are explored by the DFS.
    std::uint64_t remaining = used_ < cfg_.node_budget ? cfg_.node_budget - used_ : 1;
    SolveResult r = solve(st.pc, st.box, cfg_.width, remaining);
    used_ += r.nodes_used;
    if (r.status == SolveStatus::Model) {
      Witness w;
      w.target_goal = target_;
      w.complete = true;
      w.values = std::move(r.model);
      w.values.resize(static_cast<std::size_t>(st.reads), 0);
      result_.status = BmcStatus::Success;
      result_.witness = std::move(w);
      done_ = true;
    } else if (r.status == SolveStatus::Unknown) {
      solver_gave_up_ = true;
      incomplete_ = true;
      if (!partial_) {
        Witness w;
        w.target_goal = target_;
        w.complete = false;
        w.narrowed = std::move(r.narrowed);
        w.narrowed.resize(static_cast<std::size_t>(st.reads), Interval::full(cfg_.width));
        partial_ = std::move(w);
      }
    }
  }

  void exec_list(SymState st, const std::vector<StmtPtr>* list, std::size_t idx,
                 const NormalCont& k_next, const ReturnCont& k_ret) {
    if (done_) return;
    if (idx == list->size()) {
      k_next(std::move(st));
      return;
    }
    tick();
    const Stmt& s = *(*list)[idx];
    NormalCont next = [this, list, idx, k_next, k_ret](SymState st2) {
      exec_list(std::move(st2), list, idx + 1, k_next, k_ret);
    };
    exec_stmt(std::move(st), s, next, k_ret);
  }

  void exec_scoped(SymState st, const std::vector<StmtPtr>* list, const NormalCont& k_next,
                   const ReturnCont& k_ret) {
    st.frames.back().scopes.emplace_back();
    NormalCont pop_then = [k_next](SymState st2) {
      st2.frames.back().scopes.pop_back();
      k_next(std::move(st2));
    };
    exec_list(std::move(st), list, 0, pop_then, k_ret);
  }

  void exec_stmt(SymState st, const Stmt& s, const NormalCont& k_next, const ReturnCont& k_ret) {
    switch (s.kind) {
      case StmtKind::Label:
        if (s.goal_id >= 0) {
          visit_goal(std::move(st), s.goal_id, k_next);
        } else {
          k_next(std::move(st));
        }
        return;
      case StmtKind::Block:
        exec_scoped(std::move(st), &s.body, k_next, k_ret);
        return;
      case StmtKind::Decl: {
        const std::string& name = s.name;
        if (s.expr) {
          eval_value(std::move(st), *s.expr, [name, k_next](SymState st2, TermRef v) {
            st2.frames.back().scopes.back()[name] = std::move(v);
            k_next(std::move(st2));
          });
        } else {
          st.frames.back().scopes.back()[name] = make_const(0);
          k_next(std::move(st));
        }
        return;
      }
      case StmtKind::Assign: {
        const std::string& name = s.name;
        eval_value(std::move(st), *s.expr, [this, name, k_next](SymState st2, TermRef v) {
          assign(st2, name, std::move(v));
          k_next(std::move(st2));
        });
        return;
      }
      case StmtKind::CallStmt:
        eval_value(std::move(st), *s.expr,
                   [k_next](SymState st2, TermRef) { k_next(std::move(st2)); });
        return;
      case StmtKind::Return:
        if (s.expr) {
          eval_value(std::move(st), *s.expr,
                     [k_ret](SymState st2, TermRef v) { k_ret(std::move(st2), std::move(v)); });
        } else {
          k_ret(std::move(st), make_const(0));
        }
        return;
      case StmtKind::AssertFail: {
        // The error location terminates the path; a defined reach_error body
        // still runs so its labels (the canonical error goal) are visited.
        if (const FunctionDecl* re = prog_.find(minic::kReachErrorName)) {
          call_function(std::move(st), *re, {}, [](SymState, TermRef) {});
        }
        return;
      }
      case StmtKind::If: {
        const Stmt* stmt = &s;
        eval_cond(std::move(st), *s.expr,
                  [this, stmt, k_next, k_ret](SymState st2, bool cond) {
                    exec_scoped(std::move(st2), cond ? &stmt->body : &stmt->else_body, k_next,
                                k_ret);
                  });
        return;
      }
      case StmtKind::While:
        exec_loop(std::move(st), s, 0, k_next, k_ret);
        return;
    }
  }

  void exec_loop(SymState st, const Stmt& s, int iter, const NormalCont& k_next,
                 const ReturnCont& k_ret) {
    if (done_) return;
    tick();
    const Stmt* stmt = &s;
    eval_cond(std::move(st), *s.expr,
              [this, stmt, iter, k_next, k_ret](SymState st2, bool cond) {
                if (!cond) {
                  k_next(std::move(st2));
                  return;
                }
                if (iter >= cfg_.unwind_k) return;  // beyond the bound, path dropped
                NormalCont again = [this, stmt, iter, k_next, k_ret](SymState st3) {
                  exec_loop(std::move(st3), *stmt, iter + 1, k_next, k_ret);
                };
                exec_scoped(std::move(st2), &stmt->body, again, k_ret);
              });
  }

  void call_function(SymState st, const FunctionDecl& fn, std::vector<TermRef> args,
                     const IntCont& k) {
    if (static_cast<int>(st.frames.size()) >= cfg_.max_call_depth) {
      incomplete_ = true;
      return;
    }
    SymFrame frame;
    frame.fn = &fn;
    frame.scopes.emplace_back();
    for (std::size_t i = 0; i < fn.params.size(); ++i)
      frame.scopes.back()[fn.params[i].name] = args[i];
    st.frames.push_back(std::move(frame));
    NormalCont fell_off = [k](SymState st2) {
      st2.frames.pop_back();
      k(std::move(st2), make_const(0));
    };
    ReturnCont returned = [k](SymState st2, TermRef v) {
      st2.frames.pop_back();
      k(std::move(st2), std::move(v));
    };
    exec_list(std::move(st), &fn.body, 0, fell_off, returned);
  }

  // Integer-valued evaluation; boolean subexpressions collapse to constants
  // through case splitting, so the resulting term is over int inputs only.
  void eval_value(SymState st, const Expr& e, const IntCont& k) {
    if (done_) return;
    tick();
    switch (e.kind) {
      case ExprKind::IntLit:
        k(std::move(st), make_const(cfg_.width.wrap(e.int_value)));
        return;
      case ExprKind::BoolLit:
        k(std::move(st), make_const(e.int_value));
        return;
      case ExprKind::Var:
        k(std::move(st), lookup(st, e.name));
        return;
      case ExprKind::NondetInt: {
        int ordinal = st.reads++;
        st.box.push_back(Interval::full(cfg_.width));
        k(std::move(st), make_input(ordinal));
        return;
      }
      case ExprKind::NondetBool: {
        int ordinal = st.reads++;
        st.box.push_back({0, 1});
        TermRef sym = make_input(ordinal);
        fork_literal(std::move(st), Literal{sym, CmpOp::Eq, make_const(1)},
                     [k](SymState st2, bool b) { k(std::move(st2), make_const(b ? 1 : 0)); });
        return;
      }
      case ExprKind::Unary:
        if (e.un == minic::UnOp::Neg) {
          eval_value(std::move(st), *e.lhs, [this, k](SymState st2, TermRef v) {
            k(std::move(st2), make_neg(std::move(v), cfg_.width));
          });
        } else {
          eval_bool(std::move(st), e,
                    [k](SymState st2, bool b) { k(std::move(st2), make_const(b ? 1 : 0)); });
        }
        return;
      case ExprKind::Binary: {
        using minic::BinOp;
        if (minic::is_arithmetic(e.bin)) {
          TermKind kind;
          switch (e.bin) {
            case BinOp::Add: kind = TermKind::Add; break;
            case BinOp::Sub: kind = TermKind::Sub; break;
            case BinOp::Mul: kind = TermKind::Mul; break;
            case BinOp::Div: kind = TermKind::Div; break;
            default: kind = TermKind::Mod; break;
          }
          const Expr* rhs = e.rhs.get();
          eval_value(std::move(st), *e.lhs, [this, kind, rhs, k](SymState st2, TermRef a) {
            eval_value(std::move(st2), *rhs, [this, kind, a, k](SymState st3, TermRef b) {
              if (kind == TermKind::Div || kind == TermKind::Mod) {
                if (b->kind == TermKind::Const) {
                  if (b->value == 0) return;  // guaranteed fault, path ends
                } else {
                  // Witness replays must not fault before the target.
                  if (!add_literal(st3, Literal{b, CmpOp::Ne, make_const(0)})) return;
                }
              }
              k(std::move(st3), make_binary(kind, a, std::move(b), cfg_.width));
            });
          });
          return;
        }
        eval_bool(std::move(st), e,
                  [k](SymState st2, bool b) { k(std::move(st2), make_const(b ? 1 : 0)); });
        return;
      }
      case ExprKind::Call: {
        const FunctionDecl* fn = prog_.find(e.name);
        if (!fn) return;  // checker guarantees this; dead path otherwise
        eval_args(std::move(st), e.args, 0, {},
                  [this, fn, k](SymState st2, std::vector<TermRef> args) {
                    call_function(std::move(st2), *fn, std::move(args), k);
                  });
        return;
      }
    }
  }

  void eval_args(SymState st, const std::vector<minic::ExprPtr>& args, std::size_t idx,
                 std::vector<TermRef> acc,
                 const std::function<void(SymState, std::vector<TermRef>)>& k) {
    if (idx == args.size()) {
      k(std::move(st), std::move(acc));
      return;
    }
    const auto* rest = &args;
    eval_value(std::move(st), *args[idx],
               [this, rest, idx, acc = std::move(acc), k](SymState st2, TermRef v) mutable {
                 acc.push_back(std::move(v));
                 eval_args(std::move(st2), *rest, idx + 1, std::move(acc), k);
               });
  }

  // Boolean evaluation with case splitting: the continuation receives a
  // concrete truth value, constants short-circuit without forking.
  void eval_bool(SymState st, const Expr& e, const BoolCont& k) {
    if (done_) return;
    tick();
    using minic::BinOp;
    if (e.kind == ExprKind::BoolLit) {
      k(std::move(st), e.int_value != 0);
      return;
    }
    if (e.kind == ExprKind::IntLit) {
      k(std::move(st), e.int_value != 0);
      return;
    }
    if (e.kind == ExprKind::Unary && e.un == minic::UnOp::Not) {
      eval_bool(std::move(st), *e.lhs, [k](SymState st2, bool b) { k(std::move(st2), !b); });
      return;
    }
    if (e.kind == ExprKind::Binary && e.bin == BinOp::And) {
      const Expr* rhs = e.rhs.get();
      eval_bool(std::move(st), *e.lhs, [this, rhs, k](SymState st2, bool a) {
        if (!a) {
          k(std::move(st2), false);
          return;
        }
        eval_bool(std::move(st2), *rhs, k);
      });
      return;
    }
    if (e.kind == ExprKind::Binary && e.bin == BinOp::Or) {
      const Expr* rhs = e.rhs.get();
      eval_bool(std::move(st), *e.lhs, [this, rhs, k](SymState st2, bool a) {
        if (a) {
          k(std::move(st2), true);
          return;
        }
        eval_bool(std::move(st2), *rhs, k);
      });
      return;
    }
    if (e.kind == ExprKind::Binary && minic::is_comparison(e.bin)) {
      CmpOp op;
      switch (e.bin) {
        case BinOp::Eq: op = CmpOp::Eq; break;
        case BinOp::Ne: op = CmpOp::Ne; break;
        case BinOp::Lt: op = CmpOp::Lt; break;
        case BinOp::Le: op = CmpOp::Le; break;
        case BinOp::Gt: op = CmpOp::Gt; break;
        default: op = CmpOp::Ge; break;
      }
      const Expr* rhs = e.rhs.get();
      eval_value(std::move(st), *e.lhs, [this, op, rhs, k](SymState st2, TermRef a) {
        eval_value(std::move(st2), *rhs, [this, op, a, k](SymState st3, TermRef b) {
          decide(std::move(st3), Literal{a, op, std::move(b)}, k);
        });
      });
      return;
    }
    // Remaining shapes (variables, calls, nondet bools) evaluate to a term;
    // branch on term != 0.
    eval_value(std::move(st), e, [this, k](SymState st2, TermRef v) {
      decide(std::move(st2), Literal{std::move(v), CmpOp::Ne, make_const(0)}, k);
    });
  }

  void decide(SymState st, Literal lit, const BoolCont& k) {
    if (lit.lhs->kind == TermKind::Const && lit.rhs->kind == TermKind::Const) {
      std::vector<std::int64_t> none;
      bool value = eval_literal(lit, none, cfg_.width);
      k(std::move(st), value);
      return;
    }
    fork_literal(std::move(st), std::move(lit), k);
  }

  TermRef lookup(const SymState& st, const std::string& name) {
    const auto& scopes = st.frames.back().scopes;
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    throw std::logic_error("symexec: unbound variable " + name);
  }

  void assign(SymState& st, const std::string& name, TermRef v) {
    auto& scopes = st.frames.back().scopes;
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) {
        found->second = std::move(v);
        return;
      }
    }
    throw std::logic_error("symexec: unbound variable " + name);
  }

  const Program& prog_;
  int target_;
  BmcConfig cfg_;
  std::uint64_t used_ = 0;
  bool done_ = false;
  bool incomplete_ = false;
  bool solver_gave_up_ = false;
  std::optional<Witness> partial_;
  BmcResult result_;
};

}  // namespace

BmcResult run_bmc(const Program& instrumented, int target_goal, const BmcConfig& cfg) {
  return Engine(instrumented, target_goal, cfg).run();
}

}  // namespace htg::bmc
