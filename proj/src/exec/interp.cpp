#include "exec/interp.hpp"

#include <stdexcept>
#include <vector>

namespace htg {

using minic::Expr;
using minic::ExprKind;
using minic::FunctionDecl;
using minic::Program;
using minic::Stmt;
using minic::StmtKind;
using minic::StmtPtr;

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Primary: return "primary";
    case Provenance::Fuzzer: return "fuzzer";
    case Provenance::Bmc: return "bmc";
    case Provenance::TracerCompleted: return "tracer_completed";
    case Provenance::Selective: return "selective";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Returned: return "returned";
    case Outcome::ReachedError: return "reached_error";
    case Outcome::RuntimeFault: return "runtime_fault";
    case Outcome::InputExhausted: return "input_exhausted";
    case Outcome::StepLimit: return "step_limit";
  }
  return "?";
}

int consumed_bytes(const ExecutionTrace& t, int int_bytes) {
  return t.int_reads * int_bytes + t.bool_reads;
}

namespace {

struct Abort {
  Outcome outcome;
  std::string fault;
  bool loop_capped = false;
};

class Interp {
 public:
  Interp(const Program& p, const TestCase& t, const ExecOptions& opts)
      : prog_(p), tc_(t), opts_(opts) {}

  ExecutionTrace run() {
    try {
      std::int64_t code = call_function(prog_.main_function(), {});
      trace_.outcome = Outcome::Returned;
      trace_.return_code = code;
    } catch (const Abort& a) {
      trace_.outcome = a.outcome;
      trace_.fault_kind = a.fault;
      trace_.loop_capped = a.loop_capped;
    }
    return trace_;
  }

 private:
  using Scope = std::map<std::string, std::int64_t>;

  struct Frame {
    const FunctionDecl* fn = nullptr;
    std::vector<Scope> scopes;
    std::int64_t return_value = 0;
  };

  void step() {
    if (++trace_.steps > opts_.step_limit) throw Abort{Outcome::StepLimit, "", false};
  }

  void visit_goal(int goal) {
    if (!seen_.count(goal)) {
      seen_.insert(goal);
      trace_.goals_hit.push_back(goal);
    }
    if (last_goal_ >= 0) trace_.goal_edges.emplace(last_goal_, goal);
    last_goal_ = goal;
  }

  std::int64_t read_input(bool is_bool, int site) {
    std::int64_t raw = 0;
    if (static_cast<std::size_t>(trace_.nondet_reads) < tc_.values.size()) {
      raw = tc_.values[static_cast<std::size_t>(trace_.nondet_reads)];
    } else {
      if (opts_.strict_input) throw Abort{Outcome::InputExhausted, "", false};
      trace_.input_exhausted = true;
    }
    ++trace_.nondet_reads;
    trace_.read_sites.push_back(site);
    if (is_bool) {
      ++trace_.bool_reads;
      return raw != 0 ? 1 : 0;
    }
    ++trace_.int_reads;
    return opts_.width.wrap(raw);
  }

  std::int64_t call_function(const FunctionDecl& fn, std::vector<std::int64_t> args) {
    if (frames_.size() >= kMaxCallDepth) throw Abort{Outcome::RuntimeFault, "call_depth", false};
    Frame frame;
    frame.fn = &fn;
    frame.scopes.emplace_back();
    for (std::size_t i = 0; i < fn.params.size(); ++i)
      frame.scopes.back()[fn.params[i].name] = args[i];
    frames_.push_back(std::move(frame));
    Flow flow = exec_stmts(fn.body);
    std::int64_t result = flow == Flow::Return ? frames_.back().return_value : 0;
    frames_.pop_back();
    return result;
  }

  enum class Flow { Normal, Return };

  Flow exec_stmts(const std::vector<StmtPtr>& list) {
    frames_.back().scopes.emplace_back();
    Flow flow = Flow::Normal;
    for (const auto& s : list) {
      flow = exec_stmt(*s);
      if (flow == Flow::Return) break;
    }
    frames_.back().scopes.pop_back();
    return flow;
  }

  Flow exec_stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Label:
        // Labels are free: instrumented and original programs consume the
        // step budget identically.
        if (s.goal_id >= 0) visit_goal(s.goal_id);
        return Flow::Normal;
      case StmtKind::Block:
        step();
        return exec_stmts(s.body);
      case StmtKind::Decl:
        step();
        frames_.back().scopes.back()[s.name] = s.expr ? eval(*s.expr) : 0;
        return Flow::Normal;
      case StmtKind::Assign: {
        step();
        std::int64_t v = eval(*s.expr);
        assign(s.name, v);
        return Flow::Normal;
      }
      case StmtKind::CallStmt:
        step();
        eval(*s.expr);
        return Flow::Normal;
      case StmtKind::Return:
        step();
        frames_.back().return_value = s.expr ? eval(*s.expr) : 0;
        return Flow::Return;
      case StmtKind::AssertFail:
        step();
        // Entering reach_error is the observable error event. A defined body
        // is executed first so its goal label registers (GOAL_1 in the
        // running example), then the run stops.
        if (const FunctionDecl* re = prog_.find(minic::kReachErrorName))
          call_function(*re, {});
        throw Abort{Outcome::ReachedError, "", false};
      case StmtKind::If: {
        step();
        bool cond = truthy(eval(*s.expr));
        return cond ? exec_stmts(s.body) : exec_stmts(s.else_body);
      }
      case StmtKind::While: {
        int iterations = 0;
        int cap = -1;
        if (opts_.loop_caps && s.loop_id >= 0) {
          auto it = opts_.loop_caps->find(s.loop_id);
          if (it != opts_.loop_caps->end()) cap = it->second;
        }
        for (;;) {
          step();
          if (!truthy(eval(*s.expr))) return Flow::Normal;
          if (cap >= 0 && iterations >= cap)
            throw Abort{Outcome::StepLimit, "", true};
          ++iterations;
          Flow flow = exec_stmts(s.body);
          if (flow == Flow::Return) return flow;
        }
      }
    }
    return Flow::Normal;
  }

  static bool truthy(std::int64_t v) { return v != 0; }

  std::int64_t eval(const Expr& e) {
    step();
    switch (e.kind) {
      case ExprKind::IntLit:
        return opts_.width.wrap(e.int_value);
      case ExprKind::BoolLit:
        return e.int_value;
      case ExprKind::Var:
        return lookup(e.name);
      case ExprKind::NondetInt:
        return read_input(false, e.nondet_site);
      case ExprKind::NondetBool:
        return read_input(true, e.nondet_site);
      case ExprKind::Unary: {
        std::int64_t v = eval(*e.lhs);
        return e.un == minic::UnOp::Not ? (truthy(v) ? 0 : 1) : opts_.width.neg(v);
      }
      case ExprKind::Binary:
        return eval_binary(e);
      case ExprKind::Call: {
        std::vector<std::int64_t> args;
        args.reserve(e.args.size());
        for (const auto& a : e.args) args.push_back(eval(*a));
        const FunctionDecl* fn = prog_.find(e.name);
        if (!fn) throw Abort{Outcome::RuntimeFault, "undefined_function", false};
        return call_function(*fn, std::move(args));
      }
    }
    return 0;
  }

  std::int64_t eval_binary(const Expr& e) {
    using minic::BinOp;
    // Short-circuit forms first.
    if (e.bin == BinOp::And) {
      if (!truthy(eval(*e.lhs))) return 0;
      return truthy(eval(*e.rhs)) ? 1 : 0;
    }
    if (e.bin == BinOp::Or) {
      if (truthy(eval(*e.lhs))) return 1;
      return truthy(eval(*e.rhs)) ? 1 : 0;
    }
    std::int64_t a = eval(*e.lhs);
    std::int64_t b = eval(*e.rhs);
    const Width& w = opts_.width;
    switch (e.bin) {
      case BinOp::Add: return w.add(a, b);
      case BinOp::Sub: return w.sub(a, b);
      case BinOp::Mul: return w.mul(a, b);
      case BinOp::Div:
        if (b == 0) throw Abort{Outcome::RuntimeFault, "division_by_zero", false};
        return w.div(a, b);
      case BinOp::Mod:
        if (b == 0) throw Abort{Outcome::RuntimeFault, "division_by_zero", false};
        return w.mod(a, b);
      case BinOp::Eq: return a == b ? 1 : 0;
      case BinOp::Ne: return a != b ? 1 : 0;
      case BinOp::Lt: return a < b ? 1 : 0;
      case BinOp::Le: return a <= b ? 1 : 0;
      case BinOp::Gt: return a > b ? 1 : 0;
      case BinOp::Ge: return a >= b ? 1 : 0;
      case BinOp::And:
      case BinOp::Or: break;
    }
    return 0;
  }

  std::int64_t lookup(const std::string& name) {
    auto& scopes = frames_.back().scopes;
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    throw std::logic_error("interp: unbound variable " + name);
  }

  void assign(const std::string& name, std::int64_t v) {
    auto& scopes = frames_.back().scopes;
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) {
        found->second = v;
        return;
      }
    }
    throw std::logic_error("interp: unbound variable " + name);
  }

  static constexpr std::size_t kMaxCallDepth = 256;

  const Program& prog_;
  const TestCase& tc_;
  const ExecOptions& opts_;
  ExecutionTrace trace_;
  std::vector<Frame> frames_;
  std::set<int> seen_;
  int last_goal_ = -1;
};

}  // namespace

ExecutionTrace execute(const Program& p, const TestCase& t, const ExecOptions& opts) {
  return Interp(p, t, opts).run();
}

}  // namespace htg
