#include "instrument/instrument.hpp"

#include <stdexcept>

#include "instrument/goal_graph.hpp"

namespace htg {

using minic::FunctionDecl;
using minic::Program;
using minic::SourceLoc;
using minic::Stmt;
using minic::StmtKind;
using minic::StmtPtr;

const char* goal_kind_name(GoalKind k) {
  switch (k) {
    case GoalKind::IfThen: return "if_then";
    case GoalKind::Else: return "else";
    case GoalKind::EmptyElse: return "empty_else";
    case GoalKind::LoopBody: return "loop_body";
    case GoalKind::AfterLoop: return "after_loop";
    case GoalKind::FunctionStart: return "function_start";
    case GoalKind::FunctionEnd: return "function_end";
    case GoalKind::MainStart: return "main_start";
    case GoalKind::EndOfMain: return "end_of_main";
  }
  return "?";
}

GoalKind goal_kind_from_name(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(GoalKind::EndOfMain); ++k) {
    auto kind = static_cast<GoalKind>(k);
    if (name == goal_kind_name(kind)) return kind;
  }
  throw std::invalid_argument("unknown goal kind: " + name);
}

int goal_power(GoalKind k) {
  switch (k) {
    case GoalKind::IfThen: return 5;
    case GoalKind::FunctionStart:
    case GoalKind::FunctionEnd: return 4;
    case GoalKind::LoopBody: return 3;
    case GoalKind::Else: return 2;
    case GoalKind::EmptyElse:
    case GoalKind::AfterLoop:
    case GoalKind::MainStart:
    case GoalKind::EndOfMain: return 1;
  }
  return 1;
}

namespace {

class Instrumenter {
 public:
  explicit Instrumenter(Program p) : prog_(std::move(p)) {}

  InstrumentResult run() {
    FunctionDecl* main_fn = nullptr;
    for (auto& f : prog_.functions)
      if (f.name == "main") main_fn = &f;
    if (!main_fn) throw std::logic_error("inject_goals: program has no main");

    // GOAL_0 first: the entry point of the program.
    insert_label(main_fn->body, 0, new_goal(GoalKind::MainStart, "main", main_fn->loc));

    for (auto& f : prog_.functions) {
      if (f.name == "main") continue;
      instrument_function(f);
    }

    // End-of-main before a trailing return, then main's branch goals.
    place_end_label(*main_fn, GoalKind::EndOfMain);
    instrument_stmts(main_fn->body, "main");

    mark_error_goals();

    InstrumentResult out;
    out.instrumented = std::move(prog_);
    out.tree.goals = std::move(goals_);
    build_goal_graph(out.instrumented, out.tree);
    return out;
  }

 private:
  int new_goal(GoalKind kind, const std::string& fn, SourceLoc loc, int loop_id = -1) {
    Goal g;
    g.id = next_id_++;
    g.kind = kind;
    g.power = goal_power(kind);
    g.function = fn;
    g.loc = loc;
    g.loop_id = loop_id;
    goals_.push_back(g);
    return g.id;
  }

  static StmtPtr label_stmt(int goal_id, SourceLoc loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = StmtKind::Label;
    s->loc = loc;
    s->name = "GOAL_" + std::to_string(goal_id);
    s->goal_id = goal_id;
    return s;
  }

  static void insert_label(std::vector<StmtPtr>& list, std::size_t pos, int goal_id) {
    SourceLoc loc = pos < list.size() ? list[pos]->loc : SourceLoc{};
    list.insert(list.begin() + static_cast<std::ptrdiff_t>(pos), label_stmt(goal_id, loc));
  }

  void instrument_function(FunctionDecl& f) {
    insert_label(f.body, 0, new_goal(GoalKind::FunctionStart, f.name, f.loc));
    place_end_label(f, GoalKind::FunctionEnd);
    instrument_stmts(f.body, f.name);
  }

  // The end label marks the body's fall-through point. A body whose last
  // statement is a return has none (the label would be dead code, and
  // Fig-2b-style output omits it); the label goes in front of a trailing
  // return in main instead, keeping it reachable there.
  void place_end_label(FunctionDecl& f, GoalKind kind) {
    bool trailing_return = !f.body.empty() && f.body.back()->kind == StmtKind::Return;
    if (kind == GoalKind::EndOfMain) {
      std::size_t pos = trailing_return ? f.body.size() - 1 : f.body.size();
      insert_label(f.body, pos, new_goal(kind, f.name, f.loc));
      return;
    }
    if (trailing_return) return;
    // Start label is always present, so a formerly-empty body has size 1.
    if (f.body.size() == 1 && f.body.front()->kind == StmtKind::Label) return;
    insert_label(f.body, f.body.size(), new_goal(kind, f.name, f.loc));
  }

  // Pre-order: an if allocates then+else goals, a loop allocates body+after
  // goals, then we descend. index-based loop because after-loop labels are
  // spliced into the list being walked.
  void instrument_stmts(std::vector<StmtPtr>& list, const std::string& fn) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      Stmt& s = *list[i];
      switch (s.kind) {
        case StmtKind::If: {
          insert_label(s.body, 0, new_goal(GoalKind::IfThen, fn, s.loc));
          GoalKind else_kind = s.else_body.empty() ? GoalKind::EmptyElse : GoalKind::Else;
          insert_label(s.else_body, 0, new_goal(else_kind, fn, s.loc));
          instrument_stmts(s.body, fn);
          instrument_stmts(s.else_body, fn);
          break;
        }
        case StmtKind::While: {
          insert_label(s.body, 0, new_goal(GoalKind::LoopBody, fn, s.loc, s.loop_id));
          int after = new_goal(GoalKind::AfterLoop, fn, s.loc, s.loop_id);
          insert_label(list, i + 1, after);
          instrument_stmts(s.body, fn);
          ++i;  // skip the just-inserted after-loop label
          break;
        }
        case StmtKind::Block:
          instrument_stmts(s.body, fn);
          break;
        default:
          break;
      }
    }
  }

  // A goal is an error goal when executing its label immediately leads into
  // reach_error: the start goal of reach_error itself, or a label whose
  // following statement is the error call.
  void mark_error_goals() {
    for (auto& f : prog_.functions) {
      if (f.name == minic::kReachErrorName && !f.body.empty() &&
          f.body.front()->kind == StmtKind::Label)
        goals_[static_cast<std::size_t>(f.body.front()->goal_id)].error_goal = true;
      mark_error_goals_in(f.body);
    }
  }

  void mark_error_goals_in(const std::vector<StmtPtr>& list) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Stmt& s = *list[i];
      if (s.kind == StmtKind::Label && s.goal_id >= 0 && i + 1 < list.size() &&
          list[i + 1]->kind == StmtKind::AssertFail)
        goals_[static_cast<std::size_t>(s.goal_id)].error_goal = true;
      if (s.kind == StmtKind::If || s.kind == StmtKind::While || s.kind == StmtKind::Block) {
        mark_error_goals_in(s.body);
        mark_error_goals_in(s.else_body);
      }
    }
  }

  Program prog_;
  std::vector<Goal> goals_;
  int next_id_ = 0;
};

}  // namespace

InstrumentResult inject_goals(const minic::Program& p) {
  return Instrumenter(minic::clone(p)).run();
}

}  // namespace htg
