#include "analysis/ranges.hpp"

#include <algorithm>

namespace htg {

using minic::BinOp;
using minic::Expr;
using minic::ExprKind;
using minic::Program;
using minic::Stmt;
using minic::StmtKind;
using minic::StmtPtr;

InputRange InputRange::full(Width w, int site, bool is_bool) {
  InputRange r;
  r.site = site;
  r.is_bool = is_bool;
  r.lo = is_bool ? 0 : w.min_value();
  r.hi = is_bool ? 1 : w.max_value();
  return r;
}

bool InputRange::is_full(Width w) const {
  if (is_bool) return lo == 0 && hi == 1 && excluded.empty();
  return lo == w.min_value() && hi == w.max_value() && excluded.empty();
}

std::int64_t InputRange::clamp(std::int64_t v) const {
  if (lo > hi) return lo;
  std::int64_t c = std::min(std::max(v, lo), hi);
  if (!excluded.count(c)) return c;
  for (std::int64_t delta = 1;; ++delta) {
    if (c + delta <= hi && !excluded.count(c + delta)) return c + delta;
    if (c - delta >= lo && !excluded.count(c - delta)) return c - delta;
    if (c + delta > hi && c - delta < lo) return lo;  // fully excluded, give up
  }
}

const InputRange* RangeMap::for_site(int site) const {
  auto it = by_site.find(site);
  return it == by_site.end() ? nullptr : &it->second;
}

InputRange RangeMap::resolve(std::size_t ordinal, const std::vector<int>* sites) const {
  int site = -1;
  if (sites && ordinal < sites->size()) {
    site = (*sites)[ordinal];
  } else if (!canonical_sites.empty()) {
    site = canonical_sites[std::min(ordinal, canonical_sites.size() - 1)];
  }
  if (const InputRange* r = for_site(site)) return *r;
  return InputRange::full(width, site);
}

namespace {

int number_sites(Expr& e, int next) {
  if (e.kind == ExprKind::NondetInt || e.kind == ExprKind::NondetBool) {
    e.nondet_site = next++;
    return next;
  }
  if (e.lhs) next = number_sites(*e.lhs, next);
  if (e.rhs) next = number_sites(*e.rhs, next);
  for (auto& a : e.args) next = number_sites(*a, next);
  return next;
}

int number_sites(std::vector<StmtPtr>& list, int next) {
  for (auto& s : list) {
    if (s->expr) next = number_sites(*s->expr, next);
    next = number_sites(s->body, next);
    next = number_sites(s->else_body, next);
  }
  return next;
}

struct VarKey {
  std::string fn;
  std::string var;
  bool operator<(const VarKey& o) const { return std::tie(fn, var) < std::tie(o.fn, o.var); }
};

class Extractor {
 public:
  Extractor(const Program& p, Width w) : prog_(p), width_(w) { map_.width = w; }

  RangeMap run() {
    for (const auto& f : prog_.functions) collect_vars(f.name, f.body);
    for (const auto& f : prog_.functions) scan_stmts(f.name, f.body);
    return std::move(map_);
  }

 private:
  // Variables fed directly by a single nondet read site and never assigned
  // anything else.
  void collect_vars(const std::string& fn, const std::vector<StmtPtr>& list) {
    for (const auto& s : list) {
      if ((s->kind == StmtKind::Decl || s->kind == StmtKind::Assign) && s->expr) {
        VarKey key{fn, s->name};
        if (s->expr->kind == ExprKind::NondetInt || s->expr->kind == ExprKind::NondetBool) {
          auto it = var_site_.find(key);
          if (it == var_site_.end())
            var_site_[key] = s->expr->nondet_site;
          else if (it->second != s->expr->nondet_site)
            tainted_.insert(key);  // two distinct read sites
          bool_var_[key] = s->expr->kind == ExprKind::NondetBool;
        } else {
          tainted_.insert(key);
        }
      }
      collect_vars(fn, s->body);
      collect_vars(fn, s->else_body);
    }
  }

  int site_of(const std::string& fn, const std::string& var) const {
    VarKey key{fn, var};
    if (tainted_.count(key)) return -1;
    auto it = var_site_.find(key);
    return it == var_site_.end() ? -1 : it->second;
  }

  InputRange& range_for(int site, const std::string& fn, const std::string& var) {
    auto it = map_.by_site.find(site);
    if (it == map_.by_site.end()) {
      bool is_bool = bool_var_.count(VarKey{fn, var}) && bool_var_.at(VarKey{fn, var});
      it = map_.by_site.emplace(site, InputRange::full(width_, site, is_bool)).first;
    }
    return it->second;
  }

  void scan_stmts(const std::string& fn, const std::vector<StmtPtr>& list) {
    for (const auto& s : list) {
      if (s->kind == StmtKind::If) {
        bool then_err = arm_is_error(s->body);
        bool else_err = arm_is_error(s->else_body);
        if (then_err != else_err) {
          // Polarity that avoids the error arm holds on every non-error run.
          apply_must(fn, *s->expr, /*polarity=*/then_err ? false : true);
        } else {
          add_candidates(fn, *s->expr);
        }
      } else if (s->kind == StmtKind::While) {
        add_candidates(fn, *s->expr);
      }
      scan_stmts(fn, s->body);
      scan_stmts(fn, s->else_body);
    }
  }

  static bool arm_is_error(const std::vector<StmtPtr>& arm) {
    for (const auto& s : arm) {
      if (s->kind == StmtKind::Label) continue;
      return s->kind == StmtKind::AssertFail;
    }
    return false;
  }

  // Decompose `cond == polarity` into constraints every satisfying input
  // obeys. Disjunctive shapes cannot be intersected soundly and fall back to
  // candidates.
  void apply_must(const std::string& fn, const Expr& cond, bool polarity) {
    if (cond.kind == ExprKind::Unary && cond.un == minic::UnOp::Not) {
      apply_must(fn, *cond.lhs, !polarity);
      return;
    }
    if (cond.kind == ExprKind::Binary && cond.bin == BinOp::And) {
      if (polarity) {
        apply_must(fn, *cond.lhs, true);
        apply_must(fn, *cond.rhs, true);
      } else {
        add_candidates(fn, cond);
      }
      return;
    }
    if (cond.kind == ExprKind::Binary && cond.bin == BinOp::Or) {
      if (!polarity) {
        apply_must(fn, *cond.lhs, false);
        apply_must(fn, *cond.rhs, false);
      } else {
        add_candidates(fn, cond);
      }
      return;
    }
    std::string var;
    BinOp op;
    std::int64_t lit;
    if (!match_atom(cond, &var, &op, &lit)) {
      add_candidates(fn, cond);
      return;
    }
    int site = site_of(fn, var);
    if (site < 0) return;
    if (!polarity) op = negate_op(op);
    constrain(range_for(site, fn, var), op, lit);
  }

  static BinOp negate_op(BinOp op) {
    switch (op) {
      case BinOp::Lt: return BinOp::Ge;
      case BinOp::Le: return BinOp::Gt;
      case BinOp::Gt: return BinOp::Le;
      case BinOp::Ge: return BinOp::Lt;
      case BinOp::Eq: return BinOp::Ne;
      case BinOp::Ne: return BinOp::Eq;
      default: return op;
    }
  }

  void constrain(InputRange& r, BinOp op, std::int64_t lit) {
    lit = width_.wrap(lit);
    std::int64_t lo = r.lo, hi = r.hi;
    switch (op) {
      case BinOp::Lt: hi = std::min(hi, lit - 1); break;
      case BinOp::Le: hi = std::min(hi, lit); break;
      case BinOp::Gt: lo = std::max(lo, lit + 1); break;
      case BinOp::Ge: lo = std::max(lo, lit); break;
      case BinOp::Eq: lo = std::max(lo, lit); hi = std::min(hi, lit); break;
      case BinOp::Ne:
        if (lit >= r.lo && lit <= r.hi) r.excluded.insert(lit);
        push_candidates(r, lit);
        return;
      default: return;
    }
    if (lo > hi) {
      // Conflicting guards; restricting to nothing would starve the fuzzer.
      push_candidates(r, lit);
      return;
    }
    r.lo = lo;
    r.hi = hi;
    r.excluded.erase(r.excluded.begin(), r.excluded.lower_bound(lo));
    while (!r.excluded.empty() && *r.excluded.rbegin() > hi)
      r.excluded.erase(std::prev(r.excluded.end()));
    push_candidates(r, lit);
  }

  void push_candidates(InputRange& r, std::int64_t lit) {
    for (std::int64_t v : {lit - 1, lit, lit + 1}) {
      v = width_.wrap(v);
      std::pair<std::int64_t, std::int64_t> c{v, v};
      if (std::find(r.candidates.begin(), r.candidates.end(), c) == r.candidates.end())
        r.candidates.push_back(c);
    }
  }

  // Every atom in a non-discriminating condition contributes its literal
  // neighborhood as must-try points.
  void add_candidates(const std::string& fn, const Expr& e) {
    if (e.kind == ExprKind::Binary &&
        (e.bin == BinOp::And || e.bin == BinOp::Or)) {
      add_candidates(fn, *e.lhs);
      add_candidates(fn, *e.rhs);
      return;
    }
    if (e.kind == ExprKind::Unary && e.un == minic::UnOp::Not) {
      add_candidates(fn, *e.lhs);
      return;
    }
    std::string var;
    BinOp op;
    std::int64_t lit;
    if (!match_atom(e, &var, &op, &lit)) return;
    int site = site_of(fn, var);
    if (site < 0) return;
    InputRange& r = range_for(site, fn, var);
    push_candidates(r, lit);
    if (op == BinOp::Eq) {
      std::pair<std::int64_t, std::int64_t> c{width_.wrap(lit), width_.wrap(lit)};
      if (std::find(r.candidates.begin(), r.candidates.end(), c) == r.candidates.end())
        r.candidates.push_back(c);
    }
  }

  static bool literal_value(const Expr& e, std::int64_t* out) {
    if (e.kind == ExprKind::IntLit || e.kind == ExprKind::BoolLit) {
      *out = e.int_value;
      return true;
    }
    if (e.kind == ExprKind::Unary && e.un == minic::UnOp::Neg &&
        e.lhs->kind == ExprKind::IntLit) {
      *out = -e.lhs->int_value;
      return true;
    }
    return false;
  }

  static BinOp flip_op(BinOp op) {
    switch (op) {
      case BinOp::Lt: return BinOp::Gt;
      case BinOp::Le: return BinOp::Ge;
      case BinOp::Gt: return BinOp::Lt;
      case BinOp::Ge: return BinOp::Le;
      default: return op;
    }
  }

  static bool match_atom(const Expr& e, std::string* var, BinOp* op, std::int64_t* lit) {
    if (e.kind != ExprKind::Binary || !minic::is_comparison(e.bin)) return false;
    if (e.lhs->kind == ExprKind::Var && literal_value(*e.rhs, lit)) {
      *var = e.lhs->name;
      *op = e.bin;
      return true;
    }
    if (e.rhs->kind == ExprKind::Var && literal_value(*e.lhs, lit)) {
      *var = e.rhs->name;
      *op = flip_op(e.bin);
      return true;
    }
    return false;
  }

  const Program& prog_;
  Width width_;
  RangeMap map_;
  std::map<VarKey, int> var_site_;
  std::map<VarKey, bool> bool_var_;
  std::set<VarKey> tainted_;
};

}  // namespace

int assign_nondet_sites(Program& p) {
  int next = 0;
  for (auto& f : p.functions) next = number_sites(f.body, next);
  return next;
}

RangeMap extract_ranges(const Program& p, Width w) { return Extractor(p, w).run(); }

}  // namespace htg
