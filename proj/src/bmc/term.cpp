#include "bmc/term.hpp"

#include <algorithm>

namespace htg::bmc {

TermRef make_const(std::int64_t v) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->value = v;
  return t;
}

TermRef make_input(int ordinal) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Input;
  t->input = ordinal;
  return t;
}

TermRef make_binary(TermKind k, TermRef a, TermRef b, Width w) {
  if (a->kind == TermKind::Const && b->kind == TermKind::Const) {
    switch (k) {
      case TermKind::Add: return make_const(w.add(a->value, b->value));
      case TermKind::Sub: return make_const(w.sub(a->value, b->value));
      case TermKind::Mul: return make_const(w.mul(a->value, b->value));
      case TermKind::Div:
        if (b->value != 0) return make_const(w.div(a->value, b->value));
        break;
      case TermKind::Mod:
        if (b->value != 0) return make_const(w.mod(a->value, b->value));
        break;
      default: break;
    }
  }
  // Cheap identities; they keep loop-accumulated terms small.
  if (k == TermKind::Add) {
    if (a->kind == TermKind::Const && a->value == 0) return b;
    if (b->kind == TermKind::Const && b->value == 0) return a;
  }
  if (k == TermKind::Sub && b->kind == TermKind::Const && b->value == 0) return a;
  if (k == TermKind::Mul) {
    if (a->kind == TermKind::Const && a->value == 1) return b;
    if (b->kind == TermKind::Const && b->value == 1) return a;
    if (a->kind == TermKind::Const && a->value == 0) return a;
    if (b->kind == TermKind::Const && b->value == 0) return b;
  }
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

TermRef make_neg(TermRef a, Width w) {
  if (a->kind == TermKind::Const) return make_const(w.neg(a->value));
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Neg;
  t->a = std::move(a);
  return t;
}

std::optional<std::int64_t> eval_term(const Term& t, const std::vector<std::int64_t>& inputs,
                                      Width w) {
  switch (t.kind) {
    case TermKind::Const:
      return t.value;
    case TermKind::Input:
      if (t.input < 0 || static_cast<std::size_t>(t.input) >= inputs.size()) return 0;
      return w.wrap(inputs[static_cast<std::size_t>(t.input)]);
    case TermKind::Neg: {
      auto a = eval_term(*t.a, inputs, w);
      if (!a) return std::nullopt;
      return w.neg(*a);
    }
    default: {
      auto a = eval_term(*t.a, inputs, w);
      auto b = eval_term(*t.b, inputs, w);
      if (!a || !b) return std::nullopt;
      switch (t.kind) {
        case TermKind::Add: return w.add(*a, *b);
        case TermKind::Sub: return w.sub(*a, *b);
        case TermKind::Mul: return w.mul(*a, *b);
        case TermKind::Div:
          if (*b == 0) return std::nullopt;
          return w.div(*a, *b);
        case TermKind::Mod:
          if (*b == 0) return std::nullopt;
          return w.mod(*a, *b);
        default: return std::nullopt;
      }
    }
  }
}

int max_input_ordinal(const Term& t) {
  int m = t.kind == TermKind::Input ? t.input : -1;
  if (t.a) m = std::max(m, max_input_ordinal(*t.a));
  if (t.b) m = std::max(m, max_input_ordinal(*t.b));
  return m;
}

CmpOp negate_cmp(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return CmpOp::Ne;
    case CmpOp::Ne: return CmpOp::Eq;
    case CmpOp::Lt: return CmpOp::Ge;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Gt: return CmpOp::Le;
    case CmpOp::Ge: return CmpOp::Lt;
  }
  return CmpOp::Eq;
}

const char* cmp_spelling(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

bool eval_literal(const Literal& lit, const std::vector<std::int64_t>& inputs, Width w) {
  auto a = eval_term(*lit.lhs, inputs, w);
  auto b = eval_term(*lit.rhs, inputs, w);
  if (!a || !b) return false;
  switch (lit.op) {
    case CmpOp::Eq: return *a == *b;
    case CmpOp::Ne: return *a != *b;
    case CmpOp::Lt: return *a < *b;
    case CmpOp::Le: return *a <= *b;
    case CmpOp::Gt: return *a > *b;
    case CmpOp::Ge: return *a >= *b;
  }
  return false;
}

}  // namespace htg::bmc
