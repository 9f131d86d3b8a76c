#include "bmc/interval.hpp"

#include <algorithm>

namespace htg::bmc {

namespace {

Interval clamp_to(Interval iv, Width w) {
  return iv.intersect(Interval::full(w));
}

bool fits(std::int64_t lo, std::int64_t hi, Width w) {
  return lo >= w.min_value() && hi <= w.max_value();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Math (unwrapped) range of `a op b` over the operand enclosures, or the
// full W interval with exact=false when it cannot be bounded within W.
IntervalResult combine(TermKind k, Interval a, Interval b, Width w) {
  switch (k) {
    case TermKind::Add: {
      std::int64_t lo = a.lo + b.lo, hi = a.hi + b.hi;
      if (fits(lo, hi, w)) return {{lo, hi}, true};
      return {Interval::full(w), false};
    }
    case TermKind::Sub: {
      std::int64_t lo = a.lo - b.hi, hi = a.hi - b.lo;
      if (fits(lo, hi, w)) return {{lo, hi}, true};
      return {Interval::full(w), false};
    }
    case TermKind::Mul: {
      std::int64_t c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
      std::int64_t lo = std::min({c1, c2, c3, c4});
      std::int64_t hi = std::max({c1, c2, c3, c4});
      if (fits(lo, hi, w)) return {{lo, hi}, true};
      return {Interval::full(w), false};
    }
    case TermKind::Div: {
      if (b.contains(0)) return {Interval::full(w), false};
      std::int64_t c1 = a.lo / b.lo, c2 = a.lo / b.hi, c3 = a.hi / b.lo, c4 = a.hi / b.hi;
      std::int64_t lo = std::min({c1, c2, c3, c4});
      std::int64_t hi = std::max({c1, c2, c3, c4});
      if (fits(lo, hi, w)) return {{lo, hi}, true};
      return {Interval::full(w), false};
    }
    case TermKind::Mod: {
      if (b.contains(0)) return {Interval::full(w), false};
      if (a.singleton() && b.singleton())
        return {Interval::point(w.mod(a.lo, b.lo)), true};
      std::int64_t m = std::max(std::abs(b.lo), std::abs(b.hi)) - 1;
      std::int64_t lo = a.lo >= 0 ? 0 : -m;
      std::int64_t hi = a.hi <= 0 ? 0 : m;
      // |a % b| <= |a| as well
      std::int64_t mag = std::max(std::abs(a.lo), std::abs(a.hi));
      lo = std::max(lo, -mag);
      hi = std::min(hi, mag);
      return {clamp_to({lo, hi}, w), false};
    }
    default:
      return {Interval::full(w), false};
  }
}

}  // namespace

IntervalResult eval_interval(const Term& t, const Box& box, Width w) {
  switch (t.kind) {
    case TermKind::Const:
      return {Interval::point(t.value), true};
    case TermKind::Input:
      if (t.input >= 0 && static_cast<std::size_t>(t.input) < box.size())
        return {box[static_cast<std::size_t>(t.input)], true};
      return {Interval::full(w), true};
    case TermKind::Neg: {
      IntervalResult a = eval_interval(*t.a, box, w);
      std::int64_t lo = -a.iv.hi, hi = -a.iv.lo;
      if (fits(lo, hi, w)) return {{lo, hi}, a.exact};
      return {Interval::full(w), false};
    }
    default: {
      IntervalResult a = eval_interval(*t.a, box, w);
      IntervalResult b = eval_interval(*t.b, box, w);
      IntervalResult r = combine(t.kind, a.iv, b.iv, w);
      r.exact = r.exact && a.exact && b.exact;
      return r;
    }
  }
}

namespace {

// Narrow the term's inputs so its value can lie in `allowed`. Sound but
// incomplete; returns false when the box is provably emptied.
bool backward(const Term& t, Interval allowed, Box& box, Width w) {
  switch (t.kind) {
    case TermKind::Const:
      return allowed.contains(t.value);
    case TermKind::Input: {
      if (t.input < 0 || static_cast<std::size_t>(t.input) >= box.size()) return true;
      Interval& dim = box[static_cast<std::size_t>(t.input)];
      dim = dim.intersect(allowed);
      return !dim.empty();
    }
    case TermKind::Neg: {
      IntervalResult a = eval_interval(*t.a, box, w);
      std::int64_t lo = -a.iv.hi, hi = -a.iv.lo;
      if (!fits(lo, hi, w)) return true;  // may wrap, identities unusable
      return backward(*t.a, {-allowed.hi, -allowed.lo}, box, w);
    }
    case TermKind::Add:
    case TermKind::Sub: {
      IntervalResult a = eval_interval(*t.a, box, w);
      IntervalResult b = eval_interval(*t.b, box, w);
      // Only safe when this node cannot wrap over the current box.
      std::int64_t lo = t.kind == TermKind::Add ? a.iv.lo + b.iv.lo : a.iv.lo - b.iv.hi;
      std::int64_t hi = t.kind == TermKind::Add ? a.iv.hi + b.iv.hi : a.iv.hi - b.iv.lo;
      if (!fits(lo, hi, w)) return true;
      Interval a_allowed, b_allowed;
      if (t.kind == TermKind::Add) {
        a_allowed = {allowed.lo - b.iv.hi, allowed.hi - b.iv.lo};
        b_allowed = {allowed.lo - a.iv.hi, allowed.hi - a.iv.lo};
      } else {
        a_allowed = {allowed.lo + b.iv.lo, allowed.hi + b.iv.hi};
        b_allowed = {a.iv.lo - allowed.hi, a.iv.hi - allowed.lo};
      }
      if (!backward(*t.a, clamp_to(a_allowed, w), box, w)) return false;
      return backward(*t.b, clamp_to(b_allowed, w), box, w);
    }
    case TermKind::Mul: {
      IntervalResult a = eval_interval(*t.a, box, w);
      IntervalResult b = eval_interval(*t.b, box, w);
      std::int64_t c1 = a.iv.lo * b.iv.lo, c2 = a.iv.lo * b.iv.hi;
      std::int64_t c3 = a.iv.hi * b.iv.lo, c4 = a.iv.hi * b.iv.hi;
      if (!fits(std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4}), w)) return true;
      // x * c in [l, h] pins x when c is a known nonzero constant.
      auto narrow_factor = [&](const Term& x, Interval c) -> bool {
        if (!c.singleton() || c.lo == 0) return true;
        std::int64_t l = allowed.lo, h = allowed.hi;
        Interval x_allowed = c.lo > 0
                                 ? Interval{ceil_div(l, c.lo), floor_div(h, c.lo)}
                                 : Interval{ceil_div(h, c.lo), floor_div(l, c.lo)};
        return backward(x, clamp_to(x_allowed, w), box, w);
      };
      if (b.iv.singleton()) {
        if (b.iv.lo == 0) return allowed.contains(0);
        return narrow_factor(*t.a, b.iv);
      }
      if (a.iv.singleton()) {
        if (a.iv.lo == 0) return allowed.contains(0);
        return narrow_factor(*t.b, a.iv);
      }
      return true;
    }
    case TermKind::Div:
    case TermKind::Mod:
      return true;  // splitting handles these
  }
  return true;
}

}  // namespace

bool revise(const Literal& lit, Box& box, Width w) {
  IntervalResult a = eval_interval(*lit.lhs, box, w);
  IntervalResult b = eval_interval(*lit.rhs, box, w);
  if (a.iv.empty() || b.iv.empty()) return false;

  Interval full = Interval::full(w);
  Interval a_allowed = full, b_allowed = full;
  switch (lit.op) {
    case CmpOp::Le:
      a_allowed = {full.lo, b.iv.hi};
      b_allowed = {a.iv.lo, full.hi};
      break;
    case CmpOp::Lt:
      a_allowed = {full.lo, b.iv.hi - 1};
      b_allowed = {a.iv.lo + 1, full.hi};
      break;
    case CmpOp::Ge:
      a_allowed = {b.iv.lo, full.hi};
      b_allowed = {full.lo, a.iv.hi};
      break;
    case CmpOp::Gt:
      a_allowed = {b.iv.lo + 1, full.hi};
      b_allowed = {full.lo, a.iv.hi - 1};
      break;
    case CmpOp::Eq:
      a_allowed = b_allowed = a.iv.intersect(b.iv);
      break;
    case CmpOp::Ne:
      if (b.iv.singleton()) {
        a_allowed = a.iv;
        if (a_allowed.lo == b.iv.lo) ++a_allowed.lo;
        if (a_allowed.hi == b.iv.lo) --a_allowed.hi;
      }
      if (a.iv.singleton()) {
        b_allowed = b.iv;
        if (b_allowed.lo == a.iv.lo) ++b_allowed.lo;
        if (b_allowed.hi == a.iv.lo) --b_allowed.hi;
      }
      break;
  }
  if (a_allowed.empty() || b_allowed.empty()) return false;
  if (!backward(*lit.lhs, a_allowed, box, w)) return false;
  return backward(*lit.rhs, b_allowed, box, w);
}

int certainty(const Literal& lit, const Box& box, Width w) {
  Interval a = eval_interval(*lit.lhs, box, w).iv;
  Interval b = eval_interval(*lit.rhs, box, w).iv;
  switch (lit.op) {
    case CmpOp::Le:
      if (a.hi <= b.lo) return 1;
      if (a.lo > b.hi) return -1;
      return 0;
    case CmpOp::Lt:
      if (a.hi < b.lo) return 1;
      if (a.lo >= b.hi) return -1;
      return 0;
    case CmpOp::Ge:
      if (a.lo >= b.hi) return 1;
      if (a.hi < b.lo) return -1;
      return 0;
    case CmpOp::Gt:
      if (a.lo > b.hi) return 1;
      if (a.hi <= b.lo) return -1;
      return 0;
    case CmpOp::Eq:
      if (a.singleton() && b.singleton()) return a.lo == b.lo ? 1 : -1;
      if (a.intersect(b).empty()) return -1;
      return 0;
    case CmpOp::Ne:
      if (a.intersect(b).empty()) return 1;
      if (a.singleton() && b.singleton()) return a.lo != b.lo ? 1 : -1;
      return 0;
  }
  return 0;
}

}  // namespace htg::bmc
