#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "minic/value.hpp"

namespace htg::bmc {

enum class TermKind { Const, Input, Add, Sub, Mul, Div, Mod, Neg };

struct Term;
using TermRef = std::shared_ptr<const Term>;

// Immutable integer term over input symbols. Bool values never appear here:
// the symbolic executor case-splits every boolean expression, so path
// constraints are pure conjunctions of integer comparisons.
struct Term {
  TermKind kind = TermKind::Const;
  std::int64_t value = 0;  // Const
  int input = -1;          // Input: nondet read ordinal
  TermRef a, b;
};

TermRef make_const(std::int64_t v);
TermRef make_input(int ordinal);
// Folds constant operands (with wrapping W-bit semantics) and trivial
// identities. Division folding keeps a zero divisor unfolded.
TermRef make_binary(TermKind k, TermRef a, TermRef b, Width w);
TermRef make_neg(TermRef a, Width w);

// Exact W-bit evaluation; nullopt on division by zero anywhere inside.
std::optional<std::int64_t> eval_term(const Term& t, const std::vector<std::int64_t>& inputs,
                                      Width w);

int max_input_ordinal(const Term& t);  // -1 when none

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

CmpOp negate_cmp(CmpOp op);
const char* cmp_spelling(CmpOp op);

struct Literal {
  TermRef lhs;
  CmpOp op = CmpOp::Eq;
  TermRef rhs;
};

// False also when a division by zero makes the literal unevaluable: no
// feasible path reaches past an actual zero divisor.
bool eval_literal(const Literal& lit, const std::vector<std::int64_t>& inputs, Width w);

}  // namespace htg::bmc
