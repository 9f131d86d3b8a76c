#pragma once

#include <string>

#include "minic/ast.hpp"

namespace htg::minic {

// Canonical source form: two-space indent, always-braced bodies, labels on
// their own line. parse(pretty_print(p)) is structurally equal to p.
std::string pretty_print(const Program& p);
std::string pretty_print(const Expr& e);

// Structural equality, implemented over the canonical printed form (the
// printer is injective on the normalized AST).
bool structurally_equal(const Program& a, const Program& b);

}  // namespace htg::minic
