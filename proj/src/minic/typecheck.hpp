#pragma once

#include "minic/ast.hpp"

namespace htg::minic {

// Semantic checks: exactly one `main` (int, no params), unique function and
// parameter names, all callees declared (reach_error may stay implicit), and
// expression typing over {int, bool}. Annotates Expr::type in place.
// Throws Diag on violation.
void type_check(Program& p);

}  // namespace htg::minic
