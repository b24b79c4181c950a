#pragma once

// Reference evaluator: substitutes bound values into the body instead of
// threading an environment, binds with the product-of-generators formula,
// and unfolds uniform/arbitrary by their recursive definitions.

#include "gcmonad/ast.hpp"
#include "gcmonad/gcm.hpp"

namespace gcmonad::oracle {

lang::ExprPtr substitute(const lang::ExprPtr& e, const std::string& name, const Outcome& value);

Gcm subst_eval(const lang::Expr& e);

}  // namespace gcmonad::oracle
