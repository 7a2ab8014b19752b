#pragma once
/*
 * Recursive-descent parser for polynomial expressions.
 *
 * Family files use the strict grammar
 *
 *   expr     := term (('+' | '-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := base ('^' natural)?
 *   base     := variable | parameter | rational | '(' expr ')'
 *   rational := integer ('/' natural)?   (no spaces around '/')
 *
 * Operator coefficients and certificate witnesses in JSON documents need
 * rational functions of the parameter, so the same tokenizer also runs in
 * an extended mode that additionally allows a leading unary minus and
 * division by parameter-only subexpressions.  Canonical printing targets
 * the extended mode, and parse/print round-trips are exact.
 */

#include <string>
#include <vector>

#include "pf/multipoly.hpp"

namespace pf {

// Strict grammar; result must be homogeneous in the variables.
MultiPoly parse_polynomial(const std::string& text,
                           const std::vector<std::string>& variables,
                           const std::string& parameter);

// Extended grammar (unary minus, '/' by parameter-only expressions).
MultiPoly parse_polynomial_extended(const std::string& text,
                                    const std::vector<std::string>& variables,
                                    const std::string& parameter);

// Extended grammar with no variables: a rational function of the parameter.
ParamRat parse_ratfunc(const std::string& text, const std::string& parameter);

}  // namespace pf
