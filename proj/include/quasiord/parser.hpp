#pragma once

#include <string>
#include <vector>

#include "quasiord/polynomial.hpp"

namespace quasiord {

// Variable declaration for parsing and printing: base names in projection
// order, then the main variable name. Tower variables introduced by the
// construction print as u0, u1, ...
struct VarDecl {
    std::vector<std::string> base;
    std::string main;

    void validate() const;
};

// Grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ['^' nat]
//   base     := rational | ident | '(' expr ')'
//   rational := nat ['/' nat]
// No implicit multiplication; whitespace is insignificant. Errors carry
// line and column.
SparsePolynomial parse_polynomial(const std::string& text, const VarDecl& decl);

// Deterministic rendering that reparses to an identical polynomial.
std::string render(const SparsePolynomial& f, const VarDecl& decl);

}  // namespace quasiord
