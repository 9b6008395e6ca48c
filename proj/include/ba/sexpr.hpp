#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ba/deriv.hpp"
#include "ba/formula.hpp"
#include "ba/notation.hpp"
#include "ba/term.hpp"

namespace ba {

// Parsed S-expression with source location for diagnostics.
struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> items;
  uint32_t line = 0;
  uint32_t col = 0;

  const SExpr& at(size_t i, const char* what) const;
  const std::string& head() const;
  std::string where() const;
};

SExpr parse_sexpr(const std::string& text);
std::vector<SExpr> parse_all(const std::string& text);

TermPtr read_term(const SExpr& e);
FormulaPtr read_formula(const SExpr& e);
DerivPtr read_deriv(const SExpr& e);
NotationPtr read_notation(const SExpr& e);

TermPtr read_term(const std::string& text);
FormulaPtr read_formula(const std::string& text);
DerivPtr read_deriv(const std::string& text);
NotationPtr read_notation(const std::string& text);

}  // namespace ba
