#include "ba/infsym.hpp"

namespace ba {

uint32_t InfSymbol::finite_arity() const {
  switch (kind) {
    case SymKind::Ax:
      return 0;
    case SymKind::Disj:
    case SymKind::Rep:
      return 1;
    case SymKind::Cut:
      return 2;
    case SymKind::Conj:
      raise(ErrorKind::Precondition, "omega-ary symbol has no finite arity");
  }
  raise(ErrorKind::Invariant, "bad symbol kind");
}

Sequent InfSymbol::delta() const {
  switch (kind) {
    case SymKind::Ax:
    case SymKind::Conj:
    case SymKind::Disj:
      return Sequent{formula};
    case SymKind::Cut:
    case SymKind::Rep:
      return Sequent{};
  }
  raise(ErrorKind::Invariant, "bad symbol kind");
}

Sequent InfSymbol::delta_at(const Nat& i) const {
  switch (kind) {
    case SymKind::Ax:
      raise(ErrorKind::Precondition, "axiom has no premises");
    case SymKind::Conj:
      return Sequent{sub(formula, i)};
    case SymKind::Disj:
      if (i != 0) raise(ErrorKind::Precondition, "premise index out of range");
      return Sequent{sub(formula, index)};
    case SymKind::Cut:
      if (i == 0) return Sequent{formula};
      if (i == 1) return Sequent{negate(formula)};
      raise(ErrorKind::Precondition, "premise index out of range");
    case SymKind::Rep:
      if (i != 0) raise(ErrorKind::Precondition, "premise index out of range");
      return Sequent{};
  }
  raise(ErrorKind::Invariant, "bad symbol kind");
}

Nat InfSymbol::rng() const {
  switch (kind) {
    case SymKind::Ax:
      return 0;
    case SymKind::Disj:
    case SymKind::Rep:
      return 1;
    case SymKind::Cut:
      return 2;
    case SymKind::Conj:
      return ba::rng(formula);
  }
  raise(ErrorKind::Invariant, "bad symbol kind");
}

uint32_t InfSymbol::rk(uint32_t level) const {
  if (kind != SymKind::Cut) return 0;
  return rank(level, formula) + 1;
}

std::string InfSymbol::text() const {
  switch (kind) {
    case SymKind::Ax:
      return "(ax " + formula->text + ")";
    case SymKind::Conj:
      return "(and " + formula->text + ")";
    case SymKind::Disj:
      return "(or " + to_string(index) + " " + formula->text + ")";
    case SymKind::Cut:
      return "(cut " + formula->text + ")";
    case SymKind::Rep:
      return "(rep)";
  }
  raise(ErrorKind::Invariant, "bad symbol kind");
}

bool InfSymbol::operator==(const InfSymbol& o) const {
  if (kind != o.kind) return false;
  if (kind == SymKind::Rep) return true;
  if (kind == SymKind::Disj && index != o.index) return false;
  return formula == o.formula;
}

InfSymbol sym_ax(const FormulaPtr& a) {
  if (tp(a) != Tp::Top)
    raise(ErrorKind::Precondition, "axiom needs a true literal: " + a->text);
  return InfSymbol{SymKind::Ax, a, 0};
}

InfSymbol sym_and(const FormulaPtr& c) {
  if (tp(c) != Tp::BigAnd)
    raise(ErrorKind::Precondition, "not a conjunctive formula: " + c->text);
  return InfSymbol{SymKind::Conj, c, 0};
}

InfSymbol sym_or(const Nat& i, const FormulaPtr& c) {
  if (tp(c) != Tp::BigOr)
    raise(ErrorKind::Precondition, "not a disjunctive formula: " + c->text);
  return InfSymbol{SymKind::Disj, c, i};
}

InfSymbol sym_cut(const FormulaPtr& c) {
  if (!tp_conjunctive(tp(c)))
    raise(ErrorKind::Precondition, "cut formula must be conjunctive: " + c->text);
  return InfSymbol{SymKind::Cut, c, 0};
}

InfSymbol sym_rep() { return InfSymbol{SymKind::Rep, nullptr, 0}; }

CutShape canonical_cut(const FormulaPtr& c) {
  if (tp_conjunctive(tp(c))) return CutShape{sym_cut(c), false};
  return CutShape{sym_cut(negate(c)), true};
}

}  // namespace ba
