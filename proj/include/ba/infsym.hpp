#pragma once

#include <string>

#include "ba/error.hpp"
#include "ba/sequent.hpp"

namespace ba {

enum class SymKind : uint8_t { Ax, Conj, Disj, Cut, Rep };

// One inference symbol of the omega-branching calculus: axiom on a true
// literal, omega-ary conjunction, disjunction with a witness index, cut on a
// conjunctive formula, repetition. Value type; factories check the side
// conditions.
class InfSymbol {
 public:
  SymKind kind = SymKind::Rep;
  FormulaPtr formula;  // absent for Rep
  Nat index;           // Disj witness

  bool omega() const { return kind == SymKind::Conj; }
  uint32_t finite_arity() const;

  Sequent delta() const;
  Sequent delta_at(const Nat& i) const;

  // Informative premise count: at most rng-many children differ.
  Nat rng() const;

  // Cut symbols contribute rank(C)+1 to the cut rank, everything else 0.
  uint32_t rk(uint32_t level) const;

  std::string text() const;
  bool operator==(const InfSymbol& o) const;
};

InfSymbol sym_ax(const FormulaPtr& a);
InfSymbol sym_and(const FormulaPtr& c);
InfSymbol sym_or(const Nat& i, const FormulaPtr& c);
InfSymbol sym_cut(const FormulaPtr& c);
InfSymbol sym_rep();

// Cuts are stored on the conjunctive side; a disjunctive cut formula is
// realized by cutting on its negation with the premises exchanged.
struct CutShape {
  InfSymbol sym;
  bool swapped;
};
CutShape canonical_cut(const FormulaPtr& c);

// The abbreviation for cutting on a disjunctive formula, spelled out on a
// pair of premise handles. BadConnective when the formula is conjunctive:
// the direct rule applies there.
template <class D>
struct CutAbbrev {
  InfSymbol sym;
  D first, second;
};
template <class D>
CutAbbrev<D> mk_cut_abbrev(const FormulaPtr& c, D left, D right) {
  Tp t = tp(c);
  if (tp_conjunctive(t))
    raise(ErrorKind::BadConnective, "cut formula already conjunctive: " + c->text);
  return CutAbbrev<D>{sym_cut(negate(c)), right, left};
}

}  // namespace ba
