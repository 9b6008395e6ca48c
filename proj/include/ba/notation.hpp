#pragma once

#include "ba/unfold.hpp"

namespace ba {

enum class NKind : uint8_t { Base, IOp, ROp, EOp };

class Notation;
using NotationPtr = std::shared_ptr<const Notation>;

// Cut-reduction notations over closed derivations: a base derivation, an
// instantiation I^k_C, a reduction R_C of a cut formula across two sides,
// or one round E of cut elimination. Interned by serialization.
class Notation : public std::enable_shared_from_this<Notation> {
 public:
  NKind kind;
  DerivPtr base;            // Base
  FormulaPtr formula;       // IOp instantiated formula, ROp cut formula
  Nat k;                    // IOp index
  NotationPtr left, right;  // operand(s); unary operators use left

  std::string text;
  Sequent gamma;
  uint64_t sz = 1;

  bool is_base() const { return kind == NKind::Base; }
};

NotationPtr n_base(const DerivPtr& d);
NotationPtr n_i(const Nat& k, const FormulaPtr& c, const NotationPtr& body);
NotationPtr n_r(const FormulaPtr& c, const NotationPtr& l, const NotationPtr& r);
NotationPtr n_e(const NotationPtr& body);

// Denoted inference and premises, by the operator case tables. Indices past
// a finite symbol's arity land in the trivial-axiom base notation.
InfSymbol tp(const NotationPtr& h);
NotationPtr child(const NotationPtr& h, const Nat& j);

Nat rng(const NotationPtr& h);
uint32_t crk(const NotationPtr& h, uint32_t level);
Nat ord(const NotationPtr& h);
Nat bd(const NotationPtr& h);
Nat ibd(const NotationPtr& h);
Sequent deco(const NotationPtr& h);

// Every instantiation index inside h is informative (k < rng of its formula).
bool is_comp(const NotationPtr& h);

// Largest embedded derivation; solution sets bound this by the size parameter.
uint64_t max_base_sz(const NotationPtr& h);

// Iterated child along a path, recording the size of every notation touched.
struct ExploreResult {
  NotationPtr final;
  InfSymbol tp;
  std::vector<uint64_t> sizes;  // sz of each notation along the path, start included
};
ExploreResult explore(const NotationPtr& h, const std::vector<Nat>& path);

// Breadth-first closure under informative children up to the given depth.
// Branching wider than width raises WidthExceeded so exhaustiveness claims
// stay honest.
std::vector<NotationPtr> reachable(const NotationPtr& h, uint32_t depth,
                                   uint32_t width);

// The operator skeleton: all formula decorations dropped, base leaves
// reduced to their size and height bound.
class Abstract;
using AbstractPtr = std::shared_ptr<const Abstract>;

class Abstract : public std::enable_shared_from_this<Abstract> {
 public:
  NKind kind;
  uint64_t base_sz = 0;  // Base payload
  Nat base_oo;           // Base payload
  AbstractPtr left, right;

  std::string text;
  uint64_t sz = 1;
  Nat oo;
};

AbstractPtr a_base(uint64_t sz, const Nat& oo);
AbstractPtr a_i(const AbstractPtr& body);
AbstractPtr a_r(const AbstractPtr& l, const AbstractPtr& r);
AbstractPtr a_e(const AbstractPtr& body);

AbstractPtr abstract(const NotationPtr& h);

// Size functionals: szf bounds the size of everything reachable, szf_k the
// same after at most k steps from an E node.
Nat szf(const AbstractPtr& d, const Nat& s);
Nat szf_k(const AbstractPtr& d, const Nat& s, const Nat& k);
Nat szf(const NotationPtr& h, const Nat& s);
Nat szf_k(const NotationPtr& h, const Nat& s, const Nat& k);

// Instances of phi with free variables partially substituted by numerals
// at most K: a materialized set for small K, and a matcher for the rest.
Sequent phi_k_set(const Sequent& phi, const Nat& K);
bool in_phi_k(const FormulaPtr& f, const Sequent& phi, const Nat& K);
bool deco_within(const NotationPtr& h, const Sequent& phi, const Nat& K);

}  // namespace ba
