#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ba/term.hpp"

namespace ba {

enum class Rel : uint8_t { Eq, Le };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Negation-normal formulas over literals: negation lives in literal polarity
// and flips connectives elsewhere. Interned like terms.
class Formula : public std::enable_shared_from_this<Formula> {
 public:
  enum class Kind : uint8_t { Lit, And, Or, All, Ex };

  Kind kind;
  // Lit
  bool positive = true;
  Rel rel = Rel::Eq;
  TermPtr lhs, rhs;
  // And / Or
  FormulaPtr left, right;
  // All / Ex
  std::string bound_var;
  FormulaPtr body;

  std::string text;
  std::vector<std::string> fv;
  uint32_t depth = 1;
  size_t hash = 0;

  bool closed() const { return fv.empty(); }
  bool is_lit() const { return kind == Kind::Lit; }
  bool is_quant() const { return kind == Kind::All || kind == Kind::Ex; }
};

FormulaPtr lit(bool positive, Rel rel, TermPtr lhs, TermPtr rhs);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(const std::string& x, FormulaPtr body);
FormulaPtr exists(const std::string& x, FormulaPtr body);

// (Qx <= t) body, encoded by guarding every occurrence of x with min(x, t).
FormulaPtr bounded_forall(const std::string& x, const TermPtr& t, FormulaPtr body);
FormulaPtr bounded_exists(const std::string& x, const TermPtr& t, FormulaPtr body);

// De Morgan negation; involutive.
FormulaPtr negate(const FormulaPtr& a);

// Substitute a term for a free variable (stops at same-name binders).
FormulaPtr subst(const FormulaPtr& a, const std::string& name, const TermPtr& t);

// The outermost connective of a closed formula: true/false literal, or the
// conjunctive/disjunctive side of the infinitary reading.
enum class Tp : uint8_t { Top, Bottom, BigAnd, BigOr };
Tp tp(const FormulaPtr& a);
bool tp_conjunctive(Tp t);  // Top or BigAnd

// n-th immediate subformula: literals are their own, binary connectives cap
// the index at 1, quantifiers instantiate the bound variable with numeral n.
FormulaPtr sub(const FormulaPtr& a, const Nat& n);

// The guard bound of an encoded bounded quantifier: every free occurrence of
// the bound variable must sit inside min(x, t) for one common t. A vacuous
// binder reports bound 0. nullopt when the occurrences are unguarded.
std::optional<TermPtr> quant_bound(const FormulaPtr& a);

// Well-formedness: every quantifier in a carries a detectable bound.
bool well_formed(const FormulaPtr& a);
std::optional<std::string> well_formed_diag(const FormulaPtr& a);

// Number of informative children of a closed formula (bound value + 1 for
// quantifiers); UnboundedQuantifier when no guard is detectable.
Nat rng(const FormulaPtr& a);

// Strict-class membership by quantifier-prefix shape, and the derived rank.
bool sigma_member(uint32_t level, const FormulaPtr& a);
bool in_class(uint32_t level, const FormulaPtr& a);  // sigma or its negation
uint32_t rank(uint32_t level, const FormulaPtr& a);

// Exhaustive truth of a closed formula under the instantiation budget.
bool truth(const FormulaPtr& a);
struct TruthBudget {
  uint64_t remaining;
};
bool truth(const FormulaPtr& a, TruthBudget& budget);

// Names bound by quantifiers anywhere inside a; sorted, unique.
std::vector<std::string> binder_names(const FormulaPtr& a);

// Maximal closed subterms replaced by numerals, recursively.
FormulaPtr normalize(const FormulaPtr& a);

// Intensional equality: identity of normal forms.
bool ieq(const FormulaPtr& a, const FormulaPtr& b);

}  // namespace ba
