#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ba/infsym.hpp"

namespace ba {

enum class DKind : uint8_t {
  AxSeq,  // axiom on a clause
  ConjI,  // conjunction introduction
  DisjI,  // disjunction introduction, branch k
  AllI,   // universal introduction, eigenvariable y
  ExI,    // existential introduction, witness t
  IndT,   // induction up to zhl(t)
  IndNI,  // induction slice from n over 2^i steps
  CutI,   // cut
};

class Deriv;
using DerivPtr = std::shared_ptr<const Deriv>;

// Finitary derivation node. Immutable and interned by serialization, so
// equal derivations are pointer-equal; endsequent, free variables, height
// and size are computed once at construction.
class Deriv : public std::enable_shared_from_this<Deriv> {
 public:
  DKind kind;
  Sequent ax_delta;     // AxSeq clause
  FormulaPtr formula;   // introduced formula, or the induction formula
  uint32_t k = 0;       // DisjI branch
  std::string y;        // eigenvariable of AllI / IndT / IndNI
  TermPtr t;            // ExI witness, IndT bound
  Nat n;                // IndNI start value
  uint64_t i = 0;       // IndNI step exponent
  std::vector<DerivPtr> children;

  std::string text;
  std::vector<std::string> fv;  // sorted, unique; binders drop their eigenvariable
  Sequent gamma;
  Sequent deco;  // every conclusion below, plus the induction formulas
  uint64_t hgt = 0;
  uint64_t sz = 1;

  bool closed() const { return fv.empty(); }
  bool binder() const {
    return kind == DKind::AllI || kind == DKind::IndT || kind == DKind::IndNI;
  }
  uint32_t arity() const;

  // Conclusion and premise templates of the node's own rule.
  Sequent delta() const;
  Sequent delta_at(uint32_t j) const;
};

DerivPtr d_ax(const Sequent& delta);
DerivPtr d_conj(const FormulaPtr& f, const DerivPtr& d0, const DerivPtr& d1);
DerivPtr d_disj(uint32_t k, const FormulaPtr& f, const DerivPtr& d0);
DerivPtr d_all(const std::string& y, const FormulaPtr& f, const DerivPtr& d0);
DerivPtr d_ex(const TermPtr& t, const FormulaPtr& f, const DerivPtr& d0);
DerivPtr d_ind_t(const std::string& y, const TermPtr& t, const FormulaPtr& f,
                 const DerivPtr& d0);
DerivPtr d_ind_n(const std::string& y, const Nat& n, uint64_t i, const FormulaPtr& f,
                 const DerivPtr& d0);
DerivPtr d_cut(const FormulaPtr& c, const DerivPtr& d0, const DerivPtr& d1);

// Eigenvariable discipline: free variables among xs, binders extend xs for
// their premise, conclusions stay inside xs. The diag variant names the
// first violated clause.
bool var_deriv(const DerivPtr& h, const std::vector<std::string>& xs);
std::optional<std::string> var_deriv_diag(const DerivPtr& h,
                                          const std::vector<std::string>& xs);

// Cut rank: cuts count formula rank plus one; induction nodes count the rank
// of the cuts their unfolding creates; everything else zero.
uint32_t crk(const DerivPtr& h, uint32_t level);

// Substitution of a closed term for y, stopping at binders of the same y.
DerivPtr substitute(const DerivPtr& h, const TermPtr& t, const std::string& y);

// Universal truth of the clause \/delta: decided exactly when closed,
// sampled over seeded assignments when open. require_basic raises NotBasic
// and reports the falsifying assignment.
bool is_basic(const Sequent& delta, std::string* diag = nullptr);
void require_basic(const Sequent& delta);

}  // namespace ba
