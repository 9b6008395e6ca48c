#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ba/formula.hpp"

namespace ba {

// Finite set of formulas modulo ieq. Elements are kept sorted by their
// serialization; of several ieq-equal inserts the smallest text survives, so
// the representation is independent of insertion order.
class Sequent {
 public:
  Sequent() = default;
  explicit Sequent(const std::vector<FormulaPtr>& items);
  Sequent(std::initializer_list<FormulaPtr> items);

  void add(const FormulaPtr& f);
  bool contains(const FormulaPtr& f) const;

  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }
  const std::vector<FormulaPtr>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool closed() const;
  std::vector<std::string> fv() const;
  std::string text() const;

  bool operator==(const Sequent& o) const;
  bool operator!=(const Sequent& o) const { return !(*this == o); }

 private:
  std::vector<FormulaPtr> items_;
};

Sequent seq_union(const Sequent& a, const Sequent& b);
// a with every element ieq-equal to some element of b removed.
Sequent seq_minus(const Sequent& a, const Sequent& b);
bool seq_subset(const Sequent& a, const Sequent& b);
Sequent seq_subst(const Sequent& a, const std::string& name, const TermPtr& t);

// Membership predicate of the ieq-closure of delta.
std::function<bool(const FormulaPtr&)> seq_closure(const Sequent& delta);

}  // namespace ba
