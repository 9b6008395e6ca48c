#include "ba/sequent.hpp"

#include <algorithm>

namespace ba {

Sequent::Sequent(const std::vector<FormulaPtr>& items) {
  for (const auto& f : items) add(f);
}

Sequent::Sequent(std::initializer_list<FormulaPtr> items) {
  for (const auto& f : items) add(f);
}

void Sequent::add(const FormulaPtr& f) {
  auto nf = normalize(f);
  for (auto it = items_.begin(); it != items_.end(); ++it) {
    if (normalize(*it) == nf) {
      if (f->text < (*it)->text) {
        items_.erase(it);
        auto pos = std::lower_bound(
            items_.begin(), items_.end(), f,
            [](const FormulaPtr& a, const FormulaPtr& b) { return a->text < b->text; });
        items_.insert(pos, f);
      }
      return;
    }
  }
  auto pos = std::lower_bound(
      items_.begin(), items_.end(), f,
      [](const FormulaPtr& a, const FormulaPtr& b) { return a->text < b->text; });
  items_.insert(pos, f);
}

bool Sequent::contains(const FormulaPtr& f) const {
  auto nf = normalize(f);
  for (const auto& g : items_)
    if (normalize(g) == nf) return true;
  return false;
}

bool Sequent::closed() const {
  for (const auto& g : items_)
    if (!g->closed()) return false;
  return true;
}

std::vector<std::string> Sequent::fv() const {
  std::vector<std::string> out;
  for (const auto& g : items_) out.insert(out.end(), g->fv.begin(), g->fv.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Sequent::text() const {
  std::string s = "(seq";
  for (const auto& g : items_) {
    s += ' ';
    s += g->text;
  }
  s += ')';
  return s;
}

bool Sequent::operator==(const Sequent& o) const {
  if (items_.size() != o.items_.size()) return false;
  std::vector<const Formula*> a, b;
  a.reserve(items_.size());
  b.reserve(items_.size());
  for (const auto& g : items_) a.push_back(normalize(g).get());
  for (const auto& g : o.items_) b.push_back(normalize(g).get());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Sequent seq_union(const Sequent& a, const Sequent& b) {
  Sequent out = a;
  for (const auto& g : b) out.add(g);
  return out;
}

Sequent seq_minus(const Sequent& a, const Sequent& b) {
  Sequent out;
  for (const auto& g : a)
    if (!b.contains(g)) out.add(g);
  return out;
}

bool seq_subset(const Sequent& a, const Sequent& b) {
  for (const auto& g : a)
    if (!b.contains(g)) return false;
  return true;
}

Sequent seq_subst(const Sequent& a, const std::string& name, const TermPtr& t) {
  Sequent out;
  for (const auto& g : a) out.add(subst(g, name, t));
  return out;
}

std::function<bool(const FormulaPtr&)> seq_closure(const Sequent& delta) {
  return [delta](const FormulaPtr& f) { return delta.contains(f); };
}

}  // namespace ba
