#include "ba/search.hpp"

#include <algorithm>

#include "ba/error.hpp"
#include "ba/formula.hpp"
#include "ba/infsym.hpp"
#include "ba/limits.hpp"
#include "ba/term.hpp"
#include "ba/unfold.hpp"

namespace ba {

namespace {

FormulaPtr goal_at(const SearchParams& p, const Nat& a) {
  if (p.x.empty()) return p.goal;
  return subst(p.goal, p.x, num(a));
}

struct Step {
  NotationPtr next;
  std::optional<Nat> child_index;
  uint64_t batches = 0;
  bool fixpoint = false;
};

Step step_once(const SearchParams& p, const Nat& a, const NotationPtr& h) {
  Step out;
  InfSymbol sym = tp(h);
  switch (sym.kind) {
    case SymKind::Ax:
      raise(ErrorKind::AxiomAmongSolutions,
            "axiom reached on the canonical path: " + sym.text());
    case SymKind::Conj: {
      out.batches = 1;
      Nat w = rng(sym.formula);
      for (Nat j = 0; j < w; ++j) {
        if (!truth(sub(sym.formula, j))) {
          out.next = child(h, j);
          out.child_index = j;
          return out;
        }
      }
      raise(ErrorKind::NoFalseChild,
            "conjunction with no false part: " + sym.formula->text);
    }
    case SymKind::Disj: {
      auto goal = goal_at(p, a);
      if (ieq(sym.formula, goal)) {
        out.batches = 1;
        if (truth(sub(sym.formula, sym.index))) {
          out.next = h;
          out.fixpoint = true;
          return out;
        }
      }
      out.next = child(h, Nat(0));
      out.child_index = Nat(0);
      return out;
    }
    case SymKind::Cut: {
      out.batches = 1;
      Nat j = truth(sym.formula) ? 1 : 0;
      out.next = child(h, j);
      out.child_index = j;
      return out;
    }
    case SymKind::Rep:
      out.next = child(h, Nat(0));
      out.child_index = Nat(0);
      return out;
  }
  raise(ErrorKind::Invariant, "bad symbol kind");
}

[[noreturn]] void bullet(const char* which, const std::string& detail) {
  raise(ErrorKind::Precondition,
        std::string("initial value breaks the ") + which + " requirement: " + detail);
}

// Reducts decorate themselves with negations and bodies of the script's
// formulas, so the alphabet is kept closed under both.
Sequent alphabet_closure(const Sequent& phi) {
  Sequent out;
  std::vector<FormulaPtr> work(phi.begin(), phi.end());
  while (!work.empty()) {
    FormulaPtr f = work.back();
    work.pop_back();
    if (out.contains(f)) continue;
    out.add(f);
    work.push_back(negate(f));
    switch (f->kind) {
      case Formula::Kind::And:
      case Formula::Kind::Or:
        work.push_back(f->left);
        work.push_back(f->right);
        break;
      case Formula::Kind::All:
      case Formula::Kind::Ex:
        work.push_back(f->body);
        break;
      case Formula::Kind::Lit:
        break;
    }
  }
  return out;
}

}  // namespace

std::optional<RecipeKind> recipe_by_name(const std::string& name) {
  if (name == "direct") return RecipeKind::Direct;
  if (name == "single") return RecipeKind::Single;
  if (name == "double") return RecipeKind::Double;
  if (name == "iterated") return RecipeKind::Iterated;
  return std::nullopt;
}

const char* recipe_name(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::Direct:
      return "direct";
    case RecipeKind::Single:
      return "single";
    case RecipeKind::Double:
      return "double";
    case RecipeKind::Iterated:
      return "iterated";
  }
  return "?";
}

SearchParams make_params(const Sequent& phi, uint32_t level, const Nat& s,
                         uint32_t e_count, const DerivPtr& base) {
  if (s < 1) raise(ErrorKind::Precondition, "size parameter must be positive");
  if (base->fv.size() > 1)
    raise(ErrorKind::Precondition,
          "script must have at most one free variable, found " +
              std::to_string(base->fv.size()));
  SearchParams p;
  p.phi = alphabet_closure(phi);
  p.level = level;
  p.s = s;
  p.e_count = e_count;
  p.base = base;
  p.x = base->fv.empty() ? std::string() : base->fv[0];
  if (auto diag = var_deriv_diag(base, base->fv))
    raise(ErrorKind::Precondition, "script is not well-formed: " + *diag);
  if (base->gamma.size() != 1)
    raise(ErrorKind::Precondition,
          "script must prove exactly one formula, proves " + base->gamma.text());
  p.goal = *base->gamma.begin();
  if (p.goal->kind != Formula::Kind::Ex)
    raise(ErrorKind::Precondition,
          "script must prove an existential formula, proves " + p.goal->text);
  if (!sigma_member(level, negate(p.goal->body)))
    raise(ErrorKind::Precondition,
          "negated goal body must sit in the declared class: " + p.goal->text);
  return p;
}

SearchParams recipe(RecipeKind kind, const DerivPtr& base, uint32_t i, uint32_t j) {
  uint32_t clevel = 0;
  uint32_t bound = 0;
  uint32_t e_count = 0;
  const char* predicted = "";
  switch (kind) {
    case RecipeKind::Direct:
    case RecipeKind::Single:
    case RecipeKind::Double:
      if (i < 1) raise(ErrorKind::Precondition, "class index must be at least 1");
      clevel = i - 1;
      bound = kind == RecipeKind::Direct ? 1 : kind == RecipeKind::Single ? 2 : 3;
      e_count = kind == RecipeKind::Direct ? 0 : kind == RecipeKind::Single ? 1 : 2;
      predicted = kind == RecipeKind::Direct
                      ? "path length linear in the instance bit length"
                      : kind == RecipeKind::Single
                            ? "ord one exponential over the base; polynomial paths"
                            : "doubly exponential ord; exponential paths";
      break;
    case RecipeKind::Iterated:
      clevel = i;
      bound = j + 1;
      e_count = j;
      predicted = "tower regime, height given by the prefix count";
      break;
  }
  uint32_t have = crk(base, clevel);
  if (have > bound)
    raise(ErrorKind::Precondition,
          "script has cut complexity " + std::to_string(have) + " at level " +
              std::to_string(clevel) + ", recipe allows " + std::to_string(bound));
  SearchParams p = make_params(base->deco, clevel, Nat(base->sz), e_count, base);
  p.predicted = predicted;
  return p;
}

NotationPtr initial(const SearchParams& p, const Nat& a) {
  DerivPtr inst =
      p.x.empty() ? p.base : substitute(p.base, num(a), p.x);
  NotationPtr h = n_base(inst);
  for (uint32_t k = 0; k < p.e_count; ++k) h = n_e(h);
  auto goal = goal_at(p, a);
  if (h->gamma.size() != 1 || !h->gamma.contains(goal))
    bullet("endsequent", "proves " + h->gamma.text() + " instead of " + goal->text);
  if (crk(h, p.level) > 1)
    bullet("cut complexity",
           "complexity " + std::to_string(crk(h, p.level)) + " after elimination");
  if (!deco_within(h, p.phi, a))
    bullet("decoration", "a decoration formula escapes the declared alphabet");
  return h;
}

bool is_solution(const SearchParams& p, const Nat& a, const NotationPtr& h) {
  if (!is_comp(h)) return false;
  if (max_base_sz(h) > p.s) return false;
  auto goal = goal_at(p, a);
  for (const auto& f : h->gamma) {
    if (ieq(f, goal)) continue;
    if (!f->fv.empty()) return false;
    if (!in_class(p.level, f)) return false;
    if (truth(f)) return false;
  }
  if (crk(h, p.level) > 1) return false;
  auto h0 = initial(p, a);
  if (ord(h) > ord(h0)) return false;
  if (szf(h, p.s) > szf(h0, p.s)) return false;
  if (bd(h) > bd(h0) || ibd(h) > ibd(h0)) return false;
  return deco_within(h, p.phi, bd(h0));
}

NotationPtr neighbour(const SearchParams& p, const Nat& a, const NotationPtr& h) {
  return step_once(p, a, h).next;
}

Witness run_search(const SearchParams& p, const Nat& a) {
  NotationPtr h = initial(p, a);
  Witness w;
  w.ord_initial = ord(h);
  w.max_size = h->sz;
  Nat budget = w.ord_initial + 1;
  Nat steps = 0;
  while (true) {
    if (!is_solution(p, a, h))
      raise(ErrorKind::Invariant, "canonical path left the solution set at " + h->text);
    Step st = step_once(p, a, h);
    w.truth_batches += st.batches;
    if (st.fixpoint) break;
    steps += 1;
    if (steps > budget)
      raise(ErrorKind::StepBudget,
            "no fixpoint within " + to_string(budget) + " steps");
    w.trace.push_back(
        {tp(h).text(), st.child_index, ord(st.next), st.next->sz});
    w.max_size = std::max(w.max_size, st.next->sz);
    h = st.next;
  }
  InfSymbol sym = tp(h);
  if (sym.kind != SymKind::Disj || !ieq(sym.formula, goal_at(p, a)))
    raise(ErrorKind::Invariant, "fixpoint with unexpected symbol " + sym.text());
  if (!truth(sub(sym.formula, sym.index)))
    raise(ErrorKind::Invariant, "fixpoint witness fails the truth check");
  w.value = sym.index;
  w.path_length = w.trace.size();
  return w;
}

nlohmann::json witness_json(const Nat& a, const Witness& w) {
  nlohmann::json j;
  j["a"] = to_string(a);
  auto steps = nlohmann::json::array();
  for (const auto& st : w.trace) {
    nlohmann::json e;
    e["tp"] = st.tp;
    if (st.child_index)
      e["childIndex"] = to_string(*st.child_index);
    else
      e["childIndex"] = nullptr;
    e["ord"] = to_string(st.ord);
    e["size"] = st.size;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["witness"] = to_string(w.value);
  j["pathLength"] = w.path_length;
  j["ordInitial"] = to_string(w.ord_initial);
  return j;
}

}  // namespace ba
