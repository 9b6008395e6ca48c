#include "ba/formula.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "ba/error.hpp"
#include "ba/limits.hpp"

namespace ba {

namespace {

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::string, FormulaPtr>& intern_table() {
  static std::unordered_map<std::string, FormulaPtr> t;
  return t;
}

FormulaPtr intern(std::shared_ptr<Formula> node) {
  node->hash = std::hash<std::string>{}(node->text);
  std::lock_guard<std::mutex> lock(intern_mutex());
  auto [it, inserted] = intern_table().emplace(node->text, node);
  return it->second;
}

void merge_fv(std::vector<std::string>& into, const std::vector<std::string>& from,
              const std::string* drop = nullptr) {
  for (const auto& v : from) {
    if (drop && v == *drop) continue;
    if (!std::binary_search(into.begin(), into.end(), v))
      into.insert(std::upper_bound(into.begin(), into.end(), v), v);
  }
}

const char* lit_tag(bool positive, Rel rel) {
  if (positive) return rel == Rel::Eq ? "eq" : "le";
  return rel == Rel::Eq ? "neq" : "nle";
}

FormulaPtr binary(Formula::Kind kind, const char* tag, FormulaPtr a, FormulaPtr b) {
  auto node = std::make_shared<Formula>();
  node->kind = kind;
  node->text = "(" + std::string(tag) + " " + a->text + " " + b->text + ")";
  node->depth = std::max(a->depth, b->depth) + 1;
  merge_fv(node->fv, a->fv);
  merge_fv(node->fv, b->fv);
  node->left = std::move(a);
  node->right = std::move(b);
  return intern(std::move(node));
}

FormulaPtr quant(Formula::Kind kind, const char* tag, const std::string& x, FormulaPtr body) {
  auto node = std::make_shared<Formula>();
  node->kind = kind;
  node->bound_var = x;
  node->text = "(" + std::string(tag) + " " + x + " " + body->text + ")";
  node->depth = body->depth + 1;
  merge_fv(node->fv, body->fv, &x);
  node->body = std::move(body);
  return intern(std::move(node));
}

}  // namespace

FormulaPtr lit(bool positive, Rel rel, TermPtr lhs, TermPtr rhs) {
  auto node = std::make_shared<Formula>();
  node->kind = Formula::Kind::Lit;
  node->positive = positive;
  node->rel = rel;
  node->text =
      "(" + std::string(lit_tag(positive, rel)) + " " + lhs->text + " " + rhs->text + ")";
  node->depth = std::max(lhs->depth, rhs->depth) + 1;
  merge_fv(node->fv, lhs->fv);
  merge_fv(node->fv, rhs->fv);
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return intern(std::move(node));
}

FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::And, "and", std::move(a), std::move(b));
}

FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::Or, "or", std::move(a), std::move(b));
}

FormulaPtr forall(const std::string& x, FormulaPtr body) {
  return quant(Formula::Kind::All, "all", x, std::move(body));
}

FormulaPtr exists(const std::string& x, FormulaPtr body) {
  return quant(Formula::Kind::Ex, "ex", x, std::move(body));
}

namespace {

// Substitution on formulas. No capture handling: open replacement terms only
// ever carry eigenvariables, and the binder discipline keeps those distinct
// from every quantified variable in range.
FormulaPtr subst_impl(const FormulaPtr& a, const std::string& name, const TermPtr& t) {
  if (!std::binary_search(a->fv.begin(), a->fv.end(), name)) return a;
  switch (a->kind) {
    case Formula::Kind::Lit:
      return lit(a->positive, a->rel, subst(a->lhs, name, t), subst(a->rhs, name, t));
    case Formula::Kind::And:
      return conj(subst_impl(a->left, name, t), subst_impl(a->right, name, t));
    case Formula::Kind::Or:
      return disj(subst_impl(a->left, name, t), subst_impl(a->right, name, t));
    case Formula::Kind::All:
      return forall(a->bound_var, subst_impl(a->body, name, t));
    case Formula::Kind::Ex:
      return exists(a->bound_var, subst_impl(a->body, name, t));
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

}  // namespace

FormulaPtr subst(const FormulaPtr& a, const std::string& name, const TermPtr& t) {
  return subst_impl(a, name, t);
}

FormulaPtr bounded_forall(const std::string& x, const TermPtr& t, FormulaPtr body) {
  return forall(x, subst(body, x, app(Fn::Min, {var(x), t})));
}

FormulaPtr bounded_exists(const std::string& x, const TermPtr& t, FormulaPtr body) {
  return exists(x, subst(body, x, app(Fn::Min, {var(x), t})));
}

FormulaPtr negate(const FormulaPtr& a) {
  switch (a->kind) {
    case Formula::Kind::Lit:
      return lit(!a->positive, a->rel, a->lhs, a->rhs);
    case Formula::Kind::And:
      return disj(negate(a->left), negate(a->right));
    case Formula::Kind::Or:
      return conj(negate(a->left), negate(a->right));
    case Formula::Kind::All:
      return exists(a->bound_var, negate(a->body));
    case Formula::Kind::Ex:
      return forall(a->bound_var, negate(a->body));
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

Tp tp(const FormulaPtr& a) {
  if (!a->closed()) raise(ErrorKind::OpenFormula, "tp of open formula " + a->text);
  switch (a->kind) {
    case Formula::Kind::Lit:
      return truth(a) ? Tp::Top : Tp::Bottom;
    case Formula::Kind::And:
    case Formula::Kind::All:
      return Tp::BigAnd;
    case Formula::Kind::Or:
    case Formula::Kind::Ex:
      return Tp::BigOr;
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

bool tp_conjunctive(Tp t) { return t == Tp::Top || t == Tp::BigAnd; }

FormulaPtr sub(const FormulaPtr& a, const Nat& n) {
  switch (a->kind) {
    case Formula::Kind::Lit:
      return a;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return (n == 0) ? a->left : a->right;
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      return subst(a->body, a->bound_var, num(n));
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

namespace {

// Every free occurrence of x in t must sit inside min(x, u) with one common u.
// Returns false on a bare/unguarded occurrence; accumulates u into `bound`.
bool scan_term_guard(const TermPtr& t, const std::string& x, TermPtr& bound) {
  if (!std::binary_search(t->fv.begin(), t->fv.end(), x)) return true;
  if (t->is_var()) return false;
  if (t->is_app(Fn::Min) && t->args[0]->is_var() && t->args[0]->var_name == x &&
      !std::binary_search(t->args[1]->fv.begin(), t->args[1]->fv.end(), x)) {
    if (bound && bound != t->args[1]) return false;
    bound = t->args[1];
    return true;
  }
  for (const auto& a : t->args)
    if (!scan_term_guard(a, x, bound)) return false;
  return true;
}

bool scan_formula_guard(const FormulaPtr& a, const std::string& x, TermPtr& bound) {
  if (!std::binary_search(a->fv.begin(), a->fv.end(), x)) return true;
  switch (a->kind) {
    case Formula::Kind::Lit:
      return scan_term_guard(a->lhs, x, bound) && scan_term_guard(a->rhs, x, bound);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return scan_formula_guard(a->left, x, bound) && scan_formula_guard(a->right, x, bound);
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      return scan_formula_guard(a->body, x, bound);
  }
  return false;
}

}  // namespace

std::optional<TermPtr> quant_bound(const FormulaPtr& a) {
  if (!a->is_quant()) return std::nullopt;
  if (!std::binary_search(a->body->fv.begin(), a->body->fv.end(), a->bound_var))
    return num(0);
  TermPtr bound;
  if (!scan_formula_guard(a->body, a->bound_var, bound) || !bound) return std::nullopt;
  return bound;
}

std::optional<std::string> well_formed_diag(const FormulaPtr& a) {
  switch (a->kind) {
    case Formula::Kind::Lit:
      return std::nullopt;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      auto d = well_formed_diag(a->left);
      return d ? d : well_formed_diag(a->right);
    }
    case Formula::Kind::All:
    case Formula::Kind::Ex: {
      if (!quant_bound(a))
        return "quantifier over " + a->bound_var + " has no min-guard bound in " + a->text;
      return well_formed_diag(a->body);
    }
  }
  return "bad formula kind";
}

bool well_formed(const FormulaPtr& a) { return !well_formed_diag(a).has_value(); }

Nat rng(const FormulaPtr& a) {
  if (!a->closed()) raise(ErrorKind::OpenFormula, "rng of open formula " + a->text);
  switch (a->kind) {
    case Formula::Kind::Lit:
      return 0;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::All:
    case Formula::Kind::Ex: {
      auto b = quant_bound(a);
      if (!b) raise(ErrorKind::UnboundedQuantifier, "no detectable bound in " + a->text);
      return eval(*b) + 1;
    }
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

namespace {

struct PrefixBlock {
  Formula::Kind kind;
  bool all_sharp;
};

bool quantifier_free(const FormulaPtr& a) {
  switch (a->kind) {
    case Formula::Kind::Lit:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return quantifier_free(a->left) && quantifier_free(a->right);
    default:
      return false;
  }
}

// Peels the maximal quantifier prefix into alternation blocks. Returns false
// when the matrix is not quantifier-free or a bound is undetectable.
bool peel_prefix(FormulaPtr a, std::vector<PrefixBlock>& blocks) {
  while (a->is_quant()) {
    auto b = quant_bound(a);
    if (!b) return false;
    bool sharp = (*b)->is_app(Fn::Len);
    if (!blocks.empty() && blocks.back().kind == a->kind)
      blocks.back().all_sharp = blocks.back().all_sharp && sharp;
    else
      blocks.push_back({a->kind, sharp});
    a = a->body;
  }
  return quantifier_free(a);
}

}  // namespace

bool sigma_member(uint32_t level, const FormulaPtr& a) {
  std::vector<PrefixBlock> blocks;
  if (!peel_prefix(a, blocks)) return false;
  if (blocks.empty()) return true;
  uint32_t start = blocks.front().kind == Formula::Kind::Ex ? 1 : 2;
  uint32_t end = start + static_cast<uint32_t>(blocks.size()) - 1;
  if (end <= level) return true;
  return end == level + 1 && blocks.back().all_sharp;
}

bool in_class(uint32_t level, const FormulaPtr& a) {
  return sigma_member(level, a) || sigma_member(level, negate(a));
}

uint32_t rank(uint32_t level, const FormulaPtr& a) {
  if (in_class(level, a)) return 0;
  switch (a->kind) {
    case Formula::Kind::Lit:
      return 0;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + std::max(rank(level, a->left), rank(level, a->right));
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      return 1 + rank(level, a->body);
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

namespace {

bool truth_env(const FormulaPtr& a, Env& env, TruthBudget& budget) {
  switch (a->kind) {
    case Formula::Kind::Lit: {
      Nat l = eval(a->lhs, env);
      Nat r = eval(a->rhs, env);
      bool holds = a->rel == Rel::Eq ? l == r : l <= r;
      return a->positive ? holds : !holds;
    }
    case Formula::Kind::And:
      return truth_env(a->left, env, budget) && truth_env(a->right, env, budget);
    case Formula::Kind::Or:
      return truth_env(a->left, env, budget) || truth_env(a->right, env, budget);
    case Formula::Kind::All:
    case Formula::Kind::Ex: {
      auto b = quant_bound(a);
      if (!b) raise(ErrorKind::UnboundedQuantifier, "no detectable bound in " + a->text);
      Nat hi = eval(*b, env);
      bool want_all = a->kind == Formula::Kind::All;
      env.emplace_back(a->bound_var, Nat(0));
      for (Nat n = 0; n <= hi; ++n) {
        if (budget.remaining == 0) {
          env.pop_back();
          raise(ErrorKind::ResourceCap, "truth budget exhausted at " + a->text);
        }
        --budget.remaining;
        env.back().second = n;
        bool v = truth_env(a->body, env, budget);
        if (want_all && !v) {
          env.pop_back();
          return false;
        }
        if (!want_all && v) {
          env.pop_back();
          return true;
        }
      }
      env.pop_back();
      return want_all;
    }
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

}  // namespace

bool truth(const FormulaPtr& a, TruthBudget& budget) {
  if (!a->closed()) raise(ErrorKind::OpenFormula, "truth of open formula " + a->text);
  Env env;
  return truth_env(a, env, budget);
}

bool truth(const FormulaPtr& a) {
  TruthBudget budget{limits().truth_budget};
  return truth(a, budget);
}

namespace {

std::mutex& norm_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<const Formula*, FormulaPtr>& norm_table() {
  static std::unordered_map<const Formula*, FormulaPtr> t;
  return t;
}

FormulaPtr normalize_uncached(const FormulaPtr& a) {
  switch (a->kind) {
    case Formula::Kind::Lit:
      return lit(a->positive, a->rel, normalize(a->lhs), normalize(a->rhs));
    case Formula::Kind::And:
      return conj(normalize(a->left), normalize(a->right));
    case Formula::Kind::Or:
      return disj(normalize(a->left), normalize(a->right));
    case Formula::Kind::All:
      return forall(a->bound_var, normalize(a->body));
    case Formula::Kind::Ex:
      return exists(a->bound_var, normalize(a->body));
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

void collect_binders(const FormulaPtr& a, std::vector<std::string>& out) {
  switch (a->kind) {
    case Formula::Kind::Lit:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_binders(a->left, out);
      collect_binders(a->right, out);
      return;
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      out.push_back(a->bound_var);
      collect_binders(a->body, out);
      return;
  }
  raise(ErrorKind::Invariant, "bad formula kind");
}

}  // namespace

std::vector<std::string> binder_names(const FormulaPtr& a) {
  std::vector<std::string> out;
  collect_binders(a, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FormulaPtr normalize(const FormulaPtr& a) {
  {
    std::lock_guard<std::mutex> lock(norm_mutex());
    auto it = norm_table().find(a.get());
    if (it != norm_table().end()) return it->second;
  }
  FormulaPtr r = normalize_uncached(a);
  std::lock_guard<std::mutex> lock(norm_mutex());
  norm_table().emplace(a.get(), r);
  return r;
}

bool ieq(const FormulaPtr& a, const FormulaPtr& b) {
  return a == b || normalize(a) == normalize(b);
}

}  // namespace ba
