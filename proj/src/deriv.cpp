#include "ba/deriv.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <random>
#include <unordered_map>

#include "ba/limits.hpp"

namespace ba {

namespace {

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::string, DerivPtr>& intern_table() {
  static std::unordered_map<std::string, DerivPtr> t;
  return t;
}

void merge_fv(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& v : from)
    if (!std::binary_search(into.begin(), into.end(), v))
      into.insert(std::upper_bound(into.begin(), into.end(), v), v);
}

void drop_fv(std::vector<std::string>& from, const std::string& name) {
  auto it = std::find(from.begin(), from.end(), name);
  if (it != from.end()) from.erase(it);
}

void check_formula(const FormulaPtr& f, const char* where) {
  if (auto diag = well_formed_diag(f))
    raise(ErrorKind::WellFormed, std::string(where) + ": " + *diag);
}

void check_eigen(const std::string& y, const FormulaPtr& f, const char* where) {
  bool ok = !y.empty() && (std::isalpha(static_cast<unsigned char>(y[0])) != 0);
  for (char c : y)
    ok = ok && (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-');
  if (!ok || fn_by_name(y))
    raise(ErrorKind::WellFormed, std::string(where) + ": bad eigenvariable name " + y);
  auto bound = binder_names(f);
  if (std::binary_search(bound.begin(), bound.end(), y))
    raise(ErrorKind::WellFormed, std::string(where) + ": eigenvariable " + y +
                                     " collides with a quantifier of " + f->text);
}

DerivPtr intern_node(std::shared_ptr<Deriv> node) {
  {
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto it = intern_table().find(node->text);
    if (it != intern_table().end()) return it->second;
  }

  node->fv.clear();
  switch (node->kind) {
    case DKind::AxSeq:
      node->fv = node->ax_delta.fv();
      break;
    case DKind::ConjI:
    case DKind::DisjI:
    case DKind::CutI:
    case DKind::AllI:
    case DKind::IndNI:
      node->fv = node->formula->fv;
      break;
    case DKind::ExI:
    case DKind::IndT:
      node->fv = node->formula->fv;
      merge_fv(node->fv, node->t->fv);
      break;
  }
  for (const auto& c : node->children) merge_fv(node->fv, c->fv);
  if (node->binder()) drop_fv(node->fv, node->y);

  node->hgt = 0;
  node->sz = 1;
  for (const auto& c : node->children) {
    node->hgt = std::max(node->hgt, c->hgt + 1);
    node->sz += c->sz;
  }

  node->gamma = node->delta();
  for (uint32_t j = 0; j < node->children.size(); ++j)
    node->gamma = seq_union(node->gamma,
                            seq_minus(node->children[j]->gamma, node->delta_at(j)));

  node->deco = node->delta();
  if (node->kind == DKind::IndT || node->kind == DKind::IndNI)
    node->deco.add(node->formula);
  for (const auto& c : node->children) node->deco = seq_union(node->deco, c->deco);

  std::lock_guard<std::mutex> lock(intern_mutex());
  auto [it, inserted] = intern_table().emplace(node->text, node);
  return it->second;
}

bool subset_of(const std::vector<std::string>& vs, const std::vector<std::string>& xs) {
  for (const auto& v : vs)
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) return false;
  return true;
}

std::string join(const std::vector<std::string>& vs) {
  std::string s;
  for (const auto& v : vs) {
    if (!s.empty()) s += ',';
    s += v;
  }
  return s;
}

bool lit_true(const FormulaPtr& f, const Env& env) {
  Nat a = eval(f->lhs, env);
  Nat b = eval(f->rhs, env);
  bool holds = f->rel == Rel::Eq ? a == b : a <= b;
  return holds == f->positive;
}

}  // namespace

uint32_t Deriv::arity() const {
  switch (kind) {
    case DKind::AxSeq:
      return 0;
    case DKind::ConjI:
    case DKind::CutI:
      return 2;
    default:
      return 1;
  }
}

Sequent Deriv::delta() const {
  switch (kind) {
    case DKind::AxSeq:
      return ax_delta;
    case DKind::ConjI:
    case DKind::DisjI:
    case DKind::AllI:
    case DKind::ExI:
      return Sequent{formula};
    case DKind::IndT: {
      auto concl = subst(formula, y, app(Fn::Zhl, {t}));
      return Sequent{negate(subst(formula, y, num(0))), concl};
    }
    case DKind::IndNI: {
      auto concl = subst(formula, y, num(n + pow2(i)));
      return Sequent{negate(subst(formula, y, num(n))), concl};
    }
    case DKind::CutI:
      return Sequent{};
  }
  raise(ErrorKind::Invariant, "bad node kind");
}

Sequent Deriv::delta_at(uint32_t j) const {
  if (j >= arity()) raise(ErrorKind::Precondition, "premise index out of range");
  switch (kind) {
    case DKind::AxSeq:
      break;
    case DKind::ConjI:
      return Sequent{j == 0 ? formula->left : formula->right};
    case DKind::DisjI:
      return Sequent{k == 0 ? formula->left : formula->right};
    case DKind::AllI:
      return Sequent{subst(formula->body, formula->bound_var, var(y))};
    case DKind::ExI:
      return Sequent{subst(formula->body, formula->bound_var, t)};
    case DKind::IndT:
    case DKind::IndNI:
      return Sequent{negate(formula), subst(formula, y, app(Fn::Suc, {var(y)}))};
    case DKind::CutI:
      return Sequent{j == 0 ? formula : negate(formula)};
  }
  raise(ErrorKind::Invariant, "bad node kind");
}

DerivPtr d_ax(const Sequent& delta) {
  for (const auto& f : delta)
    if (!f->is_lit())
      raise(ErrorKind::NotBasic, "clause element is not a literal: " + f->text);
  if (!limits().assume_basic) require_basic(delta);
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::AxSeq;
  node->ax_delta = delta;
  node->text = "(ax";
  for (const auto& f : delta) {
    node->text += ' ';
    node->text += f->text;
  }
  node->text += ')';
  return intern_node(std::move(node));
}

DerivPtr d_conj(const FormulaPtr& f, const DerivPtr& d0, const DerivPtr& d1) {
  if (f->kind != Formula::Kind::And)
    raise(ErrorKind::WellFormed, "conjunction introduction on " + f->text);
  check_formula(f, "conj");
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::ConjI;
  node->formula = f;
  node->children = {d0, d1};
  node->text = "(conj " + f->text + " " + d0->text + " " + d1->text + ")";
  return intern_node(std::move(node));
}

DerivPtr d_disj(uint32_t k, const FormulaPtr& f, const DerivPtr& d0) {
  if (f->kind != Formula::Kind::Or)
    raise(ErrorKind::WellFormed, "disjunction introduction on " + f->text);
  if (k > 1) raise(ErrorKind::Precondition, "disjunction branch must be 0 or 1");
  check_formula(f, "disj");
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::DisjI;
  node->formula = f;
  node->k = k;
  node->children = {d0};
  node->text = "(disj " + std::to_string(k) + " " + f->text + " " + d0->text + ")";
  return intern_node(std::move(node));
}

DerivPtr d_all(const std::string& y, const FormulaPtr& f, const DerivPtr& d0) {
  if (f->kind != Formula::Kind::All)
    raise(ErrorKind::WellFormed, "universal introduction on " + f->text);
  check_formula(f, "all-i");
  check_eigen(y, f, "all-i");
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::AllI;
  node->formula = f;
  node->y = y;
  node->children = {d0};
  node->text = "(all-i " + y + " " + f->text + " " + d0->text + ")";
  return intern_node(std::move(node));
}

DerivPtr d_ex(const TermPtr& t, const FormulaPtr& f, const DerivPtr& d0) {
  if (f->kind != Formula::Kind::Ex)
    raise(ErrorKind::WellFormed, "existential introduction on " + f->text);
  check_formula(f, "ex-i");
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::ExI;
  node->formula = f;
  node->t = t;
  node->children = {d0};
  node->text = "(ex-i " + t->text + " " + f->text + " " + d0->text + ")";
  return intern_node(std::move(node));
}

DerivPtr d_ind_t(const std::string& y, const TermPtr& t, const FormulaPtr& f,
                 const DerivPtr& d0) {
  check_formula(f, "ind-t");
  check_eigen(y, f, "ind-t");
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::IndT;
  node->formula = f;
  node->y = y;
  node->t = t;
  node->children = {d0};
  node->text = "(ind-t " + y + " " + t->text + " " + f->text + " " + d0->text + ")";
  return intern_node(std::move(node));
}

DerivPtr d_ind_n(const std::string& y, const Nat& n, uint64_t i, const FormulaPtr& f,
                 const DerivPtr& d0) {
  check_formula(f, "ind-n");
  check_eigen(y, f, "ind-n");
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::IndNI;
  node->formula = f;
  node->y = y;
  node->n = n;
  node->i = i;
  node->children = {d0};
  node->text = "(ind-n " + y + " " + to_string(n) + " " + std::to_string(i) + " " +
               f->text + " " + d0->text + ")";
  return intern_node(std::move(node));
}

DerivPtr d_cut(const FormulaPtr& c, const DerivPtr& d0, const DerivPtr& d1) {
  check_formula(c, "cut");
  auto node = std::make_shared<Deriv>();
  node->kind = DKind::CutI;
  node->formula = c;
  node->children = {d0, d1};
  node->text = "(cut " + c->text + " " + d0->text + " " + d1->text + ")";
  return intern_node(std::move(node));
}

namespace {

std::optional<std::string> var_deriv_rec(const DerivPtr& h,
                                         const std::vector<std::string>& xs);

}  // namespace

bool var_deriv(const DerivPtr& h, const std::vector<std::string>& xs) {
  return !var_deriv_diag(h, xs).has_value();
}

std::optional<std::string> var_deriv_diag(const DerivPtr& h,
                                          const std::vector<std::string>& xs) {
  auto sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return "declared variable list has a repeated name";
  return var_deriv_rec(h, xs);
}

namespace {

std::optional<std::string> var_deriv_rec(const DerivPtr& h,
                                         const std::vector<std::string>& xs) {
  switch (h->kind) {
    case DKind::AxSeq:
      if (!subset_of(h->ax_delta.fv(), xs))
        return "axiom clause mentions a variable outside {" + join(xs) + "}";
      return std::nullopt;
    case DKind::ConjI:
    case DKind::DisjI:
    case DKind::CutI:
      if (!subset_of(h->formula->fv, xs))
        return h->formula->text + " mentions a variable outside {" + join(xs) + "}";
      break;
    case DKind::ExI:
      if (!subset_of(h->formula->fv, xs))
        return h->formula->text + " mentions a variable outside {" + join(xs) + "}";
      if (!subset_of(h->t->fv, xs))
        return "witness " + h->t->text + " mentions a variable outside {" + join(xs) + "}";
      break;
    case DKind::AllI:
    case DKind::IndT:
    case DKind::IndNI: {
      if (std::find(xs.begin(), xs.end(), h->y) != xs.end())
        return "eigenvariable " + h->y + " reused inside its own scope";
      if (!subset_of(h->gamma.fv(), xs))
        return "conclusion " + h->gamma.text() + " leaks the eigenvariable " + h->y;
      auto ys = xs;
      ys.push_back(h->y);
      return var_deriv_rec(h->children[0], ys);
    }
  }
  for (const auto& c : h->children)
    if (auto diag = var_deriv_rec(c, xs)) return diag;
  return std::nullopt;
}

}  // namespace

uint32_t crk(const DerivPtr& h, uint32_t level) {
  static std::mutex m;
  static std::unordered_map<const Deriv*, std::vector<std::pair<uint32_t, uint32_t>>> memo;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find(h.get());
    if (it != memo.end())
      for (const auto& [lvl, val] : it->second)
        if (lvl == level) return val;
  }
  uint32_t own = 0;
  if (h->kind == DKind::CutI || h->kind == DKind::IndT || h->kind == DKind::IndNI)
    own = rank(level, h->formula) + 1;
  uint32_t r = own;
  for (const auto& c : h->children) r = std::max(r, crk(c, level));
  std::lock_guard<std::mutex> lock(m);
  memo[h.get()].emplace_back(level, r);
  return r;
}

DerivPtr substitute(const DerivPtr& h, const TermPtr& t, const std::string& y) {
  if (!t->closed()) raise(ErrorKind::OpenTerm, "substitution term " + t->text);
  if (!std::binary_search(h->fv.begin(), h->fv.end(), y)) return h;
  switch (h->kind) {
    case DKind::AxSeq:
      return d_ax(seq_subst(h->ax_delta, y, t));
    case DKind::ConjI:
      return d_conj(subst(h->formula, y, t), substitute(h->children[0], t, y),
                    substitute(h->children[1], t, y));
    case DKind::DisjI:
      return d_disj(h->k, subst(h->formula, y, t), substitute(h->children[0], t, y));
    case DKind::AllI:
      return d_all(h->y, subst(h->formula, y, t), substitute(h->children[0], t, y));
    case DKind::ExI:
      return d_ex(subst(h->t, y, t), subst(h->formula, y, t),
                  substitute(h->children[0], t, y));
    case DKind::IndT:
      return d_ind_t(h->y, subst(h->t, y, t), subst(h->formula, y, t),
                     substitute(h->children[0], t, y));
    case DKind::IndNI:
      return d_ind_n(h->y, h->n, h->i, subst(h->formula, y, t),
                     substitute(h->children[0], t, y));
    case DKind::CutI:
      return d_cut(subst(h->formula, y, t), substitute(h->children[0], t, y),
                   substitute(h->children[1], t, y));
  }
  raise(ErrorKind::Invariant, "bad node kind");
}

bool is_basic(const Sequent& delta, std::string* diag) {
  for (const auto& f : delta)
    if (!f->is_lit()) {
      if (diag) *diag = "clause element is not a literal: " + f->text;
      return false;
    }
  auto vars = delta.fv();
  if (vars.empty()) {
    Env env;
    for (const auto& f : delta)
      if (lit_true(f, env)) return true;
    if (diag) *diag = "closed clause is false: " + delta.text();
    return false;
  }
  std::mt19937_64 rng(limits().seed);
  const Nat pool[] = {0, 1, 2, 3, 5, 7, 8, 15, 16, 255, 256};
  const size_t npool = std::size(pool);
  for (size_t round = 0; round < 64; ++round) {
    Env env;
    size_t idx = 0;
    for (const auto& v : vars) {
      Nat val;
      if (round < npool) {
        val = pool[(round + 3 * idx) % npool];
      } else {
        uint32_t bits = rng() % 24 + 1;
        val = Nat(rng()) & pow2_minus1(bits);
      }
      env.emplace_back(v, val);
      ++idx;
    }
    bool any = false;
    for (const auto& f : delta)
      if (lit_true(f, env)) {
        any = true;
        break;
      }
    if (!any) {
      if (diag) {
        *diag = "clause falsified at";
        for (const auto& [v, val] : env) *diag += " " + v + "=" + to_string(val);
      }
      return false;
    }
  }
  return true;
}

void require_basic(const Sequent& delta) {
  std::string diag;
  if (!is_basic(delta, &diag)) raise(ErrorKind::NotBasic, diag);
}

}  // namespace ba
