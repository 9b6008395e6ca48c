#include "ba/notation.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "ba/limits.hpp"

namespace ba {

namespace {

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::string, NotationPtr>& intern_table() {
  static std::unordered_map<std::string, NotationPtr> t;
  return t;
}

std::unordered_map<std::string, AbstractPtr>& abs_table() {
  static std::unordered_map<std::string, AbstractPtr> t;
  return t;
}

NotationPtr intern_notation(std::shared_ptr<Notation> node) {
  std::lock_guard<std::mutex> lock(intern_mutex());
  auto [it, inserted] = intern_table().emplace(node->text, node);
  return it->second;
}

AbstractPtr intern_abstract(std::shared_ptr<Abstract> node) {
  std::lock_guard<std::mutex> lock(intern_mutex());
  auto [it, inserted] = abs_table().emplace(node->text, node);
  return it->second;
}

NotationPtr trivial_base() {
  static NotationPtr b = [] {
    auto z = num(0);
    return n_base(d_ax(Sequent{lit(true, Rel::Eq, z, z)}));
  }();
  return b;
}

void check_formula(const FormulaPtr& f, const char* where) {
  if (auto diag = well_formed_diag(f))
    raise(ErrorKind::WellFormed, std::string(where) + ": " + *diag);
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

template <class V>
std::unordered_map<const Notation*, V>& table() {
  static std::unordered_map<const Notation*, V> t;
  return t;
}

template <class V>
std::optional<V> memo_get(const Notation* h) {
  std::lock_guard<std::mutex> lock(memo_mutex());
  auto& t = table<std::pair<bool, V>>();
  auto it = t.find(h);
  if (it != t.end() && it->second.first) return it->second.second;
  return std::nullopt;
}

template <class V>
V memo_put(const Notation* h, V v) {
  std::lock_guard<std::mutex> lock(memo_mutex());
  table<std::pair<bool, V>>()[h] = {true, v};
  return v;
}

}  // namespace

NotationPtr n_base(const DerivPtr& d) {
  if (!d->closed())
    raise(ErrorKind::Precondition, "base notation needs a closed derivation: " + d->text);
  if (auto diag = var_deriv_diag(d, {}))
    raise(ErrorKind::WellFormed, "base notation: " + *diag);
  {
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto it = intern_table().find(d->text);
    if (it != intern_table().end()) return it->second;
  }
  auto node = std::make_shared<Notation>();
  node->kind = NKind::Base;
  node->base = d;
  node->text = d->text;
  node->gamma = d->gamma;
  node->sz = d->sz;
  return intern_notation(std::move(node));
}

NotationPtr n_i(const Nat& k, const FormulaPtr& c, const NotationPtr& body) {
  check_formula(c, "I");
  if (tp(c) != Tp::BigAnd)
    raise(ErrorKind::Precondition, "I needs a conjunctive formula: " + c->text);
  auto node = std::make_shared<Notation>();
  node->kind = NKind::IOp;
  node->formula = c;
  node->k = k;
  node->left = body;
  node->text = "(I " + to_string(k) + " " + c->text + " " + body->text + ")";
  {
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto it = intern_table().find(node->text);
    if (it != intern_table().end()) return it->second;
  }
  node->gamma = seq_union(Sequent{sub(c, k)}, seq_minus(body->gamma, Sequent{c}));
  node->sz = body->sz + 1;
  return intern_notation(std::move(node));
}

NotationPtr n_r(const FormulaPtr& c, const NotationPtr& l, const NotationPtr& r) {
  check_formula(c, "R");
  if (!tp_conjunctive(tp(c)))
    raise(ErrorKind::Precondition, "R needs a conjunctive cut formula: " + c->text);
  auto node = std::make_shared<Notation>();
  node->kind = NKind::ROp;
  node->formula = c;
  node->left = l;
  node->right = r;
  node->text = "(R " + c->text + " " + l->text + " " + r->text + ")";
  {
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto it = intern_table().find(node->text);
    if (it != intern_table().end()) return it->second;
  }
  node->gamma = seq_union(seq_minus(l->gamma, Sequent{c}),
                          seq_minus(r->gamma, Sequent{negate(c)}));
  node->sz = l->sz + r->sz + 1;
  return intern_notation(std::move(node));
}

NotationPtr n_e(const NotationPtr& body) {
  auto node = std::make_shared<Notation>();
  node->kind = NKind::EOp;
  node->left = body;
  node->text = "(E " + body->text + ")";
  {
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto it = intern_table().find(node->text);
    if (it != intern_table().end()) return it->second;
  }
  node->gamma = body->gamma;
  node->sz = body->sz + 1;
  return intern_notation(std::move(node));
}

InfSymbol tp(const NotationPtr& h) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& t = table<std::pair<bool, InfSymbol>>();
    auto it = t.find(h.get());
    if (it != t.end() && it->second.first) return it->second.second;
  }
  InfSymbol sym;
  switch (h->kind) {
    case NKind::Base:
      sym = tp(h->base);
      break;
    case NKind::IOp: {
      InfSymbol inner = tp(h->left);
      if (inner.kind == SymKind::Conj && ieq(inner.formula, h->formula))
        sym = sym_rep();
      else
        sym = inner;
      break;
    }
    case NKind::ROp: {
      InfSymbol inner = tp(h->right);
      auto not_c = negate(h->formula);
      if (!inner.delta().contains(not_c)) {
        sym = inner;
      } else {
        if (inner.kind != SymKind::Disj || !ieq(inner.formula, not_c))
          raise(ErrorKind::Invariant,
                "reduction met an impossible premise symbol: " + inner.text());
        sym = canonical_cut(sub(h->formula, inner.index)).sym;
      }
      break;
    }
    case NKind::EOp: {
      InfSymbol inner = tp(h->left);
      if (inner.kind == SymKind::Cut) {
        if (!tp_conjunctive(tp(inner.formula)))
          raise(ErrorKind::Invariant, "cut symbol lost its polarity: " + inner.text());
        sym = sym_rep();
      } else {
        sym = inner;
      }
      break;
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  table<std::pair<bool, InfSymbol>>()[h.get()] = {true, sym};
  return sym;
}

NotationPtr child(const NotationPtr& h, const Nat& j) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& t = table<std::vector<std::pair<Nat, NotationPtr>>>();
    auto it = t.find(h.get());
    if (it != t.end())
      for (const auto& [jj, val] : it->second)
        if (jj == j) return val;
  }
  InfSymbol sym = tp(h);
  NotationPtr out;
  if (!sym.omega() && j >= sym.finite_arity()) {
    out = trivial_base();
  } else {
    switch (h->kind) {
      case NKind::Base:
        out = n_base(child(h->base, j));
        break;
      case NKind::IOp: {
        InfSymbol inner = tp(h->left);
        bool hit = inner.kind == SymKind::Conj && ieq(inner.formula, h->formula);
        out = n_i(h->k, h->formula, child(h->left, hit ? h->k : j));
        break;
      }
      case NKind::ROp: {
        InfSymbol inner = tp(h->right);
        auto not_c = negate(h->formula);
        if (!inner.delta().contains(not_c)) {
          out = n_r(h->formula, h->left, child(h->right, j));
        } else {
          auto shape = canonical_cut(sub(h->formula, inner.index));
          bool first = (j == 0) != shape.swapped;
          out = first ? n_i(inner.index, h->formula, h->left)
                      : n_r(h->formula, h->left, child(h->right, 0));
        }
        break;
      }
      case NKind::EOp: {
        InfSymbol inner = tp(h->left);
        if (inner.kind == SymKind::Cut)
          out = n_r(inner.formula, n_e(child(h->left, 0)), n_e(child(h->left, 1)));
        else
          out = n_e(child(h->left, j));
        break;
      }
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  table<std::vector<std::pair<Nat, NotationPtr>>>()[h.get()].emplace_back(j, out);
  return out;
}

Nat rng(const NotationPtr& h) { return tp(h).rng(); }

uint32_t crk(const NotationPtr& h, uint32_t level) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& t = table<std::vector<std::pair<uint32_t, uint32_t>>>();
    auto it = t.find(h.get());
    if (it != t.end())
      for (const auto& [lvl, val] : it->second)
        if (lvl == level) return val;
  }
  uint32_t r = 0;
  switch (h->kind) {
    case NKind::Base:
      r = crk(h->base, level);
      break;
    case NKind::IOp:
      r = crk(h->left, level);
      break;
    case NKind::ROp:
      r = std::max(crk(h->left, level), crk(h->right, level));
      break;
    case NKind::EOp: {
      uint32_t b = crk(h->left, level);
      r = b == 0 ? 0 : b - 1;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  table<std::vector<std::pair<uint32_t, uint32_t>>>()[h.get()].emplace_back(level, r);
  return r;
}

Nat ord(const NotationPtr& h) {
  if (auto v = memo_get<Nat>(h.get())) return *v;
  Nat r;
  switch (h->kind) {
    case NKind::Base:
      r = ord(h->base);
      break;
    case NKind::IOp:
      r = ord(h->left);
      break;
    case NKind::ROp:
      r = ord(h->left) + ord(h->right);
      break;
    case NKind::EOp:
      r = pow2_minus1(ord(h->left));
      break;
  }
  return memo_put<Nat>(h.get(), r);
}

namespace {
struct BdTag {
  Nat v;
};
struct IbdTag {
  Nat v;
};
struct DecoTag {
  Sequent v;
};
struct CompTag {
  bool v;
};
}  // namespace

Nat bd(const NotationPtr& h) {
  if (auto v = memo_get<BdTag>(h.get())) return v->v;
  Nat r = 0;
  switch (h->kind) {
    case NKind::Base:
      r = bd(h->base);
      break;
    case NKind::IOp:
      r = h->k < rng(h->formula) ? bd(h->left) : Nat(0);
      break;
    case NKind::ROp:
      r = std::max(bd(h->left), bd(h->right));
      break;
    case NKind::EOp:
      r = bd(h->left);
      break;
  }
  return memo_put<BdTag>(h.get(), BdTag{r}).v;
}

Nat ibd(const NotationPtr& h) {
  if (auto v = memo_get<IbdTag>(h.get())) return v->v;
  Nat r = 0;
  switch (h->kind) {
    case NKind::Base:
      r = ibd(h->base);
      break;
    case NKind::IOp:
      r = ibd(h->left);
      break;
    case NKind::ROp:
      r = std::max(ibd(h->left), ibd(h->right));
      break;
    case NKind::EOp:
      r = ibd(h->left);
      break;
  }
  return memo_put<IbdTag>(h.get(), IbdTag{r}).v;
}

Sequent deco(const NotationPtr& h) {
  if (auto v = memo_get<DecoTag>(h.get())) return v->v;
  Sequent r;
  switch (h->kind) {
    case NKind::Base:
      r = h->base->deco;
      break;
    case NKind::IOp:
      r = seq_union(Sequent{sub(h->formula, h->k)}, deco(h->left));
      break;
    case NKind::ROp:
      r = seq_union(deco(h->left), deco(h->right));
      break;
    case NKind::EOp:
      r = deco(h->left);
      break;
  }
  return memo_put<DecoTag>(h.get(), DecoTag{r}).v;
}

namespace {
struct BaseSzTag {
  uint64_t v;
};
}  // namespace

uint64_t max_base_sz(const NotationPtr& h) {
  if (auto v = memo_get<BaseSzTag>(h.get())) return v->v;
  uint64_t r = 0;
  switch (h->kind) {
    case NKind::Base:
      r = h->base->sz;
      break;
    case NKind::IOp:
    case NKind::EOp:
      r = max_base_sz(h->left);
      break;
    case NKind::ROp:
      r = std::max(max_base_sz(h->left), max_base_sz(h->right));
      break;
  }
  return memo_put<BaseSzTag>(h.get(), BaseSzTag{r}).v;
}

bool is_comp(const NotationPtr& h) {
  if (auto v = memo_get<CompTag>(h.get())) return v->v;
  bool r = true;
  switch (h->kind) {
    case NKind::Base:
      r = true;
      break;
    case NKind::IOp:
      r = h->k < rng(h->formula) && is_comp(h->left);
      break;
    case NKind::ROp:
      r = is_comp(h->left) && is_comp(h->right);
      break;
    case NKind::EOp:
      r = is_comp(h->left);
      break;
  }
  return memo_put<CompTag>(h.get(), CompTag{r}).v;
}

ExploreResult explore(const NotationPtr& h, const std::vector<Nat>& path) {
  ExploreResult res;
  res.final = h;
  res.sizes.push_back(h->sz);
  for (const auto& j : path) {
    res.final = child(res.final, j);
    res.sizes.push_back(res.final->sz);
  }
  res.tp = tp(res.final);
  return res;
}

std::vector<NotationPtr> reachable(const NotationPtr& h, uint32_t depth,
                                   uint32_t width) {
  std::vector<NotationPtr> out;
  std::unordered_set<const Notation*> seen;
  std::deque<std::pair<NotationPtr, uint32_t>> queue;
  queue.emplace_back(h, 0);
  seen.insert(h.get());
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    out.push_back(cur);
    if (out.size() > (1u << 20))
      raise(ErrorKind::ResourceCap, "reachable set exceeds a million notations");
    if (d == depth) continue;
    Nat w = rng(cur);
    if (w > width)
      raise(ErrorKind::WidthExceeded, "branching " + to_string(w) +
                                          " exceeds the probe width " +
                                          std::to_string(width));
    for (uint32_t j = 0; Nat(j) < w; ++j) {
      auto c = child(cur, j);
      if (seen.insert(c.get()).second) queue.emplace_back(c, d + 1);
    }
  }
  return out;
}

AbstractPtr a_base(uint64_t sz, const Nat& oo) {
  auto node = std::make_shared<Abstract>();
  node->kind = NKind::Base;
  node->base_sz = sz;
  node->base_oo = oo;
  node->text = "(B " + std::to_string(sz) + " " + to_string(oo) + ")";
  node->sz = sz;
  node->oo = oo;
  return intern_abstract(std::move(node));
}

AbstractPtr a_i(const AbstractPtr& body) {
  auto node = std::make_shared<Abstract>();
  node->kind = NKind::IOp;
  node->left = body;
  node->text = "(I " + body->text + ")";
  node->sz = body->sz + 1;
  node->oo = body->oo;
  return intern_abstract(std::move(node));
}

AbstractPtr a_r(const AbstractPtr& l, const AbstractPtr& r) {
  auto node = std::make_shared<Abstract>();
  node->kind = NKind::ROp;
  node->left = l;
  node->right = r;
  node->text = "(R " + l->text + " " + r->text + ")";
  node->sz = l->sz + r->sz + 1;
  node->oo = l->oo + r->oo;
  return intern_abstract(std::move(node));
}

AbstractPtr a_e(const AbstractPtr& body) {
  auto node = std::make_shared<Abstract>();
  node->kind = NKind::EOp;
  node->left = body;
  node->text = "(E " + body->text + ")";
  node->sz = body->sz + 1;
  node->oo = pow2_minus1(body->oo);
  return intern_abstract(std::move(node));
}

AbstractPtr abstract(const NotationPtr& h) {
  switch (h->kind) {
    case NKind::Base:
      return a_base(h->base->sz, ord(h->base));
    case NKind::IOp:
      return a_i(abstract(h->left));
    case NKind::ROp:
      return a_r(abstract(h->left), abstract(h->right));
    case NKind::EOp:
      return a_e(abstract(h->left));
  }
  raise(ErrorKind::Invariant, "bad notation kind");
}

Nat szf(const AbstractPtr& d, const Nat& s) {
  if (s < 1) raise(ErrorKind::Precondition, "size parameter must be positive");
  switch (d->kind) {
    case NKind::Base:
      return s;
    case NKind::IOp:
      return szf(d->left, s) + 1;
    case NKind::ROp:
      return std::max(Nat(d->left->sz + 1) + szf(d->right, s), szf(d->left, s) + 1);
    case NKind::EOp:
      return d->left->oo * (szf(d->left, s) + 2);
  }
  raise(ErrorKind::Invariant, "bad notation kind");
}

Nat szf_k(const AbstractPtr& d, const Nat& s, const Nat& k) {
  if (s < 1) raise(ErrorKind::Precondition, "size parameter must be positive");
  switch (d->kind) {
    case NKind::Base:
      return s;
    case NKind::IOp:
      return szf_k(d->left, s, k) + 1;
    case NKind::ROp:
      return std::max(Nat(d->left->sz + 1) + szf_k(d->right, s, k),
                      szf_k(d->left, s, k) + 1);
    case NKind::EOp:
      return (k + 1) * (szf_k(d->left, s, k) + 2);
  }
  raise(ErrorKind::Invariant, "bad notation kind");
}

Nat szf(const NotationPtr& h, const Nat& s) { return szf(abstract(h), s); }

Nat szf_k(const NotationPtr& h, const Nat& s, const Nat& k) {
  return szf_k(abstract(h), s, k);
}

namespace {

using Bindings = std::vector<std::pair<std::string, TermPtr>>;

const TermPtr* bound_to(const Bindings& b, const std::string& name) {
  for (const auto& [n, t] : b)
    if (n == name) return &t;
  return nullptr;
}

enum class Match : uint8_t { Yes, No, Hard };

Match match_term(const TermPtr& p, const TermPtr& q, Bindings& b, const Nat& K) {
  if (p->is_var()) {
    TermPtr want;
    if (q->is_var() && q->var_name == p->var_name)
      want = q;
    else if (q->is_num() && q->value <= K)
      want = q;
    else
      return Match::No;
    if (const TermPtr* prev = bound_to(b, p->var_name))
      return *prev == want ? Match::Yes : Match::No;
    b.emplace_back(p->var_name, want);
    return Match::Yes;
  }
  if (p->is_num()) return p == q ? Match::Yes : Match::No;
  // p is an application
  if (q->kind == Term::Kind::App && q->fn == p->fn) {
    for (size_t i = 0; i < p->args.size(); ++i) {
      Match m = match_term(p->args[i], q->args[i], b, K);
      if (m != Match::Yes) return m;
    }
    return Match::Yes;
  }
  if (q->is_num()) return Match::Hard;  // instance collapsed under evaluation
  return Match::No;
}

Match match_formula(const FormulaPtr& p, const FormulaPtr& q, Bindings& b,
                    const Nat& K) {
  if (p->kind != q->kind) return Match::No;
  switch (p->kind) {
    case Formula::Kind::Lit: {
      if (p->positive != q->positive || p->rel != q->rel) return Match::No;
      Match m = match_term(p->lhs, q->lhs, b, K);
      if (m != Match::Yes) return m;
      return match_term(p->rhs, q->rhs, b, K);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Match m = match_formula(p->left, q->left, b, K);
      if (m != Match::Yes) return m;
      return match_formula(p->right, q->right, b, K);
    }
    case Formula::Kind::All:
    case Formula::Kind::Ex: {
      if (p->bound_var != q->bound_var) return Match::No;
      return match_formula(p->body, q->body, b, K);
    }
  }
  return Match::No;
}

// Candidate values for the brute-force fallback, derived from the numerals
// of the instance plus a small dense prefix.
std::vector<Nat> candidate_values(const FormulaPtr& q, const Nat& K) {
  std::vector<Nat> out;
  auto push = [&](const Nat& v) {
    if (v <= K && std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  };
  for (Nat small = 0; small <= std::min(K, Nat(64)); ++small) push(small);
  std::vector<TermPtr> stack;
  std::vector<FormulaPtr> fstack = {q};
  while (!fstack.empty()) {
    auto f = fstack.back();
    fstack.pop_back();
    switch (f->kind) {
      case Formula::Kind::Lit:
        stack.push_back(f->lhs);
        stack.push_back(f->rhs);
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        fstack.push_back(f->left);
        fstack.push_back(f->right);
        break;
      case Formula::Kind::All:
      case Formula::Kind::Ex:
        fstack.push_back(f->body);
        break;
    }
  }
  while (!stack.empty()) {
    auto t = stack.back();
    stack.pop_back();
    if (t->is_num()) {
      const Nat& v = t->value;
      push(v);
      if (v > 0) push(v - 1);
      push(v + 1);
      push(v / 2);
      push(Nat(bit_length(v)));
      uint64_t bits = bit_length(v);
      if (bits > 0 && bits <= limits().tower_bits) {
        push(pow2(bits));
        push(pow2(bits) - 1);
        if (bits >= 2) push(pow2(bits - 1));
      }
    } else if (t->kind == Term::Kind::App) {
      for (const auto& a : t->args) stack.push_back(a);
    }
  }
  return out;
}

bool brute_match(const FormulaPtr& p, const FormulaPtr& q, const Nat& K) {
  if (p->fv.size() > 3) return false;
  auto cands = candidate_values(q, K);
  std::vector<size_t> pick(p->fv.size(), 0);
  // each variable: index 0 keeps it, 1..n map to cands[i-1]
  const size_t options = cands.size() + 1;
  while (true) {
    FormulaPtr inst = p;
    for (size_t v = 0; v < p->fv.size(); ++v)
      if (pick[v] > 0) inst = subst(inst, p->fv[v], num(cands[pick[v] - 1]));
    if (ieq(inst, q)) return true;
    size_t v = 0;
    for (; v < pick.size(); ++v) {
      if (++pick[v] < options) break;
      pick[v] = 0;
    }
    if (v == pick.size()) return false;
  }
}

}  // namespace

Sequent phi_k_set(const Sequent& phi, const Nat& K) {
  Sequent out;
  for (const auto& f : phi) {
    size_t nvars = f->fv.size();
    Nat count = 1;
    for (size_t v = 0; v < nvars; ++v) count *= K + 2;
    if (count > 4096)
      raise(ErrorKind::ResourceCap,
            "instance set of " + f->text + " has " + to_string(count) + " elements");
    std::vector<Nat> pick(nvars, 0);
    while (true) {
      FormulaPtr inst = f;
      for (size_t v = 0; v < nvars; ++v)
        if (pick[v] > 0) inst = subst(inst, f->fv[v], num(pick[v] - 1));
      out.add(inst);
      size_t v = 0;
      for (; v < nvars; ++v) {
        if (++pick[v] <= K + 1) break;
        pick[v] = 0;
      }
      if (v == nvars) break;
    }
  }
  return out;
}

bool in_phi_k(const FormulaPtr& f, const Sequent& phi, const Nat& K) {
  auto nf = normalize(f);
  for (const auto& p : phi) {
    auto np = normalize(p);
    Bindings b;
    Match m = match_formula(np, nf, b, K);
    if (m == Match::Yes) return true;
    if (m == Match::Hard && brute_match(np, nf, K)) return true;
  }
  return false;
}

bool deco_within(const NotationPtr& h, const Sequent& phi, const Nat& K) {
  for (const auto& f : deco(h))
    if (!in_phi_k(f, phi, K)) return false;
  return true;
}

}  // namespace ba
