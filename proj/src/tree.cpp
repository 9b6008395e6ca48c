#include "ba/tree.hpp"

#include <algorithm>

#include "ba/error.hpp"
#include "ba/formula.hpp"
#include "ba/limits.hpp"

namespace ba {

namespace {

constexpr uint64_t kNodeCap = uint64_t(1) << 22;

Sequent node_gamma(const InfSymbol& sym, const std::vector<TreePtr>& children) {
  Sequent out = sym.delta();
  for (size_t i = 0; i < children.size(); ++i)
    out = seq_union(out, seq_minus(children[i]->gamma, sym.delta_at(Nat(i))));
  return out;
}

}  // namespace

TreePtr t_node(const InfSymbol& sym, std::vector<TreePtr> children) {
  auto node = std::make_shared<Tree>();
  node->sym = sym;
  node->children = std::move(children);
  uint64_t count = 1;
  uint64_t h = 0;
  for (const auto& c : node->children) {
    count += c->node_count;
    h = std::max(h, c->hgt + 1);
  }
  if (count > kNodeCap)
    raise(ErrorKind::ResourceCap, "tree grew past " + std::to_string(kNodeCap) +
                                      " nodes");
  node->node_count = count;
  node->hgt = h;
  node->gamma = node_gamma(sym, node->children);
  return node;
}

TreePtr t_trunc() {
  static TreePtr t = [] {
    auto node = std::make_shared<Tree>();
    node->sym = sym_rep();
    node->truncated = true;
    return node;
  }();
  return t;
}

uint32_t crk(const TreePtr& t, uint32_t level) {
  if (t->truncated) return 0;
  uint32_t r = t->sym.rk(level);
  for (const auto& c : t->children) r = std::max(r, crk(c, level));
  return r;
}

bool sym_equiv(const InfSymbol& a, const InfSymbol& b) {
  if (a.kind != b.kind || a.index != b.index) return false;
  if (!a.formula && !b.formula) return true;
  if (!a.formula || !b.formula) return false;
  return ieq(a.formula, b.formula);
}

TreePtr denote(const NotationPtr& h, uint32_t width, uint32_t depth) {
  if (depth == 0) return t_trunc();
  InfSymbol sym = tp(h);
  if (sym.kind == SymKind::Disj && sym.index >= width)
    raise(ErrorKind::WidthExceeded,
          "disjunction index " + to_string(sym.index) +
              " does not fit the declared width " + std::to_string(width));
  size_t n = sym.omega() ? width : sym.finite_arity();
  std::vector<TreePtr> children;
  children.reserve(n);
  for (size_t j = 0; j < n; ++j)
    children.push_back(denote(child(h, Nat(j)), width, depth - 1));
  return t_node(sym, std::move(children));
}

TreePtr eager_i(const Nat& k, const FormulaPtr& c, const TreePtr& d) {
  if (tp(c) != Tp::BigAnd)
    raise(ErrorKind::Precondition, "projection needs a conjunctive formula: " + c->text);
  if (d->truncated) return d;
  if (d->sym.kind == SymKind::Conj && ieq(d->sym.formula, c)) {
    if (k >= d->children.size())
      raise(ErrorKind::WidthExceeded,
            "projection slot " + to_string(k) + " was cut off at width " +
                std::to_string(d->children.size()));
    return t_node(sym_rep(), {eager_i(k, c, d->children[k.convert_to<size_t>()])});
  }
  std::vector<TreePtr> children;
  children.reserve(d->children.size());
  for (const auto& ch : d->children) children.push_back(eager_i(k, c, ch));
  return t_node(d->sym, std::move(children));
}

TreePtr eager_r(const FormulaPtr& c, const TreePtr& d0, const TreePtr& d1,
                uint32_t level) {
  if (!tp_conjunctive(tp(c)))
    raise(ErrorKind::Precondition, "reduction needs a conjunctive cut formula: " + c->text);
  if (d1->truncated) return d1;
  auto not_c = negate(c);
  if (!d1->sym.delta().contains(not_c)) {
    std::vector<TreePtr> children;
    children.reserve(d1->children.size());
    for (const auto& ch : d1->children)
      children.push_back(eager_r(c, d0, ch, level));
    return t_node(d1->sym, std::move(children));
  }
  if (d1->sym.kind != SymKind::Disj || !ieq(d1->sym.formula, not_c))
    raise(ErrorKind::Invariant,
          "reduction met an impossible premise symbol: " + d1->sym.text());
  const Nat& k = d1->sym.index;
  auto ck = sub(c, k);
  uint32_t rc = rank(level, c);
  uint32_t rck = rank(level, ck);
  if (rc == 0 ? rck > 0 : rck >= rc)
    raise(ErrorKind::RankViolation, "cut on " + ck->text + " has rank " +
                                        std::to_string(rck) +
                                        " but came from rank " +
                                        std::to_string(rc));
  auto shape = canonical_cut(ck);
  auto left = eager_i(k, c, d0);
  auto right = eager_r(c, d0, d1->children[0], level);
  std::vector<TreePtr> children =
      shape.swapped ? std::vector<TreePtr>{right, left}
                    : std::vector<TreePtr>{left, right};
  return t_node(shape.sym, std::move(children));
}

TreePtr eager_e(const TreePtr& d, uint32_t level) {
  if (d->truncated) return d;
  if (d->sym.kind == SymKind::Cut) {
    const auto& c = d->sym.formula;
    if (!tp_conjunctive(tp(c)))
      raise(ErrorKind::Invariant, "cut symbol lost its polarity: " + d->sym.text());
    auto r = eager_r(c, eager_e(d->children[0], level),
                     eager_e(d->children[1], level), level);
    return t_node(sym_rep(), {r});
  }
  std::vector<TreePtr> children;
  children.reserve(d->children.size());
  for (const auto& ch : d->children) children.push_back(eager_e(ch, level));
  return t_node(d->sym, std::move(children));
}

bool check_judgment(const TreePtr& d, uint64_t alpha, uint32_t level, uint32_t m,
                    const Sequent& gamma) {
  if (d->hgt > alpha) return false;
  if (crk(d, level) > m) return false;
  auto in_gamma = seq_closure(gamma);
  for (const auto& f : d->gamma)
    if (!in_gamma(f)) return false;
  return true;
}

TreePtr subtree(const TreePtr& t, const std::vector<Nat>& path) {
  TreePtr cur = t;
  for (const auto& j : path) {
    if (cur->truncated) return cur;
    if (j >= cur->children.size())
      raise(ErrorKind::Precondition, "path leaves the tree at slot " + to_string(j));
    cur = cur->children[j.convert_to<size_t>()];
  }
  return cur;
}

namespace {

void dump_text_rec(const TreePtr& t, std::string& out, uint32_t indent) {
  out.append(indent * 2, ' ');
  if (t->truncated) {
    out += "...\n";
    return;
  }
  out += t->sym.text();
  out += '\n';
  for (const auto& c : t->children) dump_text_rec(c, out, indent + 1);
}

}  // namespace

std::string tree_dump_text(const TreePtr& t) {
  std::string out;
  dump_text_rec(t, out, 0);
  return out;
}

nlohmann::json tree_dump_json(const TreePtr& t) {
  nlohmann::json j;
  if (t->truncated) {
    j["truncated"] = true;
    return j;
  }
  j["sym"] = t->sym.text();
  auto arr = nlohmann::json::array();
  for (const auto& c : t->children) arr.push_back(tree_dump_json(c));
  j["children"] = std::move(arr);
  return j;
}

}  // namespace ba
