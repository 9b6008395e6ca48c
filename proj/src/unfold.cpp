#include "ba/unfold.hpp"

#include <mutex>
#include <unordered_map>

#include "ba/limits.hpp"

namespace ba {

namespace {

void need_closed(const DerivPtr& h, const char* what) {
  if (!h->closed())
    raise(ErrorKind::Precondition,
          std::string(what) + " needs a closed derivation: " + h->text);
}

DerivPtr trivial_axiom() {
  static DerivPtr ax = [] {
    auto z = num(0);
    return d_ax(Sequent{lit(true, Rel::Eq, z, z)});
  }();
  return ax;
}

// The midpoint split of an induction slice: ind(y,n,i+1) cuts on F at n+2^i.
struct Slice {
  Nat mid;
  FormulaPtr cut_formula;
};

Slice slice_of(const DerivPtr& h) {
  Nat mid = h->n + pow2(h->i - 1);
  return Slice{mid, subst(h->formula, h->y, num(mid))};
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

template <class V>
std::unordered_map<const Deriv*, V>& table() {
  static std::unordered_map<const Deriv*, V> t;
  return t;
}

}  // namespace

InfSymbol tp(const DerivPtr& h) {
  need_closed(h, "tp");
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& t = table<InfSymbol>();
    auto it = t.find(h.get());
    if (it != t.end()) return it->second;
  }
  InfSymbol sym;
  switch (h->kind) {
    case DKind::AxSeq: {
      const FormulaPtr* found = nullptr;
      for (const auto& f : h->ax_delta)
        if (truth(f)) {
          found = &f;
          break;
        }
      if (!found)
        raise(ErrorKind::NoTrueLiteral, "no true literal in " + h->ax_delta.text());
      sym = sym_ax(*found);
      break;
    }
    case DKind::ConjI:
    case DKind::AllI:
      sym = sym_and(h->formula);
      break;
    case DKind::DisjI:
      sym = sym_or(h->k, h->formula);
      break;
    case DKind::ExI:
      sym = sym_or(eval(h->t), h->formula);
      break;
    case DKind::IndT:
      sym = sym_rep();
      break;
    case DKind::IndNI:
      sym = h->i == 0 ? sym_rep() : canonical_cut(slice_of(h).cut_formula).sym;
      break;
    case DKind::CutI:
      sym = canonical_cut(h->formula).sym;
      break;
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  table<InfSymbol>().emplace(h.get(), sym);
  return sym;
}

DerivPtr child(const DerivPtr& h, const Nat& j) {
  need_closed(h, "child");
  switch (h->kind) {
    case DKind::AxSeq:
      return trivial_axiom();
    case DKind::ConjI:
      return h->children[j == 0 ? 0 : 1];
    case DKind::AllI:
      return substitute(h->children[0], num(j), h->y);
    case DKind::DisjI:
    case DKind::ExI:
      return j == 0 ? h->children[0] : trivial_axiom();
    case DKind::IndT:
      if (j != 0) return trivial_axiom();
      return d_ind_n(h->y, 0, bit_length(eval(h->t)), h->formula, h->children[0]);
    case DKind::IndNI: {
      if (h->i == 0)
        return j == 0 ? substitute(h->children[0], num(h->n), h->y) : trivial_axiom();
      if (j >= 2) return trivial_axiom();
      auto s = slice_of(h);
      bool swapped = canonical_cut(s.cut_formula).swapped;
      bool low = (j == 0) != swapped;
      return low ? d_ind_n(h->y, h->n, h->i - 1, h->formula, h->children[0])
                 : d_ind_n(h->y, s.mid, h->i - 1, h->formula, h->children[0]);
    }
    case DKind::CutI: {
      if (j >= 2) return trivial_axiom();
      bool swapped = canonical_cut(h->formula).swapped;
      uint32_t idx = static_cast<uint32_t>(j);
      return h->children[swapped ? 1 - idx : idx];
    }
  }
  raise(ErrorKind::Invariant, "bad node kind");
}

Nat rng(const DerivPtr& h) { return tp(h).rng(); }

Nat ord_m(const DerivPtr& h, uint64_t m) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& t = table<std::vector<std::pair<uint64_t, Nat>>>();
    auto it = t.find(h.get());
    if (it != t.end())
      for (const auto& [mm, val] : it->second)
        if (mm == m) return val;
  }
  Nat r;
  switch (h->kind) {
    case DKind::IndT:
      r = ord_m(h->children[0], m) + m + 1;
      break;
    case DKind::IndNI:
      r = ord_m(h->children[0], m) + h->i + 1;
      break;
    default: {
      Nat sup = 0;
      for (const auto& c : h->children) sup = std::max(sup, ord_m(c, m));
      r = sup + 1;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  table<std::vector<std::pair<uint64_t, Nat>>>()[h.get()].emplace_back(m, r);
  return r;
}

Nat bd(const DerivPtr& h) {
  need_closed(h, "bd");
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& t = table<std::pair<bool, Nat>>();
    auto it = t.find(h.get());
    if (it != t.end() && it->second.first) return it->second.second;
  }
  Nat r = 0;
  switch (h->kind) {
    case DKind::AllI: {
      Nat tv = eval(*quant_bound(h->formula));
      r = std::max(bd(substitute(h->children[0], num(tv), h->y)), tv);
      break;
    }
    case DKind::ExI:
      r = std::max(bd(h->children[0]), eval(h->t));
      break;
    case DKind::IndT: {
      Nat top = pow2(bit_length(eval(h->t)));
      r = std::max(bd(substitute(h->children[0], num(top), h->y)), top);
      break;
    }
    case DKind::IndNI: {
      Nat top = h->n + pow2(h->i);
      r = std::max(bd(substitute(h->children[0], num(top), h->y)), top);
      break;
    }
    default:
      for (const auto& c : h->children) r = std::max(r, bd(c));
      break;
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  auto& slot = table<std::pair<bool, Nat>>()[h.get()];
  slot = {true, r};
  return r;
}

namespace {
struct IbdTag {
  bool set = false;
  Nat val;
};
}  // namespace

Nat ibd(const DerivPtr& h) {
  need_closed(h, "ibd");
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto& t = table<IbdTag>();
    auto it = t.find(h.get());
    if (it != t.end() && it->second.set) return it->second.val;
  }
  Nat r = 0;
  switch (h->kind) {
    case DKind::AllI: {
      Nat tv = eval(*quant_bound(h->formula));
      r = ibd(substitute(h->children[0], num(tv), h->y));
      break;
    }
    case DKind::IndT: {
      Nat top = pow2(bit_length(eval(h->t)));
      r = std::max(ibd(substitute(h->children[0], num(top), h->y)), top);
      break;
    }
    case DKind::IndNI: {
      Nat top = h->n + pow2(h->i);
      r = std::max(ibd(substitute(h->children[0], num(top), h->y)), pow2(h->i));
      break;
    }
    default:
      for (const auto& c : h->children) r = std::max(r, ibd(c));
      break;
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  table<IbdTag>()[h.get()] = IbdTag{true, r};
  return r;
}

Nat ord(const DerivPtr& h) { return ord_m(h, bit_length(ibd(h))); }

Nat ord_capped(const DerivPtr& h, uint64_t m) {
  return ord_m(h, std::min(bit_length(ibd(h)), m));
}

}  // namespace ba
