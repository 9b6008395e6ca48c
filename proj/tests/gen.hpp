#pragma once

#include <random>
#include <string>
#include <vector>

#include "ba/deriv.hpp"
#include "ba/notation.hpp"

namespace test_gen {

using namespace ba;

// Seeded source of random scripts. Derivations are built goal-directed so
// axiom clauses really are basic and premises prove exactly the parts the
// rules consume; weakening never hides behind sampling.
struct Gen {
  std::mt19937_64 rng;
  uint64_t fresh_count = 0;

  explicit Gen(uint64_t seed) : rng(seed) {}

  uint64_t pick(uint64_t n) { return rng() % n; }

  std::string fresh() { return "v" + std::to_string(fresh_count++); }

  TermPtr small_term(const std::vector<std::string>& vars, int depth = 2) {
    uint64_t c = pick(depth > 0 ? 6 : 2);
    if (c == 0 || vars.empty()) return num(Nat(pick(7)));
    if (c == 1) return var(vars[pick(vars.size())]);
    switch (pick(4)) {
      case 0:
        return app(Fn::Suc, {small_term(vars, depth - 1)});
      case 1:
        return app(Fn::Add,
                   {small_term(vars, depth - 1), small_term(vars, depth - 1)});
      case 2:
        return app(Fn::Min,
                   {small_term(vars, depth - 1), small_term(vars, depth - 1)});
      default:
        return app(Fn::Len, {small_term(vars, depth - 1)});
    }
  }

  FormulaPtr true_lit(const std::vector<std::string>& vars) {
    auto t = small_term(vars);
    auto u = small_term(vars);
    switch (pick(4)) {
      case 0:
        return lit(true, Rel::Eq, t, t);
      case 1:
        return lit(true, Rel::Le, app(Fn::Min, {t, u}), t);
      case 2:
        return lit(true, Rel::Le, t, app(Fn::Add, {t, u}));
      default:
        return lit(true, Rel::Le, app(Fn::Monus, {t, u}), t);
    }
  }

  FormulaPtr false_lit(const std::vector<std::string>& vars) {
    auto t = small_term(vars);
    auto u = small_term(vars);
    switch (pick(3)) {
      case 0:
        return lit(false, Rel::Eq, t, t);
      case 1:
        return lit(true, Rel::Le, app(Fn::Suc, {app(Fn::Add, {t, u})}), t);
      default:
        return lit(false, Rel::Le, t, app(Fn::Max, {t, u}));
    }
  }

  FormulaPtr any_lit(const std::vector<std::string>& vars) {
    return pick(2) ? true_lit(vars) : false_lit(vars);
  }

  Sequent clause(const std::vector<std::string>& vars) {
    Sequent s{true_lit(vars)};
    for (uint64_t i = pick(2); i > 0; --i) s.add(any_lit(vars));
    return s;
  }

  // Random closed-or-open derivation over the given free variables.
  DerivPtr deriv(int depth, const std::vector<std::string>& vars) {
    uint64_t c = depth <= 0 ? 0 : pick(12);
    switch (c) {
      default:
        return d_ax(clause(vars));
      case 2:
      case 3: {
        auto d0 = deriv(depth - 1, vars);
        auto d1 = deriv(depth - 1, vars);
        auto a = *d0->gamma.begin();
        auto b = *d1->gamma.begin();
        return d_conj(conj(a, b), d0, d1);
      }
      case 4:
      case 5: {
        auto d0 = deriv(depth - 1, vars);
        auto a = *d0->gamma.begin();
        auto other = any_lit(vars);
        uint32_t k = pick(2) ? 1u : 0u;
        return d_disj(k, k == 0 ? disj(a, other) : disj(other, a), d0);
      }
      case 6: {
        auto cf = true_lit(vars);
        auto d0 = pick(2) ? DerivPtr(d_ax(Sequent{cf})) : deriv(depth - 1, vars);
        auto d1 = d_ax(Sequent{negate(cf), true_lit(vars)});
        return d_cut(cf, d0, d1);
      }
      case 7:
      case 8: {
        auto b = num(Nat(1 + pick(6)));
        auto f = bounded_exists(
            "w", b, lit(true, Rel::Le, var("w"), app(Fn::Add, {var("w"), b})));
        auto wit = small_term(vars);
        auto inst = subst(f->body, "w", wit);
        return d_ex(wit, f, d_ax(Sequent{inst}));
      }
      case 9: {
        auto b = num(Nat(1 + pick(6)));
        auto f = bounded_forall("w", b, lit(true, Rel::Le, var("w"), b));
        std::string y = fresh();
        auto d0 = d_ax(Sequent{subst(f->body, "w", var(y))});
        return d_all(y, f, d0);
      }
      case 10: {
        std::string y = fresh();
        auto f = lit(true, Rel::Le, app(Fn::Min, {var(y), num(Nat(5))}),
                     num(Nat(5)));
        auto step =
            d_ax(Sequent{negate(f), subst(f, y, app(Fn::Suc, {var(y)}))});
        return d_ind_t(y, small_term(vars), f, step);
      }
      case 11: {
        std::string y = fresh();
        auto f = lit(true, Rel::Eq, app(Fn::Min, {var(y), num(Nat(3))}),
                     app(Fn::Min, {var(y), num(Nat(3))}));
        auto step =
            d_ax(Sequent{negate(f), subst(f, y, app(Fn::Suc, {var(y)}))});
        return d_ind_n(y, Nat(pick(5)), pick(3), f, step);
      }
    }
  }

  // Random operator skeleton; E nesting capped so heights stay materializable.
  AbstractPtr abstract_node(int depth, int e_budget = 2) {
    if (depth <= 0 || pick(4) == 0)
      return a_base(1 + pick(40), Nat(pick(5)));
    switch (pick(e_budget > 0 ? 4 : 3)) {
      case 0:
        return a_i(abstract_node(depth - 1, e_budget));
      case 1:
      case 2:
        return a_r(abstract_node(depth - 1, e_budget),
                   abstract_node(depth - 1, e_budget));
      default:
        return a_e(abstract_node(depth - 1, e_budget - 1));
    }
  }
};

}  // namespace test_gen
