#include <random>

#include "ba/formula.hpp"
#include "ba/limits.hpp"
#include "doctest.h"
#include "util.hpp"

using namespace ba;
using test_util::raises;

namespace {

TermPtr n(uint64_t v) { return num(Nat(v)); }

FormulaPtr leq(TermPtr a, TermPtr b) { return lit(true, Rel::Le, a, b); }
FormulaPtr eqf(TermPtr a, TermPtr b) { return lit(true, Rel::Eq, a, b); }

FormulaPtr gen_formula(std::mt19937_64& rng, int depth, int quants) {
  int c = static_cast<int>(rng() % (depth > 0 ? 5 : 2));
  auto t = [&] {
    if (rng() % 3 == 0) return var(rng() % 2 ? "x" : "y");
    return n(rng() % 9);
  };
  switch (c) {
    case 0:
      return lit(rng() % 2 == 0, Rel::Eq, t(), t());
    case 1:
      return lit(rng() % 2 == 0, Rel::Le, t(), t());
    case 2:
      return conj(gen_formula(rng, depth - 1, quants),
                  gen_formula(rng, depth - 1, quants));
    case 3:
      return disj(gen_formula(rng, depth - 1, quants),
                  gen_formula(rng, depth - 1, quants));
    default: {
      if (quants == 0)
        return conj(gen_formula(rng, depth - 1, 0), gen_formula(rng, depth - 1, 0));
      std::string v = rng() % 2 ? "q" : "r";
      auto body = gen_formula(rng, depth - 1, quants - 1);
      return rng() % 2 ? bounded_forall(v, n(rng() % 5), body)
                       : bounded_exists(v, n(rng() % 5), body);
    }
  }
}

}  // namespace

TEST_CASE("negation is involutive and flips connectives") {
  auto a = leq(var("x"), n(3));
  auto b = eqf(var("y"), n(0));
  CHECK(negate(conj(a, b)).get() == disj(negate(a), negate(b)).get());
  CHECK(negate(negate(a)).get() == a.get());
  CHECK(negate(a)->positive == false);

  std::mt19937_64 rng(411);
  for (int i = 0; i < 400; ++i) {
    auto f = gen_formula(rng, 3, 2);
    CHECK(negate(negate(f)).get() == f.get());
  }
}

TEST_CASE("bounded quantifier encoding guards with min") {
  auto f = bounded_exists("x", n(5), eqf(var("x"), n(3)));
  CHECK(f->kind == Formula::Kind::Ex);
  REQUIRE(quant_bound(f).has_value());
  CHECK(eval(*quant_bound(f)) == 5);
  CHECK(well_formed(f));
  CHECK(rng(f) == 6);
  CHECK(truth(f));

  auto vac = exists("x", eqf(n(1), n(1)));
  REQUIRE(quant_bound(vac).has_value());
  CHECK(eval(*quant_bound(vac)) == 0);

  auto bare = forall("x", eqf(var("x"), var("x")));
  CHECK(!well_formed(bare));
  CHECK(well_formed_diag(bare).has_value());
  CHECK(raises([&] { rng(bare); }) == ErrorKind::UnboundedQuantifier);
}

TEST_CASE("outermost connective of closed formulas") {
  CHECK(tp(eqf(n(2), n(2))) == Tp::Top);
  CHECK(tp(eqf(n(2), n(3))) == Tp::Bottom);
  CHECK(tp(conj(eqf(n(0), n(0)), eqf(n(1), n(1)))) == Tp::BigAnd);
  CHECK(tp(bounded_forall("x", n(3), leq(var("x"), n(5)))) == Tp::BigAnd);
  CHECK(tp(bounded_exists("x", n(3), leq(var("x"), n(5)))) == Tp::BigOr);
  CHECK(tp_conjunctive(Tp::Top));
  CHECK(!tp_conjunctive(Tp::BigOr));
}

TEST_CASE("immediate subformulas") {
  auto a = eqf(n(0), n(0));
  auto b = leq(n(1), n(2));
  auto c = conj(a, b);
  CHECK(sub(c, 0).get() == a.get());
  CHECK(sub(c, 1).get() == b.get());
  CHECK(sub(c, 7).get() == b.get());
  CHECK(rng(c) == 2);
  CHECK(rng(a) == 0);

  auto q = bounded_exists("x", n(5), eqf(var("x"), n(3)));
  CHECK(truth(sub(q, 3)));
  CHECK(!truth(sub(q, 2)));
  // the guard caps instances beyond the bound
  CHECK(ieq(sub(q, 9), sub(q, 5)));
}

TEST_CASE("truth is an exhaustive bounded scan") {
  auto all_le = bounded_forall("x", n(4), leq(var("x"), n(4)));
  CHECK(truth(all_le));
  auto nested = bounded_forall(
      "x", n(4), bounded_exists("y", n(4), eqf(var("y"), var("x"))));
  CHECK(truth(nested));
  auto short_y = bounded_forall(
      "x", n(4), bounded_exists("y", n(2), eqf(var("y"), var("x"))));
  CHECK(!truth(short_y));
  CHECK(raises([] { truth(eqf(var("x"), n(0))); }) == ErrorKind::OpenFormula);
}

TEST_CASE("truth budget caps instantiation work") {
  Limits tight = limits();
  tight.truth_budget = 10;
  ScopedLimits guard(tight);
  CHECK(raises([] {
          truth(bounded_forall("x", n(100), leq(var("x"), n(100))));
        }) == ErrorKind::ResourceCap);
}

TEST_CASE("class membership by quantifier shape") {
  auto qf = conj(leq(n(0), n(1)), eqf(n(2), n(2)));
  CHECK(sigma_member(0, qf));
  CHECK(in_class(0, qf));
  CHECK(rank(0, qf) == 0);

  auto ex1 = bounded_exists("w", n(4), leq(n(3), var("w")));
  CHECK(!sigma_member(0, ex1));
  CHECK(rank(0, ex1) == 1);
  CHECK(sigma_member(1, ex1));
  CHECK(rank(1, ex1) == 0);

  auto al1 = negate(ex1);
  CHECK(!sigma_member(1, al1));
  CHECK(in_class(1, al1));
  CHECK(rank(1, al1) == 0);

  // a sharply bounded block rides along one level early
  auto sharp = bounded_forall("w", app(Fn::Len, {n(9)}), leq(var("w"), n(5)));
  CHECK(sigma_member(1, sharp));
  auto blunt = bounded_forall("w", n(5), leq(var("w"), n(5)));
  CHECK(!sigma_member(1, blunt));
}

TEST_CASE("normalization and intensional equality") {
  auto a = eqf(app(Fn::Min, {n(4), n(9)}), n(4));
  auto b = eqf(n(4), n(4));
  CHECK(normalize(a).get() == b.get());
  CHECK(ieq(a, b));
  CHECK(!ieq(a, eqf(n(4), n(5))));
  auto open_part = eqf(app(Fn::Min, {var("x"), app(Fn::Add, {n(2), n(3)})}), n(4));
  CHECK(normalize(open_part).get() ==
        eqf(app(Fn::Min, {var("x"), n(5)}), n(4)).get());
}

TEST_CASE("substitution respects binders") {
  auto f = bounded_exists("x", n(5), eqf(var("x"), var("y")));
  CHECK(subst(f, "x", n(3)).get() == f.get());
  auto g = subst(f, "y", n(3));
  CHECK(g->closed());
  CHECK(truth(g));
  CHECK(binder_names(f) == std::vector<std::string>{"x"});
}
