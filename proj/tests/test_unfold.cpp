#include "ba/limits.hpp"
#include "ba/sexpr.hpp"
#include "ba/unfold.hpp"
#include "doctest.h"
#include "gen.hpp"
#include "util.hpp"

using namespace ba;
using test_util::corpus_file;
using test_util::raises;
using test_util::slurp;

namespace {

TermPtr n(uint64_t v) { return num(Nat(v)); }
FormulaPtr leq(TermPtr a, TermPtr b) { return lit(true, Rel::Le, a, b); }
FormulaPtr eqf(TermPtr a, TermPtr b) { return lit(true, Rel::Eq, a, b); }

DerivPtr corpus(const char* name) { return read_deriv(slurp(corpus_file(name))); }

}  // namespace

TEST_CASE("denoted symbols of the introduction rules") {
  auto t = eqf(n(2), n(2));
  auto f = leq(n(1), n(0));
  auto ax = d_ax(Sequent{f, t});
  CHECK(tp(ax).kind == SymKind::Ax);
  CHECK(ieq(tp(ax).formula, t));

  auto cj = d_conj(conj(t, t), d_ax(Sequent{t}), d_ax(Sequent{t}));
  CHECK(tp(cj).kind == SymKind::Conj);
  CHECK(tp(cj).formula.get() == cj->formula.get());
  CHECK(rng(cj) == 2);

  auto dj = d_disj(1, disj(f, t), d_ax(Sequent{t}));
  CHECK(tp(dj).kind == SymKind::Disj);
  CHECK(tp(dj).index == 1);
  CHECK(rng(dj) == 1);

  auto exf = bounded_exists("w", n(9), eqf(var("w"), n(3)));
  auto ex = d_ex(app(Fn::Add, {n(1), n(2)}), exf,
                 d_ax(Sequent{subst(exf->body, "w", n(3))}));
  CHECK(tp(ex).kind == SymKind::Disj);
  CHECK(tp(ex).index == 3);

  auto alf = bounded_forall("w", n(3), leq(var("w"), n(3)));
  auto al = d_all("y", alf, d_ax(Sequent{subst(alf->body, "w", var("y"))}));
  CHECK(tp(al).kind == SymKind::Conj);
  CHECK(rng(al) == 4);

  CHECK(raises([&] { tp(d_ax(Sequent{leq(var("x"), var("x"))})); }) ==
        ErrorKind::Precondition);
}

TEST_CASE("axiom needs a true literal to point at") {
  Limits lax = limits();
  lax.assume_basic = true;
  ScopedLimits guard(lax);
  auto bad = d_ax(Sequent{leq(n(1), n(0))});
  CHECK(raises([&] { tp(bad); }) == ErrorKind::NoTrueLiteral);
}

TEST_CASE("cuts canonicalize onto the conjunctive side") {
  auto t = eqf(n(2), n(2));
  auto plain = d_cut(t, d_ax(Sequent{t}), d_ax(Sequent{negate(t), t}));
  CHECK(tp(plain).kind == SymKind::Cut);
  CHECK(tp(plain).formula.get() == t.get());
  CHECK(child(plain, 0).get() == plain->children[0].get());
  CHECK(rng(plain) == 2);

  // a disjunctive cut formula is stored negated, with the premises exchanged
  auto d = substitute(corpus("ind-log.bas"), n(64), "x");
  CHECK(tp(d).kind == SymKind::Cut);
  CHECK(tp(d).formula->kind == Formula::Kind::All);
  CHECK(child(d, 0)->kind == DKind::IndT);
  CHECK(child(d, 1)->kind == DKind::ExI);
}

TEST_CASE("universal children instantiate the eigenvariable") {
  auto alf = bounded_forall("w", n(3), leq(var("w"), n(3)));
  auto al = d_all("y", alf, d_ax(Sequent{subst(alf->body, "w", var("y"))}));
  auto c2 = child(al, 2);
  CHECK(c2->gamma == Sequent{subst(alf->body, "w", n(2))});
  // the guard folds indices past the bound onto it
  CHECK(child(al, 9)->gamma == child(al, 3)->gamma);
}

TEST_CASE("induction unfolds into dyadic slices") {
  auto d = substitute(corpus("ind-log.bas"), n(64), "x");
  auto indt = child(d, 0);
  REQUIRE(indt->kind == DKind::IndT);
  CHECK(tp(indt).kind == SymKind::Rep);

  auto top = child(indt, 0);
  REQUIRE(top->kind == DKind::IndNI);
  CHECK(top->n == 0);
  CHECK(top->i == 5);
  CHECK(tp(top).kind == SymKind::Cut);

  // the slice cut goes high first because the induction formula is disjunctive
  auto high = child(top, 0);
  REQUIRE(high->kind == DKind::IndNI);
  CHECK(high->n == 16);
  CHECK(high->i == 4);
  auto low = child(top, 1);
  REQUIRE(low->kind == DKind::IndNI);
  CHECK(low->n == 0);
  CHECK(low->i == 4);

  auto unit = d_ind_n("y", Nat(3), 0,
                      leq(app(Fn::Min, {var("y"), n(5)}), n(5)),
                      d_ax(Sequent{leq(app(Fn::Min, {var("y"), n(5)}), n(5))}));
  CHECK(tp(unit).kind == SymKind::Rep);
  CHECK(child(unit, 0)->gamma.contains(leq(app(Fn::Min, {n(3), n(5)}), n(5))));
}

TEST_CASE("children past a finite arity are the trivial axiom") {
  auto t = eqf(n(2), n(2));
  auto dj = d_disj(0, disj(t, t), d_ax(Sequent{t}));
  auto over = child(dj, 5);
  CHECK(over->kind == DKind::AxSeq);
  CHECK(over->gamma == Sequent{eqf(n(0), n(0))});
}

TEST_CASE("height charging") {
  auto ax = d_ax(Sequent{eqf(n(1), n(1))});
  CHECK(ord_m(ax, 9) == 1);

  auto f = leq(app(Fn::Min, {var("y"), n(5)}), n(5));
  auto step = d_ax(Sequent{negate(f), subst(f, "y", app(Fn::Suc, {var("y")}))});
  auto indt = d_ind_t("y", n(6), f, step);
  CHECK(ord_m(indt, 3) == 5);
  auto indn = d_ind_n("y", Nat(0), 4, f, step);
  CHECK(ord_m(indn, 3) == 6);

  auto chain = corpus("cut-chain.bas");
  CHECK(ord(chain) == 4);
  CHECK(ord(corpus("conj-pair.bas")) == 4);
  auto il = substitute(corpus("ind-log.bas"), n(64), "x");
  CHECK(ord(il) == 10);
  CHECK(ord_capped(il, 2) == ord_m(il, 2));
  CHECK(ord_capped(il, 99) == ord(il));
}

TEST_CASE("numeral reach of the unfolding") {
  auto ax = d_ax(Sequent{eqf(n(9), n(9))});
  CHECK(bd(ax) == 0);
  CHECK(ibd(ax) == 0);

  auto exf = bounded_exists("w", n(2), leq(var("w"), n(5)));
  auto ex = d_ex(n(5), exf, d_ax(Sequent{subst(exf->body, "w", n(5))}));
  CHECK(bd(ex) == 5);

  auto alf = bounded_forall("w", n(3), leq(var("w"), n(3)));
  auto al = d_all("y", alf, d_ax(Sequent{subst(alf->body, "w", var("y"))}));
  CHECK(bd(al) == 3);

  auto il = substitute(corpus("ind-log.bas"), n(64), "x");
  CHECK(bd(il) == 64);
  CHECK(ibd(il) == 32);
}

TEST_CASE("descent and local faithfulness on random scripts") {
  test_gen::Gen gen(28657);
  for (int round = 0; round < 150; ++round) {
    auto h = gen.deriv(3, {});
    auto sym = tp(h);
    CHECK(seq_subset(sym.delta(), h->gamma));
    Nat w = rng(h);
    for (Nat j = 0; j < w; ++j) {
      auto c = child(h, j);
      CHECK(ord(c) < ord(h));
      CHECK(seq_subset(c->gamma,
                       seq_union(seq_minus(h->gamma, sym.delta()),
                                 sym.delta_at(j))));
    }
  }
}
