#include "ba/deriv.hpp"
#include "ba/limits.hpp"
#include "ba/sexpr.hpp"
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

}  // namespace

TEST_CASE("conclusion composition consumes the rule parts") {
  auto a = leq(n(0), n(1));
  auto b = leq(n(1), n(2));
  auto side = leq(n(0), n(0));
  auto d = d_conj(conj(a, b), d_ax(Sequent{a, side}), d_ax(Sequent{b}));
  CHECK(d->gamma == Sequent{conj(a, b), side});
  CHECK(d->delta() == Sequent{conj(a, b)});
  CHECK(d->delta_at(0) == Sequent{a});
  CHECK(d->delta_at(1) == Sequent{b});
  CHECK(d->hgt == 1);
  CHECK(d->sz == 3);

  // a premise that never proves the part keeps its conclusion as weakening
  auto w = d_conj(conj(a, b), d_ax(Sequent{side}), d_ax(Sequent{b}));
  CHECK(w->gamma == Sequent{conj(a, b), side});
}

TEST_CASE("consumption is intensional") {
  auto plain = leq(n(4), n(9));
  auto dressed = leq(app(Fn::Min, {n(4), n(9)}), n(9));
  auto d = d_disj(0, disj(plain, leq(n(1), n(0))), d_ax(Sequent{dressed}));
  CHECK(d->gamma.size() == 1);
  CHECK(d->gamma.contains(d->formula));
}

TEST_CASE("axiom clauses are literal-only and basic") {
  auto t = leq(n(0), n(1));
  CHECK(raises([&] { d_ax(Sequent{conj(t, t)}); }) == ErrorKind::NotBasic);
  CHECK(raises([] { d_ax(Sequent{leq(n(1), n(0))}); }) == ErrorKind::NotBasic);

  std::string diag;
  auto open_false = leq(app(Fn::Suc, {var("x")}), var("x"));
  CHECK(!is_basic(Sequent{open_false}, &diag));
  CHECK(diag.find('x') != std::string::npos);

  Limits lax = limits();
  lax.assume_basic = true;
  ScopedLimits guard(lax);
  CHECK(d_ax(Sequent{leq(n(1), n(0))})->gamma.size() == 1);
}

TEST_CASE("introduction shape checks") {
  auto a = leq(n(0), n(1));
  auto d0 = d_ax(Sequent{a});
  CHECK(raises([&] { d_conj(disj(a, a), d0, d0); }) == ErrorKind::WellFormed);
  CHECK(raises([&] { d_disj(2, disj(a, a), d0); }) == ErrorKind::Precondition);
  CHECK(raises([&] { d_ex(n(0), a, d0); }) == ErrorKind::WellFormed);
  CHECK(raises([&] {
          d_all("w", bounded_forall("w", n(3), leq(var("w"), n(3))), d0);
        }) == ErrorKind::WellFormed);
}

TEST_CASE("derivations intern like terms") {
  auto a = leq(n(0), n(1));
  auto d1 = d_conj(conj(a, a), d_ax(Sequent{a}), d_ax(Sequent{a}));
  auto d2 = d_conj(conj(a, a), d_ax(Sequent{a}), d_ax(Sequent{a}));
  CHECK(d1.get() == d2.get());
}

TEST_CASE("variable discipline") {
  auto open_clause = Sequent{leq(var("z"), app(Fn::Add, {var("z"), n(1)}))};
  auto d = d_ax(open_clause);
  CHECK(var_deriv(d, {"z"}));
  CHECK(!var_deriv(d, {}));
  CHECK(var_deriv_diag(d, {}).has_value());
  CHECK(var_deriv_diag(d, {"z", "z"}).has_value());

  auto f = bounded_forall("w", n(3), leq(var("w"), n(3)));
  auto good = d_all("y", f, d_ax(Sequent{subst(f->body, "w", var("y"))}));
  CHECK(var_deriv(good, {}));
  // the eigenvariable may not leak into the conclusion context
  CHECK(!var_deriv(d_conj(conj(*good->gamma.begin(), leq(var("y"), n(9))),
                          good, d_ax(Sequent{leq(n(0), n(9))})),
                   {}));
}

TEST_CASE("corpus scripts are well-formed") {
  for (const char* name :
       {"ex-four.bas", "ex-ident.bas", "cut-weaken.bas", "cut-chain.bas",
        "disj-zero.bas", "cut-exists.bas", "ind-suc.bas", "ind-log.bas",
        "conj-pair.bas", "nested-cut.bas"}) {
    auto d = read_deriv(slurp(corpus_file(name)));
    CAPTURE(name);
    CHECK(!var_deriv_diag(d, d->fv).has_value());
    CHECK(d->gamma.size() == 1);
  }
}

TEST_CASE("cut complexity counts ranks above the class") {
  auto lit_cut = read_deriv(slurp(corpus_file("cut-chain.bas")));
  CHECK(crk(lit_cut, 0) == 1);
  CHECK(crk(lit_cut, 1) == 1);

  auto ex_cut = read_deriv(slurp(corpus_file("ind-log.bas")));
  CHECK(crk(ex_cut, 0) == 2);
  CHECK(crk(ex_cut, 1) == 1);

  auto ind = read_deriv(slurp(corpus_file("ind-suc.bas")));
  CHECK(crk(ind, 0) == 2);
  CHECK(crk(ind, 1) == 1);

  CHECK(crk(d_ax(Sequent{leq(n(0), n(1))}), 0) == 0);
}

TEST_CASE("substitution of the instance variable") {
  auto d = read_deriv(slurp(corpus_file("ind-log.bas")));
  REQUIRE(d->fv == std::vector<std::string>{"x"});
  auto inst = substitute(d, n(4), "x");
  CHECK(inst->closed());
  CHECK(inst->gamma == seq_subst(d->gamma, "x", n(4)));
  CHECK(substitute(d, n(4), "zz").get() == d.get());

  auto f = bounded_forall("w", n(3), leq(var("w"), n(3)));
  auto binder = d_all("y", f, d_ax(Sequent{subst(f->body, "w", var("y"))}));
  CHECK(substitute(binder, n(7), "y").get() == binder.get());
  CHECK(raises([&] { substitute(d, var("u"), "x"); }) == ErrorKind::OpenTerm);
}

TEST_CASE("conclusion laws on random scripts") {
  test_gen::Gen gen(514229);
  for (int round = 0; round < 200; ++round) {
    auto h = gen.deriv(3, {"x"});
    CHECK(h->gamma.size() <= 2 * h->sz);
    CHECK(seq_subset(h->gamma, h->deco));
    auto t = num(Nat(gen.pick(9)));
    CHECK(seq_subset(substitute(h, t, "x")->gamma, seq_subst(h->gamma, "x", t)));
  }
}
