#include "ba/sequent.hpp"
#include "doctest.h"

using namespace ba;

namespace {

TermPtr n(uint64_t v) { return num(Nat(v)); }
FormulaPtr leq(TermPtr a, TermPtr b) { return lit(true, Rel::Le, a, b); }

}  // namespace

TEST_CASE("representation is independent of insertion order") {
  auto a = leq(n(0), n(1));
  auto b = leq(n(1), n(2));
  auto c = leq(n(2), n(3));
  Sequent s1{a, b, c};
  Sequent s2{c, a, b};
  Sequent s3;
  s3.add(b);
  s3.add(c);
  s3.add(a);
  CHECK(s1 == s2);
  CHECK(s1 == s3);
  CHECK(s1.text() == s2.text());
  CHECK(s1.size() == 3);
}

TEST_CASE("duplicates collapse modulo intensional equality") {
  auto plain = leq(n(4), n(9));
  auto dressed = leq(app(Fn::Min, {n(4), n(9)}), app(Fn::Add, {n(4), n(5)}));
  Sequent s{plain, dressed};
  CHECK(s.size() == 1);
  CHECK(s.contains(plain));
  CHECK(s.contains(dressed));
}

TEST_CASE("set algebra") {
  auto a = leq(n(0), n(1));
  auto b = leq(n(1), n(2));
  auto c = leq(n(2), n(3));
  Sequent ab{a, b};
  Sequent bc{b, c};
  CHECK(seq_union(ab, bc) == Sequent{a, b, c});
  CHECK(seq_minus(ab, bc) == Sequent{a});
  CHECK(seq_subset(Sequent{b}, ab));
  CHECK(!seq_subset(ab, bc));
  CHECK(seq_subset(Sequent{}, bc));
}

TEST_CASE("subtraction is intensional") {
  auto plain = leq(n(4), n(9));
  auto dressed = leq(app(Fn::Min, {n(4), n(9)}), n(9));
  CHECK(seq_minus(Sequent{plain}, Sequent{dressed}).empty());
}

TEST_CASE("substitution maps across the set") {
  auto f = leq(var("x"), n(5));
  auto g = leq(var("y"), var("x"));
  Sequent s{f, g};
  auto sub = seq_subst(s, "x", n(3));
  CHECK(sub.contains(leq(n(3), n(5))));
  CHECK(sub.contains(leq(var("y"), n(3))));
  CHECK(sub.fv() == std::vector<std::string>{"y"});
  CHECK(!sub.closed());
  CHECK(seq_subst(sub, "y", n(0)).closed());
}

TEST_CASE("closure predicate answers membership") {
  auto a = leq(n(0), n(1));
  auto dressed = leq(app(Fn::Min, {n(0), n(7)}), n(1));
  auto pred = seq_closure(Sequent{a});
  CHECK(pred(a));
  CHECK(pred(dressed));
  CHECK(!pred(leq(n(1), n(0))));
}
