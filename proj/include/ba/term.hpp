#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ba/nat.hpp"

namespace ba {

// The fixed signature. Every symbol has ptime semantics on naturals; len is
// binary length, zhl is n -> 2^|n|, smash is (a, b) -> 2^(|a| * |b|), shr
// halves rounding down.
enum class Fn : uint8_t { Suc, Add, Mul, Monus, Min, Max, Len, Zhl, Smash, Shr };

struct FnInfo {
  const char* name;
  int arity;
  // Growth constant of the bounding template: the template is a smash chain
  // of 2^cf copies of max(2, args...). len has a bespoke template instead.
  uint32_t cf;
};

const FnInfo& fn_info(Fn f);
std::optional<Fn> fn_by_name(const std::string& name);
Nat fn_eval(Fn f, std::span<const Nat> args);

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable, interned. Equal terms are pointer-equal; `text` is the canonical
// serialization and doubles as the interning key and the comparison order.
class Term : public std::enable_shared_from_this<Term> {
 public:
  enum class Kind : uint8_t { Var, Num, App };

  Kind kind;
  std::string var_name;        // Var
  Nat value;                   // Num
  Fn fn = Fn::Suc;             // App
  std::vector<TermPtr> args;   // App

  std::string text;
  std::vector<std::string> fv;  // sorted, unique
  uint32_t depth = 1;
  size_t hash = 0;

  bool closed() const { return fv.empty(); }
  bool is_num() const { return kind == Kind::Num; }
  bool is_var() const { return kind == Kind::Var; }
  bool is_app(Fn f) const { return kind == Kind::App && fn == f; }
};

TermPtr var(const std::string& name);
TermPtr num(const Nat& value);
TermPtr app(Fn f, std::vector<TermPtr> args);

// Environment for evaluation under an assignment.
using Env = std::vector<std::pair<std::string, Nat>>;
const Nat* env_lookup(const Env& env, const std::string& name);

// Value of a closed term (OpenTerm if a free variable remains; ResourceCap if
// an intermediate value exceeds the magnitude cap).
Nat eval(const TermPtr& t);
Nat eval(const TermPtr& t, const Env& env);

// Replace every free occurrence of `name` by `r`.
TermPtr subst(const TermPtr& t, const std::string& name, const TermPtr& r);

// Monotone bounding term: numeral of the value for closed t, the variable for
// variables, and the dominating template otherwise.
TermPtr bd(const TermPtr& t);

// The template itself, exposed for the domination/monotonicity tests.
TermPtr bound_template(Fn f, std::vector<TermPtr> args);

// Maximal closed subterms replaced by their numerals.
TermPtr normalize(const TermPtr& t);

}  // namespace ba
