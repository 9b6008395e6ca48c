#include "ba/term.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "ba/error.hpp"
#include "ba/limits.hpp"

namespace ba {

namespace {

const FnInfo kFnTable[] = {
    {"suc", 1, 1}, {"add", 2, 1}, {"mul", 2, 1},   {"monus", 2, 1}, {"min", 2, 0},
    {"max", 2, 0}, {"len", 1, 0}, {"zhl", 1, 1},   {"smash", 2, 1}, {"shr", 1, 0},
};

std::mutex& intern_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::string, TermPtr>& intern_table() {
  static std::unordered_map<std::string, TermPtr> t;
  return t;
}

TermPtr intern(std::shared_ptr<Term> node) {
  node->hash = std::hash<std::string>{}(node->text);
  std::lock_guard<std::mutex> lock(intern_mutex());
  auto [it, inserted] = intern_table().emplace(node->text, node);
  return it->second;
}

void merge_fv(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& v : from)
    if (!std::binary_search(into.begin(), into.end(), v))
      into.insert(std::upper_bound(into.begin(), into.end(), v), v);
}

void check_magnitude(const Nat& bits_needed) {
  if (bits_needed > limits().magnitude_bits)
    raise(ErrorKind::ResourceCap, "value of " + bits_needed.str() +
                                      " bits exceeds the magnitude cap of " +
                                      std::to_string(limits().magnitude_bits) + " bits");
}

}  // namespace

const FnInfo& fn_info(Fn f) { return kFnTable[static_cast<int>(f)]; }

std::optional<Fn> fn_by_name(const std::string& name) {
  for (int i = 0; i < 10; ++i)
    if (name == kFnTable[i].name) return static_cast<Fn>(i);
  return std::nullopt;
}

Nat fn_eval(Fn f, std::span<const Nat> args) {
  switch (f) {
    case Fn::Suc:
      return args[0] + 1;
    case Fn::Add: {
      Nat r = args[0] + args[1];
      check_magnitude(bit_length(r));
      return r;
    }
    case Fn::Mul: {
      check_magnitude(Nat(bit_length(args[0])) + bit_length(args[1]));
      return args[0] * args[1];
    }
    case Fn::Monus:
      return monus(args[0], args[1]);
    case Fn::Min:
      return std::min(args[0], args[1]);
    case Fn::Max:
      return std::max(args[0], args[1]);
    case Fn::Len:
      return Nat(bit_length(args[0]));
    case Fn::Zhl: {
      Nat e = bit_length(args[0]);
      check_magnitude(e + 1);
      Nat r = 1;
      r <<= static_cast<uint64_t>(e);
      return r;
    }
    case Fn::Smash: {
      Nat e = Nat(bit_length(args[0])) * bit_length(args[1]);
      check_magnitude(e + 1);
      Nat r = 1;
      r <<= static_cast<uint64_t>(e);
      return r;
    }
    case Fn::Shr:
      return args[0] >> 1;
  }
  raise(ErrorKind::Invariant, "unknown function symbol");
}

TermPtr var(const std::string& name) {
  auto node = std::make_shared<Term>();
  node->kind = Term::Kind::Var;
  node->var_name = name;
  node->text = name;
  node->fv = {name};
  node->depth = 1;
  return intern(std::move(node));
}

TermPtr num(const Nat& value) {
  auto node = std::make_shared<Term>();
  node->kind = Term::Kind::Num;
  node->value = value;
  node->text = "(num " + value.str() + ")";
  node->depth = 1;
  return intern(std::move(node));
}

TermPtr app(Fn f, std::vector<TermPtr> args) {
  const FnInfo& info = fn_info(f);
  if (static_cast<int>(args.size()) != info.arity)
    raise(ErrorKind::Invariant, std::string(info.name) + " expects " +
                                    std::to_string(info.arity) + " arguments");
  auto node = std::make_shared<Term>();
  node->kind = Term::Kind::App;
  node->fn = f;
  node->text = "(" + std::string(info.name);
  for (const auto& a : args) {
    node->text += ' ';
    node->text += a->text;
    node->depth = std::max(node->depth, a->depth + 1);
    merge_fv(node->fv, a->fv);
  }
  node->text += ')';
  node->args = std::move(args);
  return intern(std::move(node));
}

const Nat* env_lookup(const Env& env, const std::string& name) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

Nat eval(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Num:
      return t->value;
    case Term::Kind::Var: {
      const Nat* v = env_lookup(env, t->var_name);
      if (!v) raise(ErrorKind::OpenTerm, "unbound variable " + t->var_name);
      return *v;
    }
    case Term::Kind::App: {
      std::vector<Nat> vals;
      vals.reserve(t->args.size());
      for (const auto& a : t->args) vals.push_back(eval(a, env));
      return fn_eval(t->fn, vals);
    }
  }
  raise(ErrorKind::Invariant, "bad term kind");
}

Nat eval(const TermPtr& t) {
  if (!t->closed()) raise(ErrorKind::OpenTerm, "cannot evaluate open term " + t->text);
  static const Env empty;
  return eval(t, empty);
}

TermPtr subst(const TermPtr& t, const std::string& name, const TermPtr& r) {
  if (!std::binary_search(t->fv.begin(), t->fv.end(), name)) return t;
  switch (t->kind) {
    case Term::Kind::Var:
      return r;
    case Term::Kind::Num:
      return t;
    case Term::Kind::App: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(subst(a, name, r));
      return app(t->fn, std::move(args));
    }
  }
  raise(ErrorKind::Invariant, "bad term kind");
}

TermPtr bound_template(Fn f, std::vector<TermPtr> args) {
  if (f == Fn::Len) return app(Fn::Len, {args[0]});
  TermPtr m = num(2);
  for (const auto& a : args) m = app(Fn::Max, {m, a});
  uint64_t copies = uint64_t{1} << fn_info(f).cf;
  TermPtr chain = m;
  for (uint64_t i = 1; i < copies; ++i) chain = app(Fn::Smash, {chain, m});
  return chain;
}

TermPtr bd(const TermPtr& t) {
  if (t->closed()) return t->is_num() ? t : num(eval(t));
  if (t->is_var()) return t;
  std::vector<TermPtr> bs;
  bs.reserve(t->args.size());
  for (const auto& a : t->args) bs.push_back(bd(a));
  return bound_template(t->fn, std::move(bs));
}

TermPtr normalize(const TermPtr& t) {
  if (t->closed()) return t->is_num() ? t : num(eval(t));
  if (t->is_var()) return t;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(normalize(a));
  return app(t->fn, std::move(args));
}

}  // namespace ba
