#include "ba/sexpr.hpp"

#include <cctype>
#include <limits>

#include "ba/error.hpp"
#include "ba/limits.hpp"

namespace ba {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  uint32_t line = 1;
  uint32_t col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_blanks() {
    while (!done()) {
      char c = peek();
      if (c == ';') {
        while (!done() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  std::string mark() const {
    return std::to_string(line) + ":" + std::to_string(col);
  }
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
  raise(ErrorKind::Parse, c.mark() + ": " + msg);
}

[[noreturn]] void fail_at(const SExpr& e, const std::string& msg) {
  raise(ErrorKind::Parse, e.where() + ": " + msg);
}

bool atom_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' &&
         c != ';';
}

SExpr parse_one(Cursor& c, uint32_t depth) {
  if (depth > limits().term_depth + 16)
    raise(ErrorKind::ResourceCap, c.mark() + ": expression nests too deeply");
  c.skip_blanks();
  if (c.done()) fail(c, "unexpected end of input");
  SExpr e;
  e.line = c.line;
  e.col = c.col;
  if (c.peek() == ')') fail(c, "unmatched ')'");
  if (c.peek() == '(') {
    c.advance();
    while (true) {
      c.skip_blanks();
      if (c.done()) fail(c, "missing ')'");
      if (c.peek() == ')') {
        c.advance();
        break;
      }
      e.items.push_back(parse_one(c, depth + 1));
    }
    return e;
  }
  e.is_atom = true;
  while (!c.done() && atom_char(c.peek())) {
    e.atom += c.peek();
    c.advance();
  }
  if (e.atom.empty()) fail(c, "empty atom");
  return e;
}

Nat read_nat_atom(const SExpr& e, const char* what) {
  if (!e.is_atom || e.atom.empty()) fail_at(e, std::string(what) + " must be a number");
  for (char ch : e.atom)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail_at(e, std::string(what) + " must be a decimal number, got " + e.atom);
  return Nat(e.atom);
}

uint64_t read_u64_atom(const SExpr& e, const char* what) {
  Nat n = read_nat_atom(e, what);
  if (n > Nat(std::numeric_limits<uint64_t>::max()))
    fail_at(e, std::string(what) + " is out of range");
  return n.convert_to<uint64_t>();
}

void expect_len(const SExpr& e, size_t n, const char* form) {
  if (e.items.size() != n)
    fail_at(e, std::string(form) + " takes " + std::to_string(n - 1) +
                   " arguments, got " + std::to_string(e.items.size() - 1));
}

std::string read_var_name(const SExpr& e) {
  if (!e.is_atom) fail_at(e, "expected a variable name");
  return e.atom;
}

TermPtr read_term_rec(const SExpr& e, uint32_t depth) {
  if (depth > limits().term_depth)
    raise(ErrorKind::ResourceCap, e.where() + ": term exceeds the depth cap");
  if (e.is_atom) return var(e.atom);
  if (e.items.empty()) fail_at(e, "empty term");
  const std::string& h = e.head();
  if (h == "num") {
    expect_len(e, 2, "num");
    return num(read_nat_atom(e.at(1, "number"), "number"));
  }
  auto f = fn_by_name(h);
  if (!f) fail_at(e, "unknown function " + h);
  const auto& info = fn_info(*f);
  expect_len(e, 1 + info.arity, h.c_str());
  std::vector<TermPtr> args;
  for (size_t i = 1; i < e.items.size(); ++i)
    args.push_back(read_term_rec(e.items[i], depth + 1));
  return app(*f, std::move(args));
}

FormulaPtr read_formula_rec(const SExpr& e, uint32_t depth) {
  if (depth > limits().term_depth)
    raise(ErrorKind::ResourceCap, e.where() + ": formula exceeds the depth cap");
  if (e.is_atom) fail_at(e, "expected a formula, got " + e.atom);
  if (e.items.empty()) fail_at(e, "empty formula");
  const std::string& h = e.head();
  if (h == "eq" || h == "le" || h == "neq" || h == "nle") {
    expect_len(e, 3, h.c_str());
    bool positive = h == "eq" || h == "le";
    Rel rel = (h == "eq" || h == "neq") ? Rel::Eq : Rel::Le;
    return lit(positive, rel, read_term_rec(e.at(1, "left side"), depth + 1),
               read_term_rec(e.at(2, "right side"), depth + 1));
  }
  if (h == "and" || h == "or") {
    expect_len(e, 3, h.c_str());
    auto a = read_formula_rec(e.at(1, "first part"), depth + 1);
    auto b = read_formula_rec(e.at(2, "second part"), depth + 1);
    return h == "and" ? conj(a, b) : disj(a, b);
  }
  if (h == "all" || h == "ex") {
    expect_len(e, 3, h.c_str());
    auto x = read_var_name(e.at(1, "bound variable"));
    auto body = read_formula_rec(e.at(2, "body"), depth + 1);
    return h == "all" ? forall(x, body) : exists(x, body);
  }
  if (h == "all-le" || h == "ex-le") {
    expect_len(e, 4, h.c_str());
    auto x = read_var_name(e.at(1, "bound variable"));
    auto t = read_term_rec(e.at(2, "bound"), depth + 1);
    auto body = read_formula_rec(e.at(3, "body"), depth + 1);
    return h == "all-le" ? bounded_forall(x, t, body) : bounded_exists(x, t, body);
  }
  fail_at(e, "unknown formula form " + h);
}

DerivPtr read_deriv_rec(const SExpr& e, uint32_t depth) {
  if (depth > 4096)
    raise(ErrorKind::ResourceCap, e.where() + ": derivation nests too deeply");
  if (e.is_atom) fail_at(e, "expected a derivation, got " + e.atom);
  if (e.items.empty()) fail_at(e, "empty derivation");
  const std::string& h = e.head();
  if (h == "ax") {
    Sequent delta;
    for (size_t i = 1; i < e.items.size(); ++i)
      delta.add(read_formula_rec(e.items[i], 0));
    return d_ax(delta);
  }
  if (h == "conj") {
    expect_len(e, 4, "conj");
    return d_conj(read_formula_rec(e.at(1, "formula"), 0),
                  read_deriv_rec(e.at(2, "first premise"), depth + 1),
                  read_deriv_rec(e.at(3, "second premise"), depth + 1));
  }
  if (h == "disj") {
    expect_len(e, 4, "disj");
    uint64_t k = read_u64_atom(e.at(1, "branch"), "branch");
    if (k > 1) fail_at(e, "branch must be 0 or 1");
    return d_disj(static_cast<uint32_t>(k), read_formula_rec(e.at(2, "formula"), 0),
                  read_deriv_rec(e.at(3, "premise"), depth + 1));
  }
  if (h == "all-i") {
    expect_len(e, 4, "all-i");
    return d_all(read_var_name(e.at(1, "eigenvariable")),
                 read_formula_rec(e.at(2, "formula"), 0),
                 read_deriv_rec(e.at(3, "premise"), depth + 1));
  }
  if (h == "ex-i") {
    expect_len(e, 4, "ex-i");
    return d_ex(read_term_rec(e.at(1, "witness"), 0),
                read_formula_rec(e.at(2, "formula"), 0),
                read_deriv_rec(e.at(3, "premise"), depth + 1));
  }
  if (h == "ind-t") {
    expect_len(e, 5, "ind-t");
    return d_ind_t(read_var_name(e.at(1, "induction variable")),
                   read_term_rec(e.at(2, "target"), 0),
                   read_formula_rec(e.at(3, "formula"), 0),
                   read_deriv_rec(e.at(4, "premise"), depth + 1));
  }
  if (h == "ind-n") {
    expect_len(e, 6, "ind-n");
    return d_ind_n(read_var_name(e.at(1, "induction variable")),
                   read_nat_atom(e.at(2, "start"), "start"),
                   read_u64_atom(e.at(3, "stride"), "stride"),
                   read_formula_rec(e.at(4, "formula"), 0),
                   read_deriv_rec(e.at(5, "premise"), depth + 1));
  }
  if (h == "cut") {
    expect_len(e, 4, "cut");
    return d_cut(read_formula_rec(e.at(1, "cut formula"), 0),
                 read_deriv_rec(e.at(2, "first premise"), depth + 1),
                 read_deriv_rec(e.at(3, "second premise"), depth + 1));
  }
  fail_at(e, "unknown derivation form " + h);
}

NotationPtr read_notation_rec(const SExpr& e, uint32_t depth) {
  if (depth > 4096)
    raise(ErrorKind::ResourceCap, e.where() + ": notation nests too deeply");
  if (!e.is_atom && !e.items.empty()) {
    const std::string& h = e.head();
    if (h == "I") {
      expect_len(e, 4, "I");
      return n_i(read_nat_atom(e.at(1, "slot"), "slot"),
                 read_formula_rec(e.at(2, "formula"), 0),
                 read_notation_rec(e.at(3, "body"), depth + 1));
    }
    if (h == "R") {
      expect_len(e, 4, "R");
      return n_r(read_formula_rec(e.at(1, "cut formula"), 0),
                 read_notation_rec(e.at(2, "first body"), depth + 1),
                 read_notation_rec(e.at(3, "second body"), depth + 1));
    }
    if (h == "E") {
      expect_len(e, 2, "E");
      return n_e(read_notation_rec(e.at(1, "body"), depth + 1));
    }
  }
  return n_base(read_deriv_rec(e, 0));
}

}  // namespace

const SExpr& SExpr::at(size_t i, const char* what) const {
  if (i >= items.size())
    raise(ErrorKind::Parse, where() + ": missing " + what);
  return items[i];
}

const std::string& SExpr::head() const {
  static const std::string empty;
  if (items.empty() || !items[0].is_atom) return empty;
  return items[0].atom;
}

std::string SExpr::where() const {
  return std::to_string(line) + ":" + std::to_string(col);
}

SExpr parse_sexpr(const std::string& text) {
  Cursor c{text};
  SExpr e = parse_one(c, 0);
  c.skip_blanks();
  if (!c.done()) fail(c, "trailing input after the first expression");
  return e;
}

std::vector<SExpr> parse_all(const std::string& text) {
  Cursor c{text};
  std::vector<SExpr> out;
  while (true) {
    c.skip_blanks();
    if (c.done()) break;
    out.push_back(parse_one(c, 0));
  }
  return out;
}

TermPtr read_term(const SExpr& e) { return read_term_rec(e, 0); }
FormulaPtr read_formula(const SExpr& e) { return read_formula_rec(e, 0); }
DerivPtr read_deriv(const SExpr& e) { return read_deriv_rec(e, 0); }
NotationPtr read_notation(const SExpr& e) { return read_notation_rec(e, 0); }

TermPtr read_term(const std::string& text) { return read_term(parse_sexpr(text)); }
FormulaPtr read_formula(const std::string& text) {
  return read_formula(parse_sexpr(text));
}
DerivPtr read_deriv(const std::string& text) { return read_deriv(parse_sexpr(text)); }
NotationPtr read_notation(const std::string& text) {
  return read_notation(parse_sexpr(text));
}

}  // namespace ba
