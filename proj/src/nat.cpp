#include "ba/nat.hpp"

#include "ba/error.hpp"
#include "ba/limits.hpp"

namespace ba {

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::OpenTerm:
    case ErrorKind::OpenFormula:
    case ErrorKind::UnboundedQuantifier:
    case ErrorKind::BadConnective:
    case ErrorKind::Precondition:
    case ErrorKind::WellFormed:
    case ErrorKind::NotBasic:
      return 3;
    case ErrorKind::Invariant:
    case ErrorKind::RankViolation:
    case ErrorKind::NoTrueLiteral:
    case ErrorKind::NoFalseChild:
    case ErrorKind::AxiomAmongSolutions:
    case ErrorKind::StepBudget:
      return 4;
    case ErrorKind::WidthExceeded:
    case ErrorKind::ResourceCap:
      return 5;
  }
  return 1;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::OpenTerm: return "open term";
    case ErrorKind::OpenFormula: return "open formula";
    case ErrorKind::UnboundedQuantifier: return "unbounded quantifier";
    case ErrorKind::BadConnective: return "bad connective";
    case ErrorKind::Precondition: return "precondition failed";
    case ErrorKind::WellFormed: return "not well-formed";
    case ErrorKind::NotBasic: return "not a basic axiom";
    case ErrorKind::Invariant: return "invariant violation";
    case ErrorKind::RankViolation: return "rank violation";
    case ErrorKind::NoTrueLiteral: return "no true literal";
    case ErrorKind::NoFalseChild: return "no false child";
    case ErrorKind::AxiomAmongSolutions: return "axiom among solutions";
    case ErrorKind::StepBudget: return "step budget exceeded";
    case ErrorKind::WidthExceeded: return "width exceeded";
    case ErrorKind::ResourceCap: return "resource cap";
  }
  return "error";
}

Limits& limits() {
  static Limits instance;
  return instance;
}

Nat pow2(const Nat& e) {
  if (e >= limits().tower_bits)
    raise(ErrorKind::ResourceCap,
          "2^" + e.str() + " exceeds the tower cap of " + std::to_string(limits().tower_bits) +
              " bits");
  Nat r = 1;
  r <<= static_cast<uint64_t>(e);
  return r;
}

Nat pow2_minus1(const Nat& e) { return pow2(e) - 1; }

Nat iexp(uint64_t n, const Nat& x) {
  Nat r = x;
  for (uint64_t i = 0; i < n; ++i) r = pow2(r);
  return r;
}

}  // namespace ba
