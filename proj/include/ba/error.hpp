#pragma once

#include <stdexcept>
#include <string>

namespace ba {

// One exception type, tagged by kind. Kinds map onto CLI exit codes:
// parse errors 2, well-formedness 3, invariant breaches 4, resource caps 5.
enum class ErrorKind {
  Parse,
  OpenTerm,
  OpenFormula,
  UnboundedQuantifier,
  BadConnective,
  Precondition,
  WellFormed,
  NotBasic,
  Invariant,
  RankViolation,
  NoTrueLiteral,
  NoFalseChild,
  AxiomAmongSolutions,
  StepBudget,
  WidthExceeded,
  ResourceCap,
};

int exit_code_for(ErrorKind k);
const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace ba
