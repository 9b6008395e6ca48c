#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ba/deriv.hpp"
#include "ba/notation.hpp"
#include "ba/sequent.hpp"
#include "json.hpp"

namespace ba {

// Recipes differ in how many elimination prefixes the initial value carries
// and which cut complexity the base script may use.
enum class RecipeKind { Direct, Single, Double, Iterated };

std::optional<RecipeKind> recipe_by_name(const std::string& name);
const char* recipe_name(RecipeKind kind);

struct SearchParams {
  Sequent phi;             // decoration alphabet, instances matched up to a bound
  uint32_t level = 1;      // class level for side formulas and cut complexity
  Nat s;                   // size parameter bounding embedded derivations
  uint32_t e_count = 0;    // elimination prefixes on the initial value
  DerivPtr base;           // script with free variables among {x}
  std::string x;           // instance variable, empty when the script is closed
  FormulaPtr goal;         // existential endsequent formula
  std::string predicted;   // cost regime tag for bench reports
};

SearchParams make_params(const Sequent& phi, uint32_t level, const Nat& s,
                         uint32_t e_count, const DerivPtr& base);
SearchParams recipe(RecipeKind kind, const DerivPtr& base, uint32_t i,
                    uint32_t j = 0);

struct StepInfo {
  std::string tp;
  std::optional<Nat> child_index;
  Nat ord;
  uint64_t size = 0;
};

struct Witness {
  Nat value;
  uint64_t path_length = 0;
  Nat ord_initial;
  std::vector<StepInfo> trace;
  uint64_t truth_batches = 0;  // issued while choosing neighbours
  uint64_t max_size = 0;
};

NotationPtr initial(const SearchParams& p, const Nat& a);
bool is_solution(const SearchParams& p, const Nat& a, const NotationPtr& h);

// One canonical step; returns h itself exactly at the fixpoint.
NotationPtr neighbour(const SearchParams& p, const Nat& a, const NotationPtr& h);

Witness run_search(const SearchParams& p, const Nat& a);

nlohmann::json witness_json(const Nat& a, const Witness& w);

}  // namespace ba
