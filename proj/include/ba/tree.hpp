#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ba/infsym.hpp"
#include "ba/nat.hpp"
#include "ba/notation.hpp"
#include "ba/sequent.hpp"
#include "json.hpp"

namespace ba {

// Fully materialized derivation tree, the reference the lazy side is checked
// against. Conjunction nodes are cut off at a declared width; subtrees past
// the depth budget become truncated leaves that no test treats as axioms.
struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

struct Tree {
  InfSymbol sym;
  bool truncated = false;
  std::vector<TreePtr> children;
  uint64_t hgt = 0;
  uint64_t node_count = 1;
  Sequent gamma;
};

TreePtr t_node(const InfSymbol& sym, std::vector<TreePtr> children);
TreePtr t_trunc();

uint32_t crk(const TreePtr& t, uint32_t level);

// Symbol equality up to provable equivalence of the decorating formulas.
bool sym_equiv(const InfSymbol& a, const InfSymbol& b);

TreePtr denote(const NotationPtr& h, uint32_t width, uint32_t depth);

TreePtr eager_i(const Nat& k, const FormulaPtr& c, const TreePtr& d);
TreePtr eager_r(const FormulaPtr& c, const TreePtr& d0, const TreePtr& d1,
                uint32_t level);
TreePtr eager_e(const TreePtr& d, uint32_t level);

// d proves gamma with height alpha and cut complexity m at the given level.
bool check_judgment(const TreePtr& d, uint64_t alpha, uint32_t level, uint32_t m,
                    const Sequent& gamma);

TreePtr subtree(const TreePtr& t, const std::vector<Nat>& path);

std::string tree_dump_text(const TreePtr& t);
nlohmann::json tree_dump_json(const TreePtr& t);

}  // namespace ba
