#pragma once

#include <cstdint>

namespace ba {

// Resource caps. Exceeding any of them raises ErrorKind::ResourceCap; results
// are never silently truncated. One mutable global; the engine itself is pure.
struct Limits {
  // Maximum nesting depth accepted by the term/formula parser and builders.
  uint32_t term_depth = 32;
  // Maximum bit length of any value produced by term evaluation.
  uint64_t magnitude_bits = 65536;
  // Quantifier instantiations allowed per top-level truth query.
  uint64_t truth_budget = 1'000'000;
  // Maximum bit length of any value produced by pow2/iexp (heights of E, szf).
  uint64_t tower_bits = 1u << 20;
  // Default reachability depth for explore/BFS enumeration.
  uint32_t explore_depth = 8;
  // Materialized width of omega-branching nodes in explicit trees.
  uint32_t oracle_width = 16;
  // Seed for sampling (axiom checks, generators reachable from the CLI).
  uint64_t seed = 0;
  // Skip the axiom-clause truth check and take the script's word for it.
  bool assume_basic = false;
};

Limits& limits();

// Scoped override, used by tests.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& l) : saved_(limits()) { limits() = l; }
  ~ScopedLimits() { limits() = saved_; }
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace ba
