#pragma once

#include "ba/deriv.hpp"

namespace ba {

// The infinitary inference a closed derivation node denotes, and the
// derivation denoting its j-th premise. Cuts are canonicalized onto the
// conjunctive side here, with the premises exchanged when that flips the
// stored formula. Past the real arity of a finite symbol, child returns the
// trivial axiom so that width probing stays total; omega-ary symbols accept
// every index.
InfSymbol tp(const DerivPtr& h);
DerivPtr child(const DerivPtr& h, const Nat& j);

// Informative branching width of the denoted symbol.
Nat rng(const DerivPtr& h);

// Height bound with induction-over-t nodes charged m steps.
Nat ord_m(const DerivPtr& h, uint64_t m);

// Largest numeral the unfolding can mention, and the variant that feeds the
// charge parameter: ord(h) is ord_m at m = bit length of ibd(h).
Nat bd(const DerivPtr& h);
Nat ibd(const DerivPtr& h);
Nat ord(const DerivPtr& h);
Nat ord_capped(const DerivPtr& h, uint64_t m);

}  // namespace ba
