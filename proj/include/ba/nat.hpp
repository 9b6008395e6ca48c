#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ba {

// Unsigned arbitrary-precision natural. All engine quantities (numeral
// values, heights, size functionals) are Nats; negatives never appear.
using Nat = boost::multiprecision::cpp_int;

// Number of binary digits: |0| = 0, |1| = 1, |5| = 3.
inline uint64_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return static_cast<uint64_t>(msb(n)) + 1;
}

// Truncated subtraction.
inline Nat monus(const Nat& a, const Nat& b) { return a > b ? Nat(a - b) : Nat(0); }

inline std::string to_string(const Nat& n) { return n.str(); }

// 2^e - 1 and 2^e, guarded by the tower cap (see limits.hpp). Declared here,
// defined in nat.cpp to keep the cap check in one place.
Nat pow2(const Nat& e);
Nat pow2_minus1(const Nat& e);

// Iterated exponential: iexp(0, x) = x, iexp(n+1, x) = 2^iexp(n, x).
Nat iexp(uint64_t n, const Nat& x);

}  // namespace ba
