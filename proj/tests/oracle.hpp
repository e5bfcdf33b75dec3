#pragma once

// Naive reference implementations used only by the test suites.  They trade
// speed for obviousness so that library results can be checked against code
// with no shared logic.

#include <redei/intmod.hpp>

#include <random>
#include <vector>

namespace oracle {

using redei::u64;

// Order of n modulo d by direct iteration.
inline u64 naive_order(u64 n, u64 d) {
  if (d == 1) return 1;
  u64 x = n % d;
  for (u64 t = 1;; ++t) {
    if (x == 1) return t;
    x = redei::mul_mod(x, n % d, d);
  }
}

// All x in [0, m) with x^2 = b (mod m).
inline std::vector<u64> brute_sqrts(u64 b, u64 m) {
  std::vector<u64> out;
  for (u64 x = 0; x < m; ++x)
    if (redei::mul_mod(x, x, m) == b % m) out.push_back(x);
  return out;
}

// x^{p-1} + ... + x + 1 mod m.
inline u64 cyclo_eval(u64 p, u64 x, u64 m) {
  u64 acc = 0;
  for (u64 i = 0; i < p; ++i) acc = (redei::mul_mod(acc, x, m) + 1) % m;
  return acc;
}

// All roots of the p-th cyclotomic polynomial modulo m.
inline std::vector<u64> brute_phi_roots(u64 p, u64 m) {
  std::vector<u64> out;
  for (u64 x = 0; x < m; ++x)
    if (cyclo_eval(p, x, m) == 0) out.push_back(x);
  return out;
}

// Fixed-seed generator so failures reproduce.
inline std::mt19937_64 rng(u64 seed) { return std::mt19937_64{seed}; }

}  // namespace oracle
