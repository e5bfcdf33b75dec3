#pragma once

// Redei functions R_{n,a} on the projective line over F_q, their evaluation,
// and their cycle structure both by formula and by explicit orbit walking.
//
// Writing (x + s)^n = N(x) + D(x) s with s^2 = a, the function maps a finite
// point x to N(x)/D(x) when D(x) != 0 and to infinity otherwise; infinity is
// always mapped to itself.  R_{n,a} permutes P^1(F_q) exactly when
// gcd(n, q - chi(a)) = 1, and its cycle structure depends only on chi(a)
// and on n modulo q - chi(a).

#include "ffield.hpp"
#include "intmod.hpp"

#include <map>

namespace redei {

// Multiset of cycle lengths: length -> number of cycles of that length.
using CycleStructure = std::map<u64, u64>;

struct RedeiSpec {
  const FieldSpec* field;
  Element a;
  int chi;      // quadratic character of a
  u64 modulus;  // q - chi
  u64 n;        // exponent, reduced into [0, modulus); 0 is never a permutation

  friend bool operator==(const RedeiSpec& x, const RedeiSpec& y) {
    return *x.field == *y.field && x.a == y.a && x.n == y.n;
  }
};

inline RedeiSpec make_redei(const FieldSpec& field, Element a, u64 n) {
  const int chi = field.quadratic_character(a);  // rejects a = 0
  const u64 modulus = chi == 1 ? field.q() - 1 : field.q() + 1;
  return RedeiSpec{&field, std::move(a), chi, modulus, n % modulus};
}

// The pair (N(x), D(x)) with (x + s)^n = N + D s, computed by binary
// powering on such pairs: (N, D)(N', D') = (NN' + aDD', ND' + DN').
inline std::pair<Element, Element> nd_pair(const RedeiSpec& rs, const Element& x) {
  const FieldSpec& F = *rs.field;
  Element rn = F.one(), rd = F.zero();
  Element bn = x, bd = F.one();
  u64 e = rs.n;
  while (e != 0) {
    if (e & 1) {
      Element nn = F.add(F.mul(rn, bn), F.mul(rs.a, F.mul(rd, bd)));
      rd = F.add(F.mul(rn, bd), F.mul(rd, bn));
      rn = std::move(nn);
    }
    e >>= 1;
    if (e != 0) {
      Element nn = F.add(F.mul(bn, bn), F.mul(rs.a, F.mul(bd, bd)));
      bd = F.mul(F.add(bn, bn), bd);
      bn = std::move(nn);
    }
  }
  return {std::move(rn), std::move(rd)};
}

inline ProjPoint eval(const RedeiSpec& rs, const ProjPoint& pt) {
  if (pt.infinite) return ProjPoint::at_infinity();
  auto [num, den] = nd_pair(rs, pt.value);
  if (rs.field->is_zero(den)) return ProjPoint::at_infinity();
  return ProjPoint::finite(rs.field->mul(num, rs.field->inv(den)));
}

inline bool is_permutation(const RedeiSpec& rs) { return std::gcd(rs.n, rs.modulus) == 1; }

// Cycle structure from the divisor formula: phi(d)/ord_d(n) cycles of length
// ord_d(n) for each d | q - chi, plus chi + 1 additional fixed points.
inline CycleStructure theoretical_cycles(const RedeiSpec& rs) {
  if (!is_permutation(rs)) throw std::domain_error("theoretical_cycles: not a permutation");
  CycleStructure cs;
  const Factorization f = factorize(rs.modulus);
  for (u64 d : divisors(f)) {
    const u64 len = mult_order(rs.n, d);
    cs[len] += euler_phi(factorize(d)) / len;
  }
  if (rs.chi == 1) cs[1] += 2;
  return cs;
}

inline u64 fixed_point_count(const RedeiSpec& rs) {
  if (!is_permutation(rs)) throw std::domain_error("fixed_point_count: not a permutation");
  // gcd(0, m) = m covers n = 1
  return std::gcd(rs.n - 1, rs.modulus) + rs.chi + 1;
}

struct CycleListing {
  CycleStructure structure;
  std::vector<std::vector<ProjPoint>> cycles;  // first-visit order
};

// Decomposes the permutation by walking every orbit in enumeration order.
// A walk that re-enters a visited point anywhere but its own start means the
// map is not injective; that raises internal_error.
inline CycleListing cycle_listing(const RedeiSpec& rs) {
  const FieldSpec& F = *rs.field;
  const u64 count = F.point_count();
  std::vector<bool> visited(count, false);
  CycleListing out;
  for (u64 start = 0; start < count; ++start) {
    if (visited[start]) continue;
    std::vector<ProjPoint> orbit;
    u64 idx = start;
    do {
      visited[idx] = true;
      orbit.push_back(F.point_at(idx));
      idx = F.index_of(eval(rs, orbit.back()));
      if (visited[idx] && idx != start)
        throw internal_error("cycle_listing: map is not injective (collision at index " +
                             std::to_string(idx) + ")");
    } while (idx != start);
    ++out.structure[orbit.size()];
    out.cycles.push_back(std::move(orbit));
  }
  return out;
}

inline CycleStructure empirical_cycles(const RedeiSpec& rs) { return cycle_listing(rs).structure; }

// Cycle structure of the monomial permutation x -> x^n of F_q: the divisor
// formula over q - 1 plus one fixed point for 0.  This is the chi = +1 Redei
// structure with the point at infinity removed.
inline CycleStructure monomial_cycles(u64 n, const FieldSpec& field) {
  const u64 m = field.q() - 1;
  n %= m;
  if (std::gcd(n, m) != 1) throw std::domain_error("monomial_cycles: not a permutation");
  CycleStructure cs;
  for (u64 d : divisors(factorize(m))) {
    const u64 len = mult_order(n, d);
    cs[len] += euler_phi(factorize(d)) / len;
  }
  cs[1] += 1;  // chi + 1 = 2 points, minus the missing point at infinity
  return cs;
}

}  // namespace redei
