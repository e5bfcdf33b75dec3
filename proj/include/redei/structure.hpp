#pragma once

// Classification and construction of Redei permutations of P^1(F_q) whose
// cycles all have length 1 or j, for j = 2, 4, or an odd prime.
//
// Everything here works with the integer m = q - chi and its factorization;
// the underlying field never enters.  An even proper divisor d of m is
// "admissible" for (chi, j) when some permutation with gcd(n-1, m) = d has
// only fixed points and j-cycles; such a permutation then has d + chi + 1
// fixed points and (q - d - chi)/j cycles of length j.
//
// Every closed-form exponent produced below is re-verified against its
// defining congruences before being returned; a failure raises
// internal_error instead of emitting a wrong value.

#include "intmod.hpp"

#include <optional>
#include <set>

namespace redei {

inline u64 q_minus_chi(u64 q, int chi) { return chi == 1 ? q - 1 : q + 1; }

inline void validate_chi(int chi) {
  if (chi != 1 && chi != -1) throw std::domain_error("chi must be +1 or -1");
}

inline void validate_cycle_length(u64 j) {
  if (j == 2 || j == 4) return;
  if (j >= 3 && j % 2 == 1 && is_prime(j)) return;
  throw std::domain_error("cycle length must be 2, 4, or an odd prime, got " + std::to_string(j));
}

struct AdmissibleQuery {
  Factorization qminus;  // factorization of q - chi
  int chi;
  u64 j;

  AdmissibleQuery(Factorization qm, int chi_, u64 j_)
      : qminus(std::move(qm)), chi(chi_), j(j_) {
    validate_chi(chi);
    validate_cycle_length(j);
    if (j > qminus.value)
      throw std::domain_error("cycle length " + std::to_string(j) +
                              " exceeds q - chi = " + std::to_string(qminus.value));
  }
};

// Reason the divisor d fails the admissibility conditions, or nullopt when it
// is admissible.  d must be a proper divisor of q - chi.
inline std::optional<std::string> admissibility_violation(const AdmissibleQuery& qy, u64 d) {
  const u64 m = qy.qminus.value;
  if (d == 0 || d >= m || m % d != 0)
    throw std::domain_error("admissibility: " + std::to_string(d) +
                            " is not a proper divisor of " + std::to_string(m));
  if (d % 2 != 0) return "d is odd, but an admissible divisor is always even";
  const unsigned nu2_m = qy.qminus.exponent_of(2);
  const unsigned nu2_d = valuation(2, d);
  if (qy.j == 2) {
    if (nu2_d != 1 && nu2_d != nu2_m && nu2_d + 1 != nu2_m)
      return "nu_2(d) = " + std::to_string(nu2_d) + " is not 1, nu_2(q-chi)-1, or nu_2(q-chi) = " +
             std::to_string(nu2_m);
    const u64 g = std::gcd(d, m / d);
    if (g != 1 && g != 2)
      return "gcd(d, (q-chi)/d) = " + std::to_string(g) + " does not divide 2";
    return std::nullopt;
  }
  if (qy.j == 4) {
    if (nu2_d != nu2_m)
      return "nu_2(d) = " + std::to_string(nu2_d) + " differs from nu_2(q-chi) = " +
             std::to_string(nu2_m);
    for (const auto& [p, alpha] : qy.qminus.factors) {
      if (p % 4 != 3) continue;
      if (valuation(p, d) != alpha)
        return "prime " + std::to_string(p) + " = 3 (mod 4) must divide d with full exponent " +
               std::to_string(alpha);
    }
    if (std::gcd(d, m / d) != 1)
      return "gcd(d, (q-chi)/d) = " + std::to_string(std::gcd(d, m / d)) + " is not 1";
    return std::nullopt;
  }
  // odd prime j = p
  const u64 p = qy.j;
  for (const auto& [pi, alpha] : qy.qminus.factors) {
    const unsigned beta = valuation(pi, d);
    if (pi == p) {
      if (alpha == 1) {
        if (beta != 1)
          return "nu_" + std::to_string(p) + "(d) must be 1 when " + std::to_string(p) +
                 " || q-chi";
      } else if (beta + 1 != alpha && beta != alpha) {
        return "nu_" + std::to_string(p) + "(d) = " + std::to_string(beta) +
               " must be alpha-1 or alpha = " + std::to_string(alpha);
      }
    } else if (pi % p == 1) {
      if (beta != 0 && beta != alpha)
        return "prime " + std::to_string(pi) + " = 1 (mod " + std::to_string(p) +
               ") must divide d with exponent 0 or " + std::to_string(alpha);
    } else {
      if (beta != alpha)
        return "prime " + std::to_string(pi) + " (not 1 mod " + std::to_string(p) +
               ") must divide d with full exponent " + std::to_string(alpha);
    }
  }
  return std::nullopt;
}

inline bool is_admissible(const AdmissibleQuery& qy, u64 d) {
  return !admissibility_violation(qy, d).has_value();
}

inline std::vector<u64> admissible_divisors(const AdmissibleQuery& qy) {
  std::vector<u64> out;
  for (u64 d : divisors(qy.qminus))
    if (d < qy.qminus.value && is_admissible(qy, d)) out.push_back(d);
  return out;
}

// Does any permutation with only 1- and j-cycles exist for this (q, chi)?
inline bool exists_1j(const Factorization& qminus, int chi, u64 j) {
  validate_chi(chi);
  validate_cycle_length(j);
  if (j == 2) return qminus.value != 2;
  if (j == 4) {
    for (const auto& [p, e] : qminus.factors) {
      (void)e;
      if (p % 4 == 1) return true;
    }
    return false;
  }
  for (const auto& [p, e] : qminus.factors) {
    if (p % j == 1) return true;
    if (p == j && e >= 2) return true;
  }
  return false;
}

// Number of permutations with gcd(n-1, q-chi) = d and only 1- and j-cycles.
inline u64 count_Md(const AdmissibleQuery& qy, u64 d) {
  if (auto why = admissibility_violation(qy, d))
    throw std::domain_error("count_Md: d = " + std::to_string(d) + " inadmissible: " + *why);
  const unsigned nu2_m = qy.qminus.exponent_of(2);
  const unsigned nu2_d = valuation(2, d);
  if (qy.j == 2) {
    if (nu2_d == nu2_m || (nu2_d + 1 == nu2_m && nu2_d >= 1)) return 1;
    return 2;  // nu_2(d) = 1 and nu_2(q-chi) >= 3
  }
  if (qy.j == 4) {
    u64 count = 1;
    for (const auto& [p, e] : qy.qminus.factors) {
      (void)e;
      if (p % 4 == 1 && d % p != 0) count *= 2;
    }
    return count;
  }
  const u64 p = qy.j;
  u64 count = 1;
  for (const auto& [pi, e] : qy.qminus.factors) {
    (void)e;
    if (pi % p == 1 && d % pi != 0) count *= p - 1;
  }
  const unsigned alpha = qy.qminus.exponent_of(p);
  if (alpha >= 1 && valuation(p, d) + 1 == alpha) count *= p - 1;
  return count;
}

// Total number of permutations with only 1- and j-cycles, over all d.
inline u64 count_M(const Factorization& qminus, int chi, u64 j) {
  validate_chi(chi);
  validate_cycle_length(j);
  if (j == 2) {
    const unsigned alpha0 = qminus.exponent_of(2);
    u64 r = 0;  // odd primes dividing q - chi
    for (const auto& [p, e] : qminus.factors) {
      (void)e;
      if (p != 2) ++r;
    }
    if (alpha0 == 0) return 0;  // q - chi odd only when q - chi = 1
    const unsigned extra = alpha0 == 1 ? 0 : (alpha0 == 2 ? 1 : 2);
    return (u64(1) << (r + extra)) - 1;
  }
  if (j == 4) {
    u64 r = 0;
    for (const auto& [p, e] : qminus.factors) {
      (void)e;
      if (p % 4 == 1) ++r;
    }
    u64 total = 1;
    for (u64 i = 0; i < r; ++i) total *= 3;
    return total - 1;
  }
  u64 r = 0;
  for (const auto& [p, e] : qminus.factors) {
    (void)e;
    if (p % j == 1) ++r;
  }
  if (qminus.exponent_of(j) >= 2) ++r;
  u64 total = 1;
  for (u64 i = 0; i < r; ++i) total *= j;
  return total - 1;
}

namespace detail {

// Common re-verification: n is a unit with gcd(n-1, m) = d, and n has
// multiplicative order j modulo m (so the non-fixed cycles have length j).
inline void verify_exponent(u64 n, u64 m, u64 d, u64 j, const char* who) {
  if (n == 0 || n >= m || std::gcd(n, m) != 1 || (n > 1 && std::gcd(n - 1, m) != d) ||
      (n == 1 && d != m) || mult_order(n, m) != j)
    throw internal_error(std::string(who) + ": constructed exponent " + std::to_string(n) +
                         " fails verification for d = " + std::to_string(d));
}

}  // namespace detail

// The involutions (order-2 permutations) with gcd(n-1, q-chi) = d, from the
// closed form n = k(q-chi)/d - 1 with the case-dependent residue k mod d.
inline std::vector<u64> construct_involutions(const Factorization& qminus, int chi, u64 d) {
  AdmissibleQuery qy(qminus, chi, 2);
  if (auto why = admissibility_violation(qy, d))
    throw std::domain_error("construct_involutions: " + *why);
  const u64 m = qminus.value;
  const u64 quot = m / d;
  const unsigned nu2_m = qminus.exponent_of(2);
  const unsigned nu2_d = valuation(2, d);
  const u64 phi_d = euler_phi(factorize(d));
  std::vector<u64> ks;
  if (nu2_d == nu2_m) {
    ks = {mul_mod(2 % d, pow_mod(quot % d, phi_d - 1, d), d)};
  } else if (nu2_d + 1 == nu2_m && nu2_d >= 1) {
    ks = {(pow_mod((m / (2 * d)) % d, phi_d - 1, d) + d / 2) % d};
  } else {  // nu2_d == 1, nu2_m >= 3: two involutions
    const u64 base = pow_mod((m / (2 * d)) % d, phi_d - 1, d);
    ks = {base, (base + d / 2) % d};
  }
  std::vector<u64> out;
  for (u64 k : ks) {
    const u64 n = (mul_mod(k, quot, m) + m - 1) % m;
    detail::verify_exponent(n, m, d, 2, "construct_involutions");
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Involutions with the minimum possible number of fixed points, two; these
// require chi = -1 and d = 2.
inline std::vector<u64> involutions_two_fixed(u64 q) {
  if (q < 3 || q % 2 == 0) throw std::domain_error("involutions_two_fixed: q must be odd, >= 3");
  const u64 m = q + 1;
  std::vector<u64> out{q % m};
  if (valuation(2, m) >= 3) out.push_back((q - 1) / 2);
  for (u64 n : out) detail::verify_exponent(n, m, 2, 2, "involutions_two_fixed");
  std::sort(out.begin(), out.end());
  return out;
}

// Involutions with four fixed points, as (n, chi) pairs; chi = +1 entries
// first, exponents ascending within each character.
inline std::vector<std::pair<u64, int>> involutions_four_fixed(u64 q) {
  if (q < 3 || q % 2 == 0) throw std::domain_error("involutions_four_fixed: q must be odd, >= 3");
  std::vector<std::pair<u64, int>> out;
  if (q > 3) {  // chi = +1, d = 2: q - 1 > 2 needed for d to be proper
    if (q % 8 == 1) {
      out.emplace_back((q - 3) / 2, 1);
      out.emplace_back(q - 2, 1);
    } else {
      out.emplace_back(q - 2, 1);  // q = 3, 5, 7 (mod 8)
    }
  }
  if (q > 3) {  // chi = -1, d = 4: q + 1 > 4 needed for d to be proper
    if (q % 8 == 3) out.emplace_back((q - 1) / 2, -1);
    if (q % 32 == 7) out.emplace_back((3 * q - 1) / 4, -1);
    if (q % 32 == 23) out.emplace_back((q - 3) / 4, -1);
  }
  for (auto [n, chi] : out) {
    const u64 d = chi == 1 ? 2 : 4;
    detail::verify_exponent(n, q_minus_chi(q, chi), d, 2, "involutions_four_fixed");
  }
  return out;
}

inline std::vector<u64> construct_3_cycles(const Factorization& qminus, int chi, u64 d);
inline std::vector<u64> construct_5_cycles(const Factorization& qminus, int chi, u64 d);

namespace detail {

// Completes a p-cycle construction: combines each residue with n = 1 (mod d),
// expands to all solutions modulo m, applies the nu_p filter when
// nu_p(d) = nu_p(m) - 1, verifies, sorts, and checks the count.
inline std::vector<u64> finish_p_cycles(const AdmissibleQuery& qy, u64 d, u64 p,
                                        const std::vector<Congruence>& systems,
                                        const char* who) {
  const u64 m = qy.qminus.value;
  const unsigned alpha = qy.qminus.exponent_of(p);
  const bool filter = alpha >= 1 && valuation(p, d) + 1 == alpha;
  std::set<u64> found;
  for (const Congruence& base : systems) {
    const Congruence merged = crt({{1, d}, base});
    for (u64 n = merged.value; n < m; n += merged.modulus) {
      if (filter) {
        // discard nu_p(n - 1) >= nu_p(q - chi); n = 1 counts as infinite
        if (n == 1 || valuation(p, n - 1) >= alpha) continue;
      }
      found.insert(n);
    }
  }
  std::vector<u64> out(found.begin(), found.end());
  for (u64 n : out) verify_exponent(n, m, d, p, who);
  if (out.size() != count_Md(qy, d))
    throw internal_error(std::string(who) + ": found " + std::to_string(out.size()) +
                         " exponents for d = " + std::to_string(d) + ", expected " +
                         std::to_string(count_Md(qy, d)));
  return out;
}

}  // namespace detail

// All permutations with 1- and p-cycles and gcd(n-1, q-chi) = d, for an odd
// prime p: n = 1 (mod d) with n a root of the p-th cyclotomic polynomial
// modulo (q-chi)/d, assembled prime power by prime power.  For p = 3 and
// p = 5 the result is cross-checked against the square-root pipelines.
inline std::vector<u64> construct_p_cycles(const Factorization& qminus, int chi, u64 p, u64 d) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("construct_p_cycles: cycle length must be an odd prime");
  AdmissibleQuery qy(qminus, chi, p);
  if (auto why = admissibility_violation(qy, d))
    throw std::domain_error("construct_p_cycles: " + *why);
  const u64 quot = qminus.value / d;
  std::vector<Congruence> systems{{0, 1}};
  for (const auto& [pp, e] : factorize(quot).factors) {
    const std::vector<u64> roots = phi_p_roots(p, pp, e);
    if (roots.empty())
      throw internal_error("construct_p_cycles: no cyclotomic roots mod " + std::to_string(pp) +
                           "^" + std::to_string(e) + " despite admissibility");
    const u64 ppe = pow_checked(pp, e);
    std::vector<Congruence> next;
    next.reserve(systems.size() * roots.size());
    for (const Congruence& c : systems)
      for (u64 r : roots) next.push_back(crt({c, {r, ppe}}));
    systems = std::move(next);
  }
  std::vector<u64> out = detail::finish_p_cycles(qy, d, p, systems, "construct_p_cycles");
  if (p == 3 && out != construct_3_cycles(qminus, chi, d))
    throw internal_error("construct_p_cycles: disagreement with the p = 3 square-root pipeline");
  if (p == 5 && out != construct_5_cycles(qminus, chi, d))
    throw internal_error("construct_p_cycles: disagreement with the p = 5 square-root pipeline");
  return out;
}

// The p = 3 pipeline: roots of x^2 + x + 1 = 0 (mod (q-chi)/d) obtained from
// square roots of -3 via y = 2n + 1.
inline std::vector<u64> construct_3_cycles(const Factorization& qminus, int chi, u64 d) {
  AdmissibleQuery qy(qminus, chi, 3);
  if (auto why = admissibility_violation(qy, d))
    throw std::domain_error("construct_3_cycles: " + *why);
  const u64 quot = qminus.value / d;
  const Factorization qf = factorize(quot);
  const u64 inv2 = inv_mod(2 % quot, quot);
  std::vector<Congruence> systems;
  for (u64 y : sqrt_mod(-3, qf)) {
    // 2n = y - 1 (mod quot)
    systems.push_back({mul_mod((y + quot - 1) % quot, inv2, quot), quot});
  }
  return detail::finish_p_cycles(qy, d, 3, systems, "construct_3_cycles");
}

// The p = 5 pipeline: z^2 = 5, then 2y = z - 1, then m'^2 = y^2 - 4, and
// finally 2n = m' + y, all modulo (q-chi)/d.
inline std::vector<u64> construct_5_cycles(const Factorization& qminus, int chi, u64 d) {
  AdmissibleQuery qy(qminus, chi, 5);
  if (auto why = admissibility_violation(qy, d))
    throw std::domain_error("construct_5_cycles: " + *why);
  const u64 quot = qminus.value / d;
  const Factorization qf = factorize(quot);
  const u64 inv2 = inv_mod(2 % quot, quot);
  std::vector<Congruence> systems;
  for (u64 z : sqrt_mod(5, qf)) {
    const u64 y = mul_mod((z + quot - 1) % quot, inv2, quot);
    const u64 disc = (mul_mod(y, y, quot) + quot - 4 % quot) % quot;
    for (u64 mp : sqrt_mod(static_cast<i64>(disc), qf))
      systems.push_back({mul_mod((mp + y) % quot, inv2, quot), quot});
  }
  return detail::finish_p_cycles(qy, d, 5, systems, "construct_5_cycles");
}

// Permutations with 1- and 3-cycles and two (chi = -1) or four (chi = 1)
// fixed points when (q - chi)/2 is a prime p = 7 (mod 12), via Lagrange's
// exponent for the square roots of -3: y = +-(-3)^{(p+1)/4} (mod p) and
// n = (p+1)/2 (y - 1) + p (mod 2p).
inline std::vector<u64> lagrange_3cycles(u64 q, int chi) {
  validate_chi(chi);
  if (q < 3 || q % 2 == 0) throw std::domain_error("lagrange_3cycles: q must be odd, >= 3");
  const u64 m = q_minus_chi(q, chi);
  const u64 p = m / 2;
  if (m % 2 != 0 || !is_prime(p) || p % 12 != 7)
    throw std::domain_error("lagrange_3cycles: requires (q-chi)/2 to be a prime = 7 (mod 12)");
  const u64 y = pow_mod(p - 3, (p + 1) / 4, p);
  std::vector<u64> out;
  for (u64 root : {y, p - y}) {
    const u64 n = (mul_mod((p + 1) / 2, (root + p - 1) % p, m) + p) % m;
    detail::verify_exponent(n, m, 2, 3, "lagrange_3cycles");
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All permutations with 1- and 4-cycles and gcd(n-1, q-chi) = d: n = 1
// (mod d) and n = l (mod (q-chi)/d) where l^2 = m' (mod (q-chi)/d) for the
// unique involution m' with the same d.
inline std::vector<u64> construct_4_cycles(const Factorization& qminus, int chi, u64 d) {
  AdmissibleQuery qy(qminus, chi, 4);
  if (auto why = admissibility_violation(qy, d))
    throw std::domain_error("construct_4_cycles: " + *why);
  const u64 m = qminus.value;
  const u64 quot = m / d;
  const std::vector<u64> invs = construct_involutions(qminus, chi, d);
  if (invs.size() != 1)
    throw internal_error("construct_4_cycles: expected a unique involution for d = " +
                         std::to_string(d));
  const u64 base = invs[0] % quot;
  std::vector<u64> out;
  for (u64 l : sqrt_mod(static_cast<i64>(base), factorize(quot))) {
    const Congruence merged = crt({{1, d}, {l, quot}});
    if (merged.modulus != m)
      throw internal_error("construct_4_cycles: moduli not coprime despite admissibility");
    detail::verify_exponent(merged.value, m, d, 4, "construct_4_cycles");
    out.push_back(merged.value);
  }
  std::sort(out.begin(), out.end());
  if (out.size() != count_Md(qy, d))
    throw internal_error("construct_4_cycles: found " + std::to_string(out.size()) +
                         " exponents for d = " + std::to_string(d) + ", expected " +
                         std::to_string(count_Md(qy, d)));
  return out;
}

struct ConstructionRow {
  u64 d;
  u64 Md;
  std::vector<u64> n_values;
  u64 fixed_points;
  u64 j_cycles;
};

struct TableReport {
  u64 q;
  int chi;
  u64 j;
  bool exists;
  u64 total_M;
  std::vector<ConstructionRow> rows;
  // existence witnesses: least prime = 1 (mod j) dividing q - chi, and
  // whether j^2 | q - chi (odd j only); both absent for j = 2
  std::optional<u64> witness_prime;
  std::optional<bool> square_divides;
};

inline std::vector<u64> construct_for(const AdmissibleQuery& qy, u64 d) {
  if (qy.j == 2) return construct_involutions(qy.qminus, qy.chi, d);
  if (qy.j == 4) return construct_4_cycles(qy.qminus, qy.chi, d);
  return construct_p_cycles(qy.qminus, qy.chi, qy.j, d);
}

// One full table section: every admissible d with its exponents and counts.
inline TableReport build_table(u64 q, int chi, u64 j) {
  validate_chi(chi);
  if (q < 3 || q % 2 == 0) throw std::domain_error("build_table: q must be odd, >= 3");
  const Factorization qminus = factorize(q_minus_chi(q, chi));
  AdmissibleQuery qy(qminus, chi, j);
  TableReport rep;
  rep.q = q;
  rep.chi = chi;
  rep.j = j;
  rep.exists = exists_1j(qminus, chi, j);
  rep.total_M = count_M(qminus, chi, j);
  if (j != 2) {
    for (const auto& [p, e] : qminus.factors) {
      (void)e;
      if (p % j == 1) {
        rep.witness_prime = p;
        break;
      }
    }
    if (j != 4) rep.square_divides = qminus.exponent_of(j) >= 2;
  }
  u64 sum = 0;
  for (u64 d : admissible_divisors(qy)) {
    ConstructionRow row;
    row.d = d;
    row.Md = count_Md(qy, d);
    row.n_values = construct_for(qy, d);
    if (row.n_values.size() != row.Md)
      throw internal_error("build_table: row count mismatch at d = " + std::to_string(d));
    row.fixed_points = static_cast<u64>(static_cast<i64>(d) + chi + 1);
    const u64 moved = static_cast<u64>(static_cast<i64>(q) - static_cast<i64>(d) - chi);
    if (moved % j != 0)
      throw internal_error("build_table: moved points not divisible by j at d = " +
                           std::to_string(d));
    row.j_cycles = moved / j;
    sum += row.Md;
    rep.rows.push_back(std::move(row));
  }
  if (sum != rep.total_M)
    throw internal_error("build_table: sum of M_d = " + std::to_string(sum) +
                         " differs from M = " + std::to_string(rep.total_M));
  if (rep.exists != !rep.rows.empty())
    throw internal_error("build_table: existence flag contradicts the admissible divisor list");
  return rep;
}

// Odd primes p for which 1- and p-cycle permutations exist for this q - chi:
// p^2 | q - chi, or some prime factor of q - chi is 1 (mod p).
inline std::vector<u64> workable_odd_primes(const Factorization& qminus) {
  std::set<u64> w;
  for (const auto& [p, e] : qminus.factors) {
    if (p != 2 && e >= 2) w.insert(p);
    if (p > 2)
      for (const auto& [r, re] : factorize(p - 1).factors) {
        (void)re;
        if (r != 2) w.insert(r);
      }
  }
  return {w.begin(), w.end()};
}

inline u64 next_prime_after(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

struct TableSet {
  u64 q;
  int chi;
  std::vector<TableReport> sections;  // j = 2, 3, 4, then odd primes 5..P
  u64 no_prime_from;                  // no prime >= this value admits 1- and j-cycles
};

// The full survey for one (q, chi): sections for j = 2, 3, 4 and every odd
// prime up to the largest one that works, plus the "no larger prime" marker.
inline TableSet build_table_set(u64 q, int chi) {
  validate_chi(chi);
  if (q < 3 || q % 2 == 0) throw std::domain_error("build_table_set: q must be odd, >= 3");
  const u64 m = q_minus_chi(q, chi);
  const Factorization qminus = factorize(m);
  const std::vector<u64> workable = workable_odd_primes(qminus);
  const u64 pmax = workable.empty() ? 0 : workable.back();
  TableSet set;
  set.q = q;
  set.chi = chi;
  std::vector<u64> lengths{2};
  if (3 <= m) lengths.push_back(3);
  if (4 <= m) lengths.push_back(4);
  for (u64 p = 5; p <= pmax; p = next_prime_after(p)) lengths.push_back(p);
  u64 last_prime_shown = 2;
  for (u64 j : lengths) {
    set.sections.push_back(build_table(q, chi, j));
    if (j % 2 == 1) last_prime_shown = j;
  }
  set.no_prime_from = next_prime_after(std::max(last_prime_shown, pmax));
  return set;
}

}  // namespace redei
