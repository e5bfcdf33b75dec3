#pragma once

// Modular integer arithmetic on unsigned 64-bit values: factorization,
// multiplicative orders, Chinese remaindering, and square / cyclotomic root
// extraction modulo odd prime powers.  All routines are deterministic.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace redei {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Raised when a value that holds by construction fails its re-verification.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 0) throw std::domain_error("pow_mod: zero modulus");
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// p^e with overflow detection; moduli must stay below 2^63.
inline u64 pow_checked(u64 p, unsigned e) {
  u64 r = 1;
  const u64 limit = u64(1) << 63;
  for (unsigned i = 0; i < e; ++i) {
    if (p != 0 && r > (limit - 1) / p)
      throw std::domain_error("pow_checked: " + std::to_string(p) + "^" +
                              std::to_string(e) + " exceeds 2^63");
    r *= p;
  }
  return r;
}

struct ExtGcd {
  u64 g;  // gcd(a, b) >= 0
  i64 u;  // g == u*a + v*b
  i64 v;
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
  if (a == 0 && b == 0) throw std::domain_error("ext_gcd: gcd(0, 0) undefined");
  i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {static_cast<u64>(r0), s0, t0};
}

// a^{-1} mod m; throws if gcd(a, m) != 1.
inline u64 inv_mod(u64 a, u64 m) {
  if (m == 0) throw std::domain_error("inv_mod: zero modulus");
  a %= m;
  ExtGcd e = ext_gcd(static_cast<i64>(a), static_cast<i64>(m));
  if (e.g != 1)
    throw std::domain_error("inv_mod: " + std::to_string(a) + " not invertible mod " +
                            std::to_string(m));
  i64 u = e.u % static_cast<i64>(m);
  if (u < 0) u += static_cast<i64>(m);
  return static_cast<u64>(u);
}

// Deterministic Miller-Rabin, exact for all n < 2^64.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, unsigned>> factors;  // (prime, exponent), primes ascending

  unsigned exponent_of(u64 p) const {
    for (const auto& [q, e] : factors)
      if (q == p) return e;
    return 0;
  }
};

namespace detail {

// Pollard rho with Floyd cycle detection; n odd composite > 1, no factor <= 10^6.
inline u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void split_factor(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  split_factor(d, primes);
  split_factor(n / d, primes);
}

}  // namespace detail

inline Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: zero has no factorization");
  Factorization f;
  f.value = n;
  std::vector<u64> primes;
  for (u64 p = 2; p <= 1000000 && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  detail::split_factor(n, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().first == p)
      ++f.factors.back().second;
    else
      f.factors.emplace_back(p, 1);
  }
  return f;
}

inline std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> ds{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = ds.size();
    u64 pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t k = 0; k < base; ++k) ds.push_back(ds[k] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline u64 euler_phi(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f.factors) {
    r *= p - 1;
    for (unsigned i = 1; i < e; ++i) r *= p;
  }
  return r;
}

// Largest e with p^e | z.
inline unsigned valuation(u64 p, u64 z) {
  if (p < 2) throw std::domain_error("valuation: base must be at least 2");
  if (z == 0) throw std::domain_error("valuation: undefined at zero");
  unsigned e = 0;
  while (z % p == 0) {
    z /= p;
    ++e;
  }
  return e;
}

// Least t >= 1 with n^t = 1 (mod d); requires gcd(n, d) = 1.
inline u64 mult_order(u64 n, u64 d) {
  if (d == 0) throw std::domain_error("mult_order: zero modulus");
  if (d == 1) return 1;
  n %= d;
  if (std::gcd(n, d) != 1)
    throw std::domain_error("mult_order: " + std::to_string(n) + " not a unit mod " +
                            std::to_string(d));
  u64 t = euler_phi(factorize(d));
  for (const auto& [p, e] : factorize(t).factors) {
    (void)e;
    while (t % p == 0 && pow_mod(n, t / p, d) == 1) t /= p;
  }
  return t;
}

struct Congruence {
  u64 value;    // reduced into [0, modulus)
  u64 modulus;  // >= 1
};

using CongruenceSystem = std::vector<Congruence>;

// Solves a simultaneous congruence system; moduli need not be coprime.
// Returns the unique solution modulo lcm of the moduli.
inline Congruence crt(const CongruenceSystem& sys) {
  if (sys.empty()) throw std::domain_error("crt: empty system");
  u64 r = sys[0].value % sys[0].modulus;
  u64 m = sys[0].modulus;
  for (std::size_t i = 1; i < sys.size(); ++i) {
    const u64 m2 = sys[i].modulus;
    if (m2 == 0) throw std::domain_error("crt: zero modulus");
    const u64 r2 = sys[i].value % m2;
    const u64 g = std::gcd(m, m2);
    if (r % g != r2 % g)
      throw std::domain_error("crt: inconsistent congruences x = " + std::to_string(r) +
                              " (mod " + std::to_string(m) + ") and x = " + std::to_string(r2) +
                              " (mod " + std::to_string(m2) + ")");
    const u64 lcm_div = m2 / g;
    if (lcm_div != 0 && m > (std::numeric_limits<u64>::max() / lcm_div))
      throw std::overflow_error("crt: lcm of moduli overflows");
    // r + m*k = r2 (mod m2)  =>  k = (r2 - r)/g * (m/g)^{-1} (mod m2/g)
    const u64 diff = (r2 + m2 - r % m2) % m2;
    const u64 k = lcm_div == 1 ? 0 : mul_mod((diff / g) % lcm_div, inv_mod((m / g) % lcm_div, lcm_div), lcm_div);
    r = static_cast<u64>(r + static_cast<u128>(m) * k);
    m *= lcm_div;
  }
  return {r % m, m};
}

inline u64 reduce_mod(i64 b, u64 m) {
  i64 v = b % static_cast<i64>(m);
  if (v < 0) v += static_cast<i64>(m);
  return static_cast<u64>(v);
}

// Square roots of b modulo an odd prime p, ascending.  {0} when p | b,
// empty when b is a non-residue, otherwise both roots.  The p = 3 (mod 4)
// power route and Tonelli-Shanks output are both re-verified by squaring.
inline std::vector<u64> sqrt_mod_prime(i64 b, u64 p) {
  if (p < 3 || p % 2 == 0) throw std::domain_error("sqrt_mod_prime: modulus must be an odd prime");
  const u64 bb = reduce_mod(b, p);
  if (bb == 0) return {0};
  if (pow_mod(bb, (p - 1) / 2, p) != 1) return {};
  u64 x;
  if (p % 4 == 3) {
    x = pow_mod(bb, (p + 1) / 4, p);
  } else {
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    unsigned m = s;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(bb, q, p);
    u64 r = pow_mod(bb, (q + 1) / 2, p);
    while (t != 1) {
      u64 tt = t;
      unsigned i = 0;
      while (tt != 1) {
        tt = mul_mod(tt, tt, p);
        ++i;
      }
      u64 b2 = pow_mod(c, u64(1) << (m - i - 1), p);
      m = i;
      c = mul_mod(b2, b2, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b2, p);
    }
    x = r;
  }
  if (mul_mod(x, x, p) != bb) return {};  // cannot happen after the Euler test
  u64 y = p - x;
  if (x > y) std::swap(x, y);
  return {x, y};
}

namespace detail {

inline u64 poly_eval_mod(const std::vector<i64>& coeffs, u64 x, u64 m) {
  u64 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = (mul_mod(acc, x, m) + reduce_mod(*it, m)) % m;
  return acc;
}

inline u64 poly_deriv_eval_mod(const std::vector<i64>& coeffs, u64 x, u64 m) {
  u64 acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 1;)
    acc = (mul_mod(acc, x, m) + mul_mod(reduce_mod(coeffs[i], m), i % m, m)) % m;
  return acc;
}

}  // namespace detail

// Lifts a simple root of f (coefficients ascending) from p^e to p^{e_target}
// by Newton steps; the lift of a simple root is unique, so the result is
// deterministic.  Throws if root is not a root mod p^e or if f'(root) = 0 (mod p).
inline u64 hensel_lift(const std::vector<i64>& coeffs, u64 root, u64 p, unsigned e,
                       unsigned e_target) {
  if (e == 0 || e_target < e) throw std::domain_error("hensel_lift: need 1 <= e <= e_target");
  (void)pow_checked(p, e_target);
  const u64 m_e = pow_checked(p, e);
  u64 r = root % m_e;
  if (detail::poly_eval_mod(coeffs, r, m_e) != 0)
    throw std::domain_error("hensel_lift: not a root modulo p^e");
  if (detail::poly_deriv_eval_mod(coeffs, r, p) == 0)
    throw std::domain_error("hensel_lift: multiple root, no unique lift");
  u64 m = m_e;
  for (unsigned j = e; j < e_target; ++j) {
    const u64 m_next = m * p;
    const u64 fr = detail::poly_eval_mod(coeffs, r, m_next);
    const u64 fpr = detail::poly_deriv_eval_mod(coeffs, r, m_next);
    r = (r + m_next - mul_mod(fr, inv_mod(fpr, m_next), m_next)) % m_next;
    m = m_next;
  }
  return r;
}

// All square roots of b modulo p^l for an odd prime p, ascending.
inline std::vector<u64> sqrt_mod_prime_power(i64 b, u64 p, unsigned l) {
  if (p < 3 || p % 2 == 0)
    throw std::domain_error("sqrt_mod_prime_power: modulus must be an odd prime power");
  if (l == 0) throw std::domain_error("sqrt_mod_prime_power: exponent must be positive");
  const u64 n = pow_checked(p, l);
  const u64 bb = reduce_mod(b, n);
  std::vector<u64> out;
  if (bb == 0) {
    // x^2 = 0 (mod p^l)  <=>  p^ceil(l/2) | x
    const u64 step = pow_checked(p, (l + 1) / 2);
    for (u64 x = 0; x < n; x += step) out.push_back(x);
    return out;
  }
  const unsigned v = valuation(p, bb);
  if (v % 2 != 0) return {};
  const u64 pv = pow_checked(p, v);
  const u64 core = bb / pv;  // unit modulo p
  const std::vector<u64> base = sqrt_mod_prime(static_cast<i64>(core % p), p);
  if (base.empty()) return {};
  const unsigned rem = l - v;
  const u64 m_rem = pow_checked(p, rem);
  u64 y = base[0];
  if (rem > 1)
    y = hensel_lift({-static_cast<i64>(core), 0, 1}, y, p, 1, rem);
  const u64 scale = pow_checked(p, v / 2);
  for (u64 root : {y, m_rem - y})
    for (u64 t = 0; t < scale; ++t)
      out.push_back(scale * (root + t * m_rem));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (u64 x : out)
    if (mul_mod(x, x, n) != bb) throw internal_error("sqrt_mod_prime_power: verification failed");
  return out;
}

// All square roots of b modulo an odd m given by its factorization, ascending.
inline std::vector<u64> sqrt_mod(i64 b, const Factorization& m) {
  if (m.value % 2 == 0) throw std::domain_error("sqrt_mod: even modulus unsupported");
  if (m.value == 1) return {0};
  std::vector<Congruence> partial{{0, 1}};
  for (const auto& [p, e] : m.factors) {
    const std::vector<u64> roots = sqrt_mod_prime_power(b, p, e);
    if (roots.empty()) return {};
    const u64 pe = pow_checked(p, e);
    std::vector<Congruence> next;
    next.reserve(partial.size() * roots.size());
    for (const Congruence& c : partial)
      for (u64 r : roots) next.push_back(crt({c, {r, pe}}));
    partial = std::move(next);
  }
  std::vector<u64> out;
  out.reserve(partial.size());
  for (const Congruence& c : partial) out.push_back(c.value);
  std::sort(out.begin(), out.end());
  return out;
}

// Roots of the p-th cyclotomic polynomial x^{p-1} + ... + x + 1 modulo a
// prime power pp^l, for an odd prime p.  Nonempty only when pp = p (l = 1,
// sole root 1) or pp = 1 (mod p), where the p - 1 roots are the nontrivial
// p-th roots of unity, Hensel-lifted from pp to pp^l.
inline std::vector<u64> phi_p_roots(u64 p, u64 pp, unsigned l) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::domain_error("phi_p_roots: first argument must be an odd prime");
  if (l == 0) throw std::domain_error("phi_p_roots: exponent must be positive");
  if (pp == p) {
    if (l == 1) return {1};
    throw std::domain_error("phi_p_roots: modulus " + std::to_string(p) + "^" +
                            std::to_string(l) + " unsupported (root is not simple)");
  }
  if (pp % p != 1) return {};
  // Element of multiplicative order p modulo pp; first h whose power is nontrivial.
  u64 w = 1;
  for (u64 h = 2; w == 1; ++h) w = pow_mod(h, (pp - 1) / p, pp);
  std::vector<u64> roots;
  roots.reserve(p - 1);
  u64 x = w;
  for (u64 i = 1; i < p; ++i) {
    roots.push_back(x);
    x = mul_mod(x, w, pp);
  }
  if (l > 1) {
    const std::vector<i64> cyclo(p, 1);
    for (u64& r : roots) r = hensel_lift(cyclo, r, pp, 1, l);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace redei
