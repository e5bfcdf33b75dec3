#pragma once

// Arithmetic in F_{p^k} for odd p, with the projective line P^1(F_q) on top.
// Elements are coefficient vectors of length k, ascending degree, entries
// reduced modulo p.  The enumeration index of an element is its coefficient
// vector read as a base-p integer; projective points are indexed with the
// point at infinity first, then field elements by ascending index.

#include "intmod.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>

namespace redei {

using Element = std::vector<u64>;

struct ProjPoint {
  bool infinite = false;
  Element value;  // meaningful only when finite

  static ProjPoint at_infinity() { return {true, {}}; }
  static ProjPoint finite(Element e) { return {false, std::move(e)}; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

namespace poly {

// Dense univariate polynomials over F_p, ascending coefficients, no
// normalization invariant; helpers trim as needed.  Used only for modulus
// selection (irreducibility testing), not for element arithmetic.

inline void trim(std::vector<u64>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p)) % p;
  trim(c);
  return c;
}

// Remainder of a modulo monic f.
inline std::vector<u64> rem(std::vector<u64> a, const std::vector<u64>& f, u64 p) {
  trim(a);
  const std::size_t k = f.size() - 1;
  while (a.size() > k) {
    const u64 lead = a.back();
    const std::size_t shift = a.size() - 1 - k;
    for (std::size_t i = 0; i <= k; ++i)
      a[shift + i] = (a[shift + i] + p - mul_mod(lead, f[i], p) % p) % p;
    trim(a);
  }
  return a;
}

inline std::vector<u64> pow_mod_poly(std::vector<u64> base, u64 e, const std::vector<u64>& f,
                                     u64 p) {
  std::vector<u64> r{1};
  base = rem(std::move(base), f, p);
  while (e != 0) {
    if (e & 1) r = rem(mul(r, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline std::vector<u64> gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // reduce a mod b after making b monic
    const u64 inv = inv_mod(b.back(), p);
    for (u64& c : b) c = mul_mod(c, inv, p);
    a = rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Monic degree-k f over F_p: f is irreducible iff x^{p^k} = x (mod f) and
// gcd(x^{p^{k/t}} - x, f) = 1 for every prime t | k.
inline bool irreducible(const std::vector<u64>& f, u64 p) {
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (f[0] == 0) return k == 1;  // x | f
  std::vector<std::vector<u64>> frob(k + 1);  // frob[i] = x^{p^i} mod f
  frob[0] = rem({0, 1}, f, p);
  for (std::size_t i = 1; i <= k; ++i) frob[i] = pow_mod_poly(frob[i - 1], p, f, p);
  if (frob[k] != frob[0]) return false;
  for (auto [t, e] : factorize(k).factors) {
    (void)e;
    std::vector<u64> g = frob[k / t];
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (gcd(f, std::move(g), p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

class FieldSpec {
 public:
  // Constructs F_{p^k}.  When no modulus is given and k > 1, the modulus is
  // the lexicographically smallest monic irreducible of degree k, comparing
  // coefficient vectors low-degree-first; for k = 1 it is x.
  static FieldSpec make(u64 p, unsigned k, std::optional<std::vector<u64>> modulus = {}) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("FieldSpec: characteristic must be an odd prime");
    if (k < 1) throw std::domain_error("FieldSpec: extension degree must be positive");
    if (k > 16) throw std::domain_error("FieldSpec: extension degrees above 16 are unsupported");
    const u64 q = pow_checked(p, k);
    std::vector<u64> f;
    if (modulus) {
      f = *modulus;
      if (f.size() != k + 1 || f.back() != 1)
        throw std::domain_error("FieldSpec: modulus must be monic of degree k");
      for (u64 c : f)
        if (c >= p) throw std::domain_error("FieldSpec: modulus coefficients must be reduced mod p");
      if (k > 1 && !poly::irreducible(f, p))
        throw std::domain_error("FieldSpec: modulus is reducible");
    } else if (k == 1) {
      f = {0, 1};
    } else {
      f = smallest_irreducible(p, k);
    }
    return FieldSpec(p, k, q, std::move(f));
  }

  u64 p() const { return p_; }
  unsigned degree() const { return k_; }
  u64 q() const { return q_; }
  const std::vector<u64>& modulus() const { return mod_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const {
    Element e(k_, 0);
    e[0] = 1;
    return e;
  }

  bool is_zero(const Element& a) const {
    for (u64 c : a)
      if (c != 0) return false;
    return true;
  }

  Element from_index(u64 idx) const {
    if (idx >= q_) throw std::domain_error("FieldSpec: element index out of range");
    Element e(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      e[i] = idx % p_;
      idx /= p_;
    }
    return e;
  }

  u64 index_of(const Element& a) const {
    check(a);
    u64 idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
  }

  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element c(k_);
    for (unsigned i = 0; i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
  }

  Element sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element c(k_);
    for (unsigned i = 0; i < k_; ++i) c[i] = (a[i] + p_ - b[i]) % p_;
    return c;
  }

  Element neg(const Element& a) const { return sub(zero(), a); }

  Element mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    if (k_ == 1) return Element{mul_mod(a[0], b[0], p_)};
    std::vector<u64> c(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < k_; ++j)
        c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p_)) % p_;
    }
    // reduce by the monic modulus
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
      const u64 lead = c[i];
      if (lead == 0) continue;
      c[i] = 0;
      for (unsigned j = 0; j < k_; ++j)
        c[i - k_ + j] = (c[i - k_ + j] + p_ - mul_mod(lead, mod_[j], p_) % p_) % p_;
    }
    c.resize(k_);
    return c;
  }

  Element pow(const Element& a, u64 e) const {
    Element r = one();
    Element base = a;
    while (e != 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("FieldSpec: inverse of zero");
    if (k_ == 1) return Element{inv_mod(a[0], p_)};
    return pow(a, q_ - 2);
  }

  // chi(a) = a^{(q-1)/2}, +1 on nonzero squares, -1 on non-squares.
  int quadratic_character(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("quadratic_character: undefined at zero");
    Element s = pow(a, (q_ - 1) / 2);
    if (s == one()) return 1;
    if (s == neg(one())) return -1;
    throw internal_error("quadratic_character: a^{(q-1)/2} is not +-1");
  }

  // Both square roots of a nonzero square, ascending by element index;
  // empty for non-squares.  Results are re-verified by squaring.
  std::vector<Element> sqrt(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("sqrt: undefined at zero");
    if (quadratic_character(a) != 1) return {};
    Element s;
    if (q_ % 4 == 3) {
      s = pow(a, (q_ + 1) / 4);
    } else {
      // Tonelli-Shanks in the multiplicative group of F_q
      u64 qq = q_ - 1;
      unsigned sexp = 0;
      while ((qq & 1) == 0) {
        qq >>= 1;
        ++sexp;
      }
      Element z;
      for (u64 idx = 1;; ++idx) {
        z = from_index(idx);
        if (quadratic_character(z) == -1) break;
      }
      unsigned m = sexp;
      Element c = pow(z, qq);
      Element t = pow(a, qq);
      Element r = pow(a, (qq + 1) / 2);
      while (!(t == one())) {
        Element tt = t;
        unsigned i = 0;
        while (!(tt == one())) {
          tt = mul(tt, tt);
          ++i;
        }
        Element b = pow(c, u64(1) << (m - i - 1));
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
      }
      s = r;
    }
    if (!(mul(s, s) == a)) throw internal_error("sqrt: verification by squaring failed");
    Element s2 = neg(s);
    if (index_of(s) > index_of(s2)) std::swap(s, s2);
    return {s, s2};
  }

  u64 point_count() const { return q_ + 1; }

  ProjPoint point_at(u64 idx) const {
    if (idx == 0) return ProjPoint::at_infinity();
    return ProjPoint::finite(from_index(idx - 1));
  }

  u64 index_of(const ProjPoint& pt) const {
    if (pt.infinite) return 0;
    return index_of(pt.value) + 1;
  }

  std::vector<ProjPoint> proj_points() const {
    std::vector<ProjPoint> pts;
    pts.reserve(q_ + 1);
    for (u64 i = 0; i <= q_; ++i) pts.push_back(point_at(i));
    return pts;
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.mod_ == b.mod_;
  }

 private:
  FieldSpec(u64 p, unsigned k, u64 q, std::vector<u64> mod)
      : p_(p), k_(k), q_(q), mod_(std::move(mod)) {}

  void check(const Element& a) const {
    if (a.size() != k_) throw std::domain_error("FieldSpec: element has wrong length");
    for (u64 c : a)
      if (c >= p_) throw std::domain_error("FieldSpec: element coefficient not reduced");
  }

  static std::vector<u64> smallest_irreducible(u64 p, unsigned k) {
    const u64 count = pow_checked(p, k);
    std::vector<u64> f(k + 1, 0);
    f[k] = 1;
    for (u64 v = 0; v < count; ++v) {
      // low-degree-first lexicographic order: constant coefficient varies slowest
      u64 t = v;
      for (unsigned i = 0; i < k; ++i) {
        f[k - 1 - i] = t % p;
        t /= p;
      }
      if (poly::irreducible(f, p)) return f;
    }
    throw internal_error("smallest_irreducible: no irreducible polynomial found");
  }

  u64 p_;
  unsigned k_;
  u64 q_;
  std::vector<u64> mod_;
};

// Textual element encoding shared with the command-line tool: comma-separated
// coefficients, ascending degree; the point at infinity renders as "inf".
inline std::string format_element(const Element& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

inline std::string format_point(const ProjPoint& pt) {
  return pt.infinite ? "inf" : format_element(pt.value);
}

inline Element parse_element(const std::string& text, const FieldSpec& fs) {
  std::vector<u64> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    u64 v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      throw std::domain_error("parse_element: '" + item + "' is not a number");
    }
    if (pos != item.size()) throw std::domain_error("parse_element: '" + item + "' is not a number");
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw std::domain_error("parse_element: empty element");
  if (coeffs.size() > fs.degree())
    throw std::domain_error("parse_element: too many coefficients for degree " +
                            std::to_string(fs.degree()));
  coeffs.resize(fs.degree(), 0);
  for (u64& c : coeffs)
    if (c >= fs.p()) throw std::domain_error("parse_element: coefficient not reduced mod p");
  return coeffs;
}

}  // namespace redei
