#include <redei/ffield.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "oracle.hpp"

using namespace redei;

namespace {

// Independent irreducibility check: trial division by every monic polynomial
// of degree 1..deg/2, using naive long division (no code shared with poly::).
bool naive_divides(const std::vector<u64>& g, std::vector<u64> f, u64 p) {
  while (f.size() >= g.size()) {
    u64 lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + p - lead * g[i] % p) % p;
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) return true;
  }
  return false;
}

bool naive_irreducible(const std::vector<u64>& f, u64 p) {
  unsigned k = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= k; ++d) {
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u64 v = 0; v < count; ++v) {
      std::vector<u64> g(d + 1, 0);
      g[d] = 1;
      u64 t = v;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      if (naive_divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<u64> naive_smallest_irreducible(u64 p, unsigned k) {
  u64 count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (u64 v = 0; v < count; ++v) {
    std::vector<u64> f(k + 1, 0);
    f[k] = 1;
    u64 t = v;
    for (unsigned i = 0; i < k; ++i) {
      f[k - 1 - i] = t % p;
      t /= p;
    }
    if (naive_irreducible(f, p)) return f;
  }
  FAIL("no irreducible polynomial found");
  return {};
}

}  // namespace

TEST_CASE("make rejects invalid parameters") {
  CHECK_THROWS_AS(FieldSpec::make(2, 3), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::make(9, 1), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::make(5, 0), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::make(3, 17), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::make(4294967311ull, 2), std::domain_error);  // q >= 2^63
  CHECK_THROWS_AS(FieldSpec::make(3, 2, std::vector<u64>{2, 0, 1}), std::domain_error);  // x^2-1 splits
  CHECK_THROWS_AS(FieldSpec::make(3, 2, std::vector<u64>{1, 0, 2}), std::domain_error);  // not monic
  CHECK_THROWS_AS(FieldSpec::make(3, 2, std::vector<u64>{1, 1}), std::domain_error);     // wrong degree
  CHECK_THROWS_AS(FieldSpec::make(3, 2, std::vector<u64>{4, 0, 1}), std::domain_error);  // unreduced
}

TEST_CASE("default modulus is the smallest irreducible, low-degree-first") {
  CHECK(FieldSpec::make(5, 1).modulus() == std::vector<u64>{0, 1});
  CHECK(FieldSpec::make(3, 2).modulus() == std::vector<u64>{1, 0, 1});     // x^2 + 1
  CHECK(FieldSpec::make(5, 3).modulus() == std::vector<u64>{1, 0, 1, 1});  // x^3 + x^2 + 1
  for (u64 p : {3ull, 5ull, 7ull}) {
    for (unsigned k = 2; k <= 4; ++k) {
      FieldSpec fs = FieldSpec::make(p, k);
      REQUIRE(fs.modulus() == naive_smallest_irreducible(p, k));
    }
  }
}

TEST_CASE("field axioms hold on random triples") {
  auto gen = oracle::rng(201);
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {5, 2}, {3, 3}, {7, 2}, {11, 2}, {3, 4}}) {
    FieldSpec fs = FieldSpec::make(p, k);
    std::uniform_int_distribution<u64> dist(0, fs.q() - 1);
    for (int i = 0; i < 250; ++i) {
      Element a = fs.from_index(dist(gen));
      Element b = fs.from_index(dist(gen));
      Element c = fs.from_index(dist(gen));
      REQUIRE(fs.add(a, b) == fs.add(b, a));
      REQUIRE(fs.mul(a, b) == fs.mul(b, a));
      REQUIRE(fs.add(fs.add(a, b), c) == fs.add(a, fs.add(b, c)));
      REQUIRE(fs.mul(fs.mul(a, b), c) == fs.mul(a, fs.mul(b, c)));
      REQUIRE(fs.mul(a, fs.add(b, c)) == fs.add(fs.mul(a, b), fs.mul(a, c)));
      REQUIRE(fs.add(a, fs.neg(a)) == fs.zero());
      REQUIRE(fs.mul(a, fs.one()) == a);
      REQUIRE(fs.sub(a, b) == fs.add(a, fs.neg(b)));
      if (!fs.is_zero(a)) {
        REQUIRE(fs.mul(a, fs.inv(a)) == fs.one());
        REQUIRE(fs.pow(a, fs.q() - 1) == fs.one());
      }
      // Frobenius is additive in characteristic p
      REQUIRE(fs.pow(fs.add(a, b), p) == fs.add(fs.pow(a, p), fs.pow(b, p)));
    }
  }
}

TEST_CASE("element indexing round-trips and orders by base-p digits") {
  FieldSpec fs = FieldSpec::make(3, 3);
  for (u64 i = 0; i < fs.q(); ++i) REQUIRE(fs.index_of(fs.from_index(i)) == i);
  CHECK(fs.from_index(0) == fs.zero());
  CHECK(fs.from_index(1) == fs.one());
  CHECK(fs.from_index(5) == Element{2, 1, 0});  // 5 = 2 + 1*3
  CHECK_THROWS_AS(fs.from_index(27), std::domain_error);
  CHECK_THROWS_AS(fs.index_of(Element{1, 2}), std::domain_error);
}

TEST_CASE("quadratic character is multiplicative and balanced") {
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}, {5, 3}}) {
    FieldSpec fs = FieldSpec::make(p, k);
    u64 squares = 0;
    for (u64 i = 1; i < fs.q(); ++i)
      if (fs.quadratic_character(fs.from_index(i)) == 1) ++squares;
    REQUIRE(squares == (fs.q() - 1) / 2);
  }
  FieldSpec fs = FieldSpec::make(5, 2);
  for (u64 i = 1; i < fs.q(); ++i)
    for (u64 j = 1; j < fs.q(); ++j) {
      Element a = fs.from_index(i), b = fs.from_index(j);
      REQUIRE(fs.quadratic_character(fs.mul(a, b)) ==
              fs.quadratic_character(a) * fs.quadratic_character(b));
    }
  CHECK_THROWS_AS(fs.quadratic_character(fs.zero()), std::domain_error);
}

TEST_CASE("sqrt returns both roots of squares and nothing otherwise") {
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {13, 1}, {17, 1}}) {
    FieldSpec fs = FieldSpec::make(p, k);
    for (u64 i = 1; i < fs.q(); ++i) {
      Element a = fs.from_index(i);
      std::vector<Element> roots = fs.sqrt(a);
      if (fs.quadratic_character(a) == 1) {
        REQUIRE(roots.size() == 2);
        REQUIRE(fs.index_of(roots[0]) < fs.index_of(roots[1]));
        for (const Element& r : roots) REQUIRE(fs.mul(r, r) == a);
        REQUIRE(roots[1] == fs.neg(roots[0]));
      } else {
        REQUIRE(roots.empty());
      }
    }
    CHECK_THROWS_AS(fs.sqrt(fs.zero()), std::domain_error);
  }
}

TEST_CASE("exactly one of q-1, q+1 is divisible by 4 for odd q") {
  // enumerate odd prime powers q <= 1000
  for (u64 q = 3; q <= 1000; q += 2) {
    Factorization f = factorize(q);
    if (f.factors.size() != 1 || f.factors[0].first == 2) continue;
    bool four_minus = (q - 1) % 4 == 0;
    bool two_exactly_plus = (q + 1) % 2 == 0 && (q + 1) % 4 != 0;
    REQUIRE(four_minus == two_exactly_plus);
    bool four_plus = (q + 1) % 4 == 0;
    bool two_exactly_minus = (q - 1) % 2 == 0 && (q - 1) % 4 != 0;
    REQUIRE(four_plus == two_exactly_minus);
  }
}

TEST_CASE("projective points enumerate infinity first, then elements ascending") {
  FieldSpec fs = FieldSpec::make(5, 2);
  std::vector<ProjPoint> pts = fs.proj_points();
  REQUIRE(pts.size() == 26);
  CHECK(pts[0].infinite);
  for (u64 i = 1; i < pts.size(); ++i) {
    CHECK_FALSE(pts[i].infinite);
    CHECK(fs.index_of(pts[i].value) == i - 1);
    CHECK(fs.index_of(pts[i]) == i);
    CHECK(fs.point_at(i) == pts[i]);
  }
  CHECK(fs.point_at(0) == ProjPoint::at_infinity());
}

TEST_CASE("element text encoding round-trips") {
  FieldSpec fs = FieldSpec::make(5, 3);
  Element a = parse_element("2,0,1", fs);
  CHECK(a == Element{2, 0, 1});
  CHECK(format_element(a) == "2,0,1");
  CHECK(parse_element("3", fs) == Element{3, 0, 0});  // short vectors are zero-padded
  CHECK(format_point(ProjPoint::at_infinity()) == "inf");
  CHECK(format_point(ProjPoint::finite(a)) == "2,0,1");
  CHECK_THROWS_AS(parse_element("", fs), std::domain_error);
  CHECK_THROWS_AS(parse_element("1,2,3,4", fs), std::domain_error);
  CHECK_THROWS_AS(parse_element("5", fs), std::domain_error);
  CHECK_THROWS_AS(parse_element("x", fs), std::domain_error);
  CHECK_THROWS_AS(parse_element("1,,2", fs), std::domain_error);
}
