#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quadtor/polyff.hpp>

#include <set>

using namespace quadtor;

namespace {

PolyF poly_of(const FiniteField& F, std::initializer_list<long> coeffs) {
  std::vector<FFElem> c;
  for (long v : coeffs) c.push_back(F.from_int(v));
  return PolyF(std::move(c));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  FiniteField F = FiniteField::prime_field(7);
  CHECK(F.order() == 7);
  CHECK(F.degree() == 1);
  for (std::uint64_t i = 0; i < 7; ++i) {
    FFElem a = F.element_by_index(i);
    CHECK(F.index_of(a) == i);
    CHECK(a + F.zero() == a);
    CHECK(a * F.one() == a);
    CHECK(is_zero(a - a));
    if (!is_zero(a)) {
      CHECK(a * inv(a) == F.one());
      CHECK(pow_ff(a, 6) == F.one());
    }
  }
  CHECK(F.from_int(3) * F.from_int(5) == F.from_int(1));
  CHECK(F.from_int(-1) == F.from_int(6));
  CHECK_THROWS_AS(inv(F.zero()), DivisionByZero);
  CHECK_THROWS_AS(FiniteField::prime_field(6), UnsupportedField);
}

TEST_CASE("quadratic extension residue field") {
  // Residue field of the inert prime 5 in Z[sqrt(-2)].
  FiniteField F = FiniteField::inert_quadratic(5, Int(-2));
  CHECK(F.order() == 25);
  FFElem z = F.gen();
  CHECK(z * z == F.from_int(-2));
  // Every nonzero element is invertible and the group has exponent 24.
  for (std::uint64_t i = 1; i < 25; ++i) {
    FFElem a = F.element_by_index(i);
    CHECK(a * inv(a) == F.one());
    CHECK(pow_ff(a, 24) == F.one());
  }
  // -2 is a residue mod 5 is false, so the construction must reject d = -11
  // at p = 5 where -11 = -1 is a square... it is not: (-1|5) = 1.
  CHECK_THROWS_AS(FiniteField::inert_quadratic(5, Int(-11)), UnsupportedField);
  CHECK_THROWS_AS(FiniteField::extension(5, {1, 0, 4, 1}), UnsupportedField);
}

TEST_CASE("cubic extension") {
  // z^3 + z + 1 has no root mod 5, hence is irreducible.
  FiniteField F = FiniteField::extension(5, {1, 1, 0, 1});
  CHECK(F.order() == 125);
  FFElem z = F.gen();
  CHECK(pow_ff(z, 3) + z + F.one() == F.zero());
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    FFElem a = F.random_element(rng), b = F.random_element(rng);
    CHECK(a * b == b * a);
    if (!is_zero(b)) CHECK((a / b) * b == a);
    CHECK(pow_ff(a + b, 5) == pow_ff(a, 5) + pow_ff(b, 5));
  }
}

TEST_CASE("squares and square roots") {
  for (std::uint64_t p : {3, 7, 13, 101}) {
    FiniteField F = FiniteField::prime_field(p);
    std::set<std::uint64_t> squares;
    for (std::uint64_t i = 0; i < p; ++i) {
      FFElem a = F.element_by_index(i);
      squares.insert(F.index_of(a * a));
    }
    int residues = 0;
    for (std::uint64_t i = 0; i < p; ++i) {
      FFElem a = F.element_by_index(i);
      bool sq = squares.count(i) > 0;
      CHECK(is_square_ff(a) == sq);
      auto r = sqrt_ff(a);
      CHECK(r.has_value() == sq);
      if (r) CHECK((*r) * (*r) == a);
      if (!is_zero(a) && sq) ++residues;
    }
    CHECK(residues == static_cast<int>((p - 1) / 2));
  }
  // Extension field: the generator of F_25 squares to -2.
  FiniteField F = FiniteField::inert_quadratic(5, Int(-2));
  for (std::uint64_t i = 0; i < 25; ++i) {
    FFElem a = F.element_by_index(i);
    auto r = sqrt_ff(a * a);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == a * a);
  }
  CHECK(chi_ff(F.zero()) == 0);
}

TEST_CASE("polynomial division and gcd over F_p") {
  FiniteField F = FiniteField::prime_field(13);
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<FFElem> ac, bc;
    for (int i = 0; i < 8; ++i) ac.push_back(F.random_element(rng));
    for (int i = 0; i < 4; ++i) bc.push_back(F.random_element(rng));
    PolyF a(std::move(ac)), b(std::move(bc));
    if (b.c.empty()) continue;
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(deg(r) < deg(b));
  }
  PolyF g = poly_of(F, {1, 1});
  PolyF f1 = g * poly_of(F, {2, 0, 1});
  PolyF f2 = g * poly_of(F, {3, 1});
  PolyF d = gcd_monic(f1, f2);
  CHECK(d == g);
}

TEST_CASE("factor x^2+1 over small prime fields") {
  FiniteField F5 = FiniteField::prime_field(5);
  auto fac5 = factor_mod(poly_of(F5, {1, 0, 1}));
  REQUIRE(fac5.size() == 2);
  CHECK(fac5[0].first == poly_of(F5, {2, 1}));
  CHECK(fac5[1].first == poly_of(F5, {3, 1}));
  CHECK(fac5[0].second == 1);
  CHECK(fac5[1].second == 1);

  FiniteField F3 = FiniteField::prime_field(3);
  auto fac3 = factor_mod(poly_of(F3, {1, 0, 1}));
  REQUIRE(fac3.size() == 1);
  CHECK(deg(fac3[0].first) == 2);
  CHECK(fac3[0].second == 1);
  CHECK(is_irreducible_mod(fac3[0].first));
}

TEST_CASE("factorization reassembles with multiplicities") {
  FiniteField F7 = FiniteField::prime_field(7);
  PolyF f = poly_pow(poly_of(F7, {1, 1}), 2) * poly_pow(poly_of(F7, {2, 1}), 3);
  auto fac = factor_mod(f);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0] == std::make_pair(poly_of(F7, {1, 1}), 2u));
  CHECK(fac[1] == std::make_pair(poly_of(F7, {2, 1}), 3u));

  // Multiplicity divisible by the characteristic.
  FiniteField F5 = FiniteField::prime_field(5);
  auto fp = factor_mod(poly_pow(poly_of(F5, {1, 1}), 5));
  REQUIRE(fp.size() == 1);
  CHECK(fp[0] == std::make_pair(poly_of(F5, {1, 1}), 5u));

  FiniteField F3 = FiniteField::prime_field(3);
  auto fq = factor_mod(poly_pow(poly_of(F3, {1, 0, 1}), 3));
  REQUIRE(fq.size() == 1);
  CHECK(fq[0] == std::make_pair(poly_of(F3, {1, 0, 1}), 3u));
}

TEST_CASE("random factor round trips") {
  Rng seeds(99);
  for (std::uint64_t p : {5, 13}) {
    FiniteField F = FiniteField::prime_field(p);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<FFElem> cs;
      for (int i = 0; i < 7; ++i) cs.push_back(F.random_element(seeds));
      PolyF f(std::move(cs));
      if (deg(f) < 1) continue;
      auto fac = factor_mod(f, seeds);
      PolyF prod = poly_const(lc(f));
      for (const auto& [g, m] : fac) {
        CHECK(is_irreducible_mod(g));
        prod = prod * poly_pow(g, m);
      }
      CHECK(prod == f);
      // Two different seeds give the same factor set.
      Rng other(7777 + trial);
      CHECK(factor_mod(f, other) == fac);
    }
  }
  // Same exercise over F_25.
  FiniteField F = FiniteField::inert_quadratic(5, Int(-2));
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<FFElem> cs;
    for (int i = 0; i < 5; ++i) cs.push_back(F.random_element(seeds));
    PolyF f(std::move(cs));
    if (deg(f) < 1) continue;
    auto fac = factor_mod(f, seeds);
    PolyF prod = poly_const(lc(f));
    for (const auto& [g, m] : fac) prod = prod * poly_pow(g, m);
    CHECK(prod == f);
  }
}

TEST_CASE("roots") {
  FiniteField F7 = FiniteField::prime_field(7);
  auto r = roots_mod(poly_of(F7, {-1, 0, 0, 1}));
  REQUIRE(r.size() == 3);
  CHECK(F7.index_of(r[0]) == 1);
  CHECK(F7.index_of(r[1]) == 2);
  CHECK(F7.index_of(r[2]) == 4);

  FiniteField F = FiniteField::inert_quadratic(5, Int(-2));
  auto rz = roots_mod(poly_of(F, {2, 0, 1}));
  REQUIRE(rz.size() == 2);
  for (const FFElem& x : rz) CHECK(x * x == F.from_int(-2));

  CHECK(roots_mod(poly_of(F7, {1, 0, 1})).empty());
  // Repeated roots are reported once.
  CHECK(roots_mod(poly_pow(poly_of(F7, {3, 1}), 4)).size() == 1);
}

TEST_CASE("degree eight sample factors over F_5") {
  FiniteField F5 = FiniteField::prime_field(5);
  PolyF f = poly_of(F5, {33, -44, 82, -40, 47, -8, 10, 0, 1});
  auto fac = factor_mod(f);
  int total = 0;
  PolyF prod = poly_const(lc(f));
  for (const auto& [g, m] : fac) {
    total += deg(g) * static_cast<int>(m);
    prod = prod * poly_pow(g, m);
  }
  CHECK(total == 8);
  CHECK(prod == f);
}
