#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadtor/numutil.hpp"

using namespace quadtor;

TEST_CASE("integer square roots") {
  CHECK(isqrt_floor(Int(0)) == 0);
  CHECK(isqrt_floor(Int(35)) == 5);
  CHECK(isqrt_floor(Int(36)) == 6);
  CHECK(exact_sqrt(Int(49)).value() == 7);
  CHECK(!exact_sqrt(Int(50)).has_value());
  CHECK(!exact_sqrt(Int(-4)).has_value());
  CHECK(exact_sqrt(Rat(9, 4)).value() == Rat(3, 2));
  CHECK(!exact_sqrt(Rat(2)).has_value());
}

TEST_CASE("primality and factorization") {
  CHECK(is_probable_prime(Int(2)));
  CHECK(is_probable_prime(Int("1000000007")));
  CHECK(!is_probable_prime(Int(1)));
  CHECK(!is_probable_prime(Int(561)));

  auto f = factor_integer(Int(720));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(Int(2), 4u));
  CHECK(f[1] == std::make_pair(Int(3), 2u));
  CHECK(f[2] == std::make_pair(Int(5), 1u));

  Int big = Int("1000003") * Int("1000033") * Int("1000033");
  auto g = factor_integer(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == std::make_pair(Int("1000003"), 1u));
  CHECK(g[1] == std::make_pair(Int("1000033"), 2u));

  CHECK(squarefree_part(Int(12)) == 3);
  CHECK(squarefree_part(Int(-8)) == -2);
  CHECK(squarefree_part(Int(1)) == 1);
  CHECK_THROWS_AS(squarefree_part(Int(0)), ZeroInput);

  auto divs = divisors_of(Int(12));
  CHECK(divs == std::vector<Int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("modular arithmetic helpers") {
  CHECK(powmod_u64(2, 10, 1000) == 24);
  CHECK(mulmod_u64(1ull << 40, 1ull << 40, (1ull << 61) - 1) == powmod_u64(2, 80, (1ull << 61) - 1));
  CHECK(invmod_u64(3, 7) == 5);
  CHECK(legendre_u64(2, 7) == 1);
  CHECK(legendre_u64(3, 7) == -1);
  CHECK(legendre_u64(14, 7) == 0);
  for (uint64_t p : {3ull, 5ull, 13ull, 101ull, 104729ull}) {
    for (uint64_t a = 1; a < 40 && a < p; ++a) {
      auto r = sqrtmod_u64(a, p);
      if (legendre_u64(a, p) == 1) {
        REQUIRE(r.has_value());
        CHECK(mulmod_u64(*r, *r, p) == a % p);
      } else {
        CHECK(!r.has_value());
      }
    }
  }
}

TEST_CASE("crt and rational reconstruction") {
  Int x = crt_pair(Int(2), Int(7), Int(3), Int(11));
  CHECK(x % 7 == 2);
  CHECK(x % 11 == 3);
  CHECK(x >= 0);
  CHECK(x < 77);

  // reconstruct 22/7 mod a large modulus
  Int m("100000000003");
  Int inv7;
  mpz_invert(inv7.get_mpz_t(), Int(7).get_mpz_t(), m.get_mpz_t());
  Int r = Int(22) * inv7 % m;
  auto q = rational_reconstruct(r, m, Int(1000), Int(1000));
  REQUIRE(q.has_value());
  CHECK(*q == Rat(22, 7));

  // residue of -5/3
  Int inv3;
  mpz_invert(inv3.get_mpz_t(), Int(3).get_mpz_t(), m.get_mpz_t());
  Int r2 = (m - 5) * inv3 % m;
  auto q2 = rational_reconstruct(r2, m, Int(1000), Int(1000));
  REQUIRE(q2.has_value());
  CHECK(*q2 == Rat(-5, 3));

  CHECK(height(Rat(22, 7)) == 22);
  CHECK(height(Rat(-3, 8)) == 8);
}
