#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "quadtor/errors.hpp"

namespace quadtor {

using Int = mpz_class;
using Rat = mpq_class;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed = 0x5eed00d5u) : gen(seed) {}
  uint64_t u64() { return gen(); }
  // uniform in [lo, hi], inclusive
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(gen() % static_cast<uint64_t>(hi - lo + 1));
  }
  uint64_t below(uint64_t n) { return gen() % n; }
};

Int isqrt_floor(const Int& n);
std::optional<Int> exact_sqrt(const Int& n);
std::optional<Rat> exact_sqrt(const Rat& q);

bool is_probable_prime(const Int& n);
// ascending prime powers; n > 0 required
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);
std::vector<Int> divisors_of(const Int& n);
// sign(n) * product of primes with odd exponent
Int squarefree_part(const Int& n);

std::vector<uint32_t> primes_upto(uint32_t bound);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t m);
// Legendre symbol, p an odd prime: returns -1, 0, or 1
int legendre_u64(uint64_t a, uint64_t p);
// Tonelli-Shanks; p an odd prime, a a quadratic residue
std::optional<uint64_t> sqrtmod_u64(uint64_t a, uint64_t p);

// x with x = r1 (mod m1), x = r2 (mod m2); m1, m2 coprime; result in [0, m1*m2)
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);
// n/d with n = d*a (mod m), |n| <= num_bound, 0 < d <= den_bound, gcd(n,d)=1
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m,
                                        const Int& num_bound, const Int& den_bound);

// naive multiplicative height: max(|num|, den) in lowest terms
Int height(const Rat& q);

Int lcm_int(const Int& a, const Int& b);

}  // namespace quadtor
