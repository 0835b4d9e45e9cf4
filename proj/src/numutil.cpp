#include "quadtor/numutil.hpp"

#include <algorithm>
#include <cmath>

namespace quadtor {

Int isqrt_floor(const Int& n) {
  if (n < 0) throw Error("isqrt_floor: negative input");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt_floor(n);
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto num = exact_sqrt(Int(q.get_num()));
  if (!num) return std::nullopt;
  auto den = exact_sqrt(Int(q.get_den()));
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// Pollard-Brent; n odd composite, not a prime power of interest, n > 1
Int pollard_brent(const Int& n, Rng& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    Int y = Int(rng.u64()) % n, c = Int(rng.u64()) % n, m = 128;
    if (c == 0) c = 1;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int rk = r - k;
        Int lim = m < rk ? m : rk;
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_rec(const Int& n, std::vector<Int>& out, Rng& rng) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_brent(n, rng);
  factor_rec(d, out, rng);
  factor_rec(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
  if (n <= 0) throw Error("factor_integer: input must be positive");
  std::vector<std::pair<Int, unsigned>> result;
  static const std::vector<uint32_t> small = primes_upto(20000);
  for (uint32_t p : small) {
    if (n == 1) break;
    if (Int(p) * p > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) result.emplace_back(p, e);
  }
  if (n > 1) {
    if (is_probable_prime(n)) {
      result.emplace_back(n, 1);
    } else {
      std::vector<Int> rest;
      Rng rng(0x9e3779b97f4a7c15ull);
      factor_rec(n, rest, rng);
      std::sort(rest.begin(), rest.end());
      for (size_t i = 0; i < rest.size();) {
        size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        result.emplace_back(rest[i], static_cast<unsigned>(j - i));
        i = j;
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Int> divisors_of(const Int& n) {
  auto fac = factor_integer(abs(n));
  std::vector<Int> divs{1};
  for (const auto& [p, e] : fac) {
    size_t sz = divs.size();
    Int pp = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pp *= p;
      for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pp);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw ZeroInput("squarefree_part of 0");
  Int s = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_integer(abs(n)))
    if (e % 2) s *= p;
  return s;
}

std::vector<uint32_t> primes_upto(uint32_t bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<uint32_t> out;
  for (uint32_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (uint64_t j = static_cast<uint64_t>(i) * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t m) {
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
  while (nr != 0) {
    int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (r != 1) throw DivisionByZero("invmod: not invertible");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

int legendre_u64(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod_u64(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<uint64_t> sqrtmod_u64(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre_u64(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
  uint64_t s = p - 1;
  unsigned e = 0;
  while (s % 2 == 0) {
    s /= 2;
    ++e;
  }
  uint64_t n = 2;
  while (legendre_u64(n, p) != -1) ++n;
  uint64_t x = powmod_u64(a, (s + 1) / 2, p);
  uint64_t b = powmod_u64(a, s, p);
  uint64_t g = powmod_u64(n, s, p);
  unsigned r = e;
  while (true) {
    uint64_t t = b;
    unsigned m = 0;
    while (t != 1 && m < r) {
      t = mulmod_u64(t, t, p);
      ++m;
    }
    if (m == 0) return x;
    uint64_t gs = g;
    for (unsigned i = 0; i + 1 < r - m; ++i) gs = mulmod_u64(gs, gs, p);
    x = mulmod_u64(x, gs, p);
    g = mulmod_u64(gs, gs, p);
    b = mulmod_u64(b, g, p);
    r = m;
  }
}

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) throw NotCoprime("crt_pair: moduli share a factor");
  Int m = m1 * m2;
  Int x = (r1 * t % m) * m2 + (r2 * s % m) * m1;
  x %= m;
  if (x < 0) x += m;
  return x;
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m,
                                        const Int& num_bound, const Int& den_bound) {
  Int r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Int t0 = 0, t1 = 1;
  while (r1 > num_bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Int num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den > den_bound) return std::nullopt;
  if (gcd(num, den) != 1) return std::nullopt;
  Rat result(num, den);
  result.canonicalize();
  return result;
}

Int height(const Rat& q) {
  Int n = abs(Int(q.get_num())), d = Int(q.get_den());
  return std::max(n, d);
}

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace quadtor
