#include <quadtor/polyq.hpp>

#include <algorithm>
#include <sstream>

namespace quadtor {
namespace {

using ZP = std::vector<Int>;  // dense integer coefficients, low degree first

void ztrim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZP& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[static_cast<size_t>(d)] == 0) --d;
  return d;
}

ZP zreduce(ZP a, const Int& m) {
  for (auto& x : a) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(a);
  return a;
}

ZP zadd(const ZP& a, const ZP& b, const Int& m) {
  ZP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    Int s = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
    r[i] = s % m;
    if (r[i] < 0) r[i] += m;
  }
  ztrim(r);
  return r;
}

ZP zsub(const ZP& a, const ZP& b, const Int& m) {
  ZP r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    Int s = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
    r[i] = s % m;
    if (r[i] < 0) r[i] += m;
  }
  ztrim(r);
  return r;
}

ZP zmul(const ZP& a, const ZP& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& x : r) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(r);
  return r;
}

// Division by a monic divisor, everything mod m.
std::pair<ZP, ZP> zdivrem_monic(ZP a, const ZP& b, const Int& m) {
  int db = zdeg(b);
  ztrim(a);
  if (db < 0) throw DivisionByZero("division by zero polynomial");
  if (zdeg(a) < db) return {{}, a};
  ZP q(a.size() - static_cast<size_t>(db), Int(0));
  while (zdeg(a) >= db) {
    size_t top = static_cast<size_t>(zdeg(a));
    Int c = a[top];
    size_t shift = top - static_cast<size_t>(db);
    q[shift] = c;
    for (size_t i = 0; i <= static_cast<size_t>(db); ++i) {
      a[shift + i] -= c * b[i];
      a[shift + i] %= m;
      if (a[shift + i] < 0) a[shift + i] += m;
    }
    a[top] = 0;
    ztrim(a);
  }
  ztrim(q);
  return {q, a};
}

ZP zsym(const ZP& a, const Int& m) {
  ZP r = a;
  Int half = m / 2;
  for (auto& x : r) {
    x %= m;
    if (x < 0) x += m;
    if (x > half) x -= m;
  }
  ztrim(r);
  return r;
}

ZP from_polyf(const PolyF& f) {
  ZP r;
  for (const FFElem& c : f.c) r.push_back(Int(static_cast<unsigned long>(c.c[0])));
  return r;
}

// Bezout pair s*g + t*h = 1 over a finite field; throws NotCoprime.
std::pair<PolyF, PolyF> ff_bezout(const PolyF& g, const PolyF& h) {
  PolyF r0 = g, r1 = h;
  const FiniteField& F = *g.c.at(0).F;
  PolyF s0 = poly_const(F.one()), s1;
  PolyF t0, t1 = poly_const(F.one());
  while (!r1.c.empty()) {
    auto [q, r] = divrem(r0, r1);
    PolyF s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (deg(r0) != 0) throw NotCoprime("factors share a common divisor");
  FFElem u = inv(r0.c[0]);
  return {scale(s0, u), scale(t0, u)};
}

// One quadratic Hensel step: from F = g*h mod m with s*g + t*h = 1 mod m to
// the same data mod m^2 (von zur Gathen-Gerhard 15.10). All polys monic where
// stated: F, g, h monic.
void hensel_step(const ZP& F, ZP& g, ZP& h, ZP& s, ZP& t, const Int& m2) {
  ZP e = zsub(F, zmul(g, h, m2), m2);
  auto [q, r] = zdivrem_monic(zmul(s, e, m2), h, m2);
  ZP g1 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
  ZP h1 = zadd(h, r, m2);
  ZP one{Int(1)};
  ZP b = zsub(zadd(zmul(s, g1, m2), zmul(t, h1, m2), m2), one, m2);
  auto [c, d] = zdivrem_monic(zmul(s, b, m2), h1, m2);
  ZP s1 = zsub(s, d, m2);
  ZP t1 = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g1, m2), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Lift the monic coprime pair (g, h) with F = g*h mod p to modulus M = p^k.
void hensel_pair(const ZP& F, ZP& g, ZP& h, ZP& s, ZP& t, const Int& p, const Int& M) {
  Int m = p;
  while (m < M) {
    Int m2 = m * m;
    ZP Fm = zreduce(F, m2);
    hensel_step(Fm, g, h, s, t, m2);
    m = m2;
  }
  g = zreduce(g, M);
  h = zreduce(h, M);
}

// Recursive multifactor lift; F monic mod M, factors monic mod p.
void lift_tree(const ZP& F, const std::vector<PolyF>& facs, size_t lo, size_t hi,
               const Int& p, const Int& M, std::vector<ZP>& out) {
  if (hi - lo == 1) {
    out.push_back(zreduce(F, M));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  const FiniteField& Fp = *facs[lo].c.at(0).F;
  PolyF gp = poly_const(Fp.one()), hp = poly_const(Fp.one());
  for (size_t i = lo; i < mid; ++i) gp = gp * facs[i];
  for (size_t i = mid; i < hi; ++i) hp = hp * facs[i];
  auto [sp, tp] = ff_bezout(gp, hp);
  ZP g = from_polyf(gp), h = from_polyf(hp), s = from_polyf(sp), t = from_polyf(tp);
  hensel_pair(F, g, h, s, t, p, M);
  lift_tree(g, facs, lo, mid, p, M, out);
  lift_tree(h, facs, mid, hi, p, M, out);
}

Int znorm2_bound(const ZP& a) {
  Int s = 0;
  for (const Int& c : a) s += c * c;
  return isqrt_floor(s) + 1;
}

Int zcontent(const ZP& a) {
  Int g = 0;
  for (const Int& c : a) g = gcd(g, c);
  return g;
}

ZP zprimitive(ZP a) {
  ztrim(a);
  if (a.empty()) return a;
  Int g = zcontent(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

PolyQ monic_from_z(const ZP& a) {
  std::vector<Rat> c;
  Rat l(a.back());
  for (const Int& x : a) c.emplace_back(Rat(x) / l);
  return PolyQ(std::move(c));
}

ZP polyq_to_z(const PolyQ& f) {
  Int den;
  return to_integer_poly(f, den);
}

// Irreducible integer factors of a primitive squarefree integer polynomial.
std::vector<ZP> zass_core(ZP G) {
  std::vector<ZP> out;
  ztrim(G);
  int n = zdeg(G);
  if (n <= 1) {
    out.push_back(zprimitive(G));
    return out;
  }
  Int L = G.back();

  // Prime selection: first few odd primes of good reduction, fewest modular
  // factors wins.
  std::uint64_t best_p = 0;
  std::vector<std::pair<PolyF, unsigned>> best_fac;
  int good_seen = 0;
  for (std::uint64_t p : primes_upto(5000)) {
    if (p == 2 || L % Int(static_cast<unsigned long>(p)) == 0) continue;
    FiniteField Fp = FiniteField::prime_field(p);
    PolyF Gp = reduce_integer_poly(G, Fp);
    if (deg(Gp) != n) continue;
    if (deg(gcd_monic(Gp, derivative(Gp))) != 0) continue;
    auto fac = factor_mod(Gp);
    if (best_p == 0 || fac.size() < best_fac.size()) {
      best_p = p;
      best_fac = fac;
    }
    if (++good_seen == 5 || best_fac.size() == 1) break;
  }
  if (best_p == 0) throw InsufficientGoodPrimes("no usable prime for factorization");
  if (best_fac.size() == 1) {
    out.push_back(zprimitive(G));
    return out;
  }

  Int p(static_cast<unsigned long>(best_p));
  Int B = znorm2_bound(G);
  Int absL = L < 0 ? Int(-L) : L;
  Int bound = B * absL;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  Int M = p;
  unsigned k = 1;
  while (M <= 2 * bound) {
    M *= p;
    ++k;
  }

  std::vector<ZP> facs_p;
  for (const auto& [g, m] : best_fac) {
    (void)m;
    facs_p.push_back(from_polyf(g));
  }
  std::vector<ZP> lifted = hensel_lift(G, facs_p, p, k);

  // Subset recombination with exact trial division.
  std::vector<size_t> avail(lifted.size());
  for (size_t i = 0; i < avail.size(); ++i) avail[i] = i;
  ZP Gcur = G;
  PolyQ GcurQ = monic_from_z(G);

  auto try_subset = [&](const std::vector<size_t>& pick) -> bool {
    Int Lc = Gcur[static_cast<size_t>(zdeg(Gcur))];
    ZP cand{Lc};
    for (size_t idx : pick) cand = zmul(cand, lifted[idx], M);
    cand = zsym(cand, M);
    ZP cpp = zprimitive(cand);
    if (cpp.empty()) return false;
    PolyQ cq = monic_from_z(cpp);
    auto [q, r] = divrem(GcurQ, cq);
    if (!r.c.empty()) return false;
    out.push_back(cpp);
    // Remove used modular factors, shrink the current polynomial.
    std::vector<size_t> left;
    for (size_t idx : avail)
      if (std::find(pick.begin(), pick.end(), idx) == pick.end()) left.push_back(idx);
    avail = std::move(left);
    GcurQ = q;
    Int den;
    Gcur = to_integer_poly(GcurQ, den);
    Gcur = zprimitive(Gcur);
    GcurQ = monic_from_z(Gcur);
    return true;
  };

  for (size_t take = 1; 2 * take <= avail.size();) {
    // Lexicographic combinations of size `take` over avail positions.
    std::vector<size_t> pos(take);
    for (size_t i = 0; i < take; ++i) pos[i] = i;
    bool hit = false;
    while (true) {
      std::vector<size_t> pick;
      for (size_t i : pos) pick.push_back(avail[i]);
      if (try_subset(pick)) {
        hit = true;
        break;
      }
      // Next combination.
      size_t i = take;
      while (i-- > 0) {
        if (pos[i] + (take - i) < avail.size()) {
          ++pos[i];
          for (size_t j = i + 1; j < take; ++j) pos[j] = pos[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = take + 1;
          break;
        }
      }
      if (i == take + 1) break;
    }
    if (!hit) ++take;
  }
  if (zdeg(Gcur) > 0) out.push_back(zprimitive(Gcur));
  return out;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

PolyQ poly_from_ints(const std::vector<Int>& c) {
  std::vector<Rat> r;
  for (const Int& x : c) r.emplace_back(x);
  return PolyQ(std::move(r));
}

std::vector<Int> to_integer_poly(const PolyQ& f, Int& den) {
  den = 1;
  for (const Rat& c : f.c) den = lcm_int(den, c.get_den());
  std::vector<Int> r;
  for (const Rat& c : f.c) {
    Rat s = c * den;
    r.push_back(s.get_num());
  }
  return r;
}

PolyF reduce_integer_poly(const std::vector<Int>& c, const FiniteField& F) {
  std::vector<FFElem> r;
  for (const Int& x : c) r.push_back(F.from_int(x));
  return PolyF(std::move(r));
}

std::vector<std::pair<PolyQ, unsigned>> squarefree_decompose_q(const PolyQ& f) {
  if (f.c.empty()) throw ZeroInput("squarefree decomposition of zero");
  std::vector<std::pair<PolyQ, unsigned>> out;
  if (deg(f) == 0) return out;
  PolyQ w = make_monic(f);
  PolyQ g = gcd_monic(w, derivative(w));
  w = exact_div(w, g);
  unsigned i = 1;
  while (deg(w) > 0) {
    PolyQ y = gcd_monic(w, g);
    PolyQ z = exact_div(w, y);
    if (deg(z) > 0) out.emplace_back(z, i);
    w = std::move(y);
    g = exact_div(g, w);
    ++i;
  }
  return out;
}

PolyQ squarefree_part_q(const PolyQ& f) {
  if (f.c.empty()) throw ZeroInput("squarefree part of zero");
  if (deg(f) == 0) return poly_const(Rat(1));
  PolyQ m = make_monic(f);
  return exact_div(m, gcd_monic(m, derivative(m)));
}

FactorsQ factor_q(const PolyQ& f) {
  if (f.c.empty()) throw ZeroInput("factorization of zero polynomial");
  FactorsQ res;
  res.unit = lc(f);
  if (deg(f) == 0) return res;
  for (const auto& [piece, mult] : squarefree_decompose_q(f)) {
    ZP G = zprimitive(polyq_to_z(piece));
    for (const ZP& fac : zass_core(G)) res.parts.emplace_back(monic_from_z(fac), mult);
  }
  std::sort(res.parts.begin(), res.parts.end(), [](const auto& a, const auto& b) {
    if (deg(a.first) != deg(b.first)) return deg(a.first) < deg(b.first);
    for (size_t i = a.first.c.size(); i-- > 0;) {
      if (a.first.c[i] != b.first.c[i]) return a.first.c[i] < b.first.c[i];
    }
    return a.second < b.second;
  });
  return res;
}

std::vector<std::vector<Int>> hensel_lift(const std::vector<Int>& f,
                                          const std::vector<std::vector<Int>>& factors_mod_p,
                                          const Int& p, unsigned k) {
  ZP F = f;
  ztrim(F);
  if (F.empty()) throw ZeroInput("lift of zero polynomial");
  if (factors_mod_p.empty()) throw ZeroInput("empty factor list");
  Int L = F.back();
  if (L % p == 0) throw BadReductionPrime("prime divides leading coefficient");

  FiniteField Fp = FiniteField::prime_field(p.get_ui());
  PolyF fp = reduce_integer_poly(F, Fp);
  if (deg(gcd_monic(fp, derivative(fp))) != 0)
    throw NotSquarefree("polynomial is not squarefree mod p");

  std::vector<PolyF> facs;
  PolyF prod = poly_const(Fp.one());
  for (const ZP& g : factors_mod_p) {
    PolyF gp = make_monic(reduce_integer_poly(g, Fp));
    if (deg(gp) < 1) throw ZeroInput("constant factor in lift input");
    facs.push_back(gp);
    prod = prod * gp;
  }
  for (size_t i = 0; i < facs.size(); ++i)
    for (size_t j = i + 1; j < facs.size(); ++j)
      if (deg(gcd_monic(facs[i], facs[j])) != 0)
        throw NotCoprime("factors are not pairwise coprime mod p");
  if (!(prod == make_monic(fp))) throw NotCoprime("product does not match the polynomial mod p");

  Int M = 1;
  for (unsigned i = 0; i < k; ++i) M *= p;
  Int Linv_m;
  {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), L.get_mpz_t(), M.get_mpz_t());
    Linv_m = s % M;
    if (Linv_m < 0) Linv_m += M;
  }
  ZP Fmon = F;
  for (auto& c : Fmon) {
    c = c * Linv_m % M;
    if (c < 0) c += M;
  }
  ztrim(Fmon);

  std::vector<ZP> out;
  if (facs.size() == 1) {
    out.push_back(zreduce(Fmon, M));
  } else {
    lift_tree(Fmon, facs, 0, facs.size(), p, M, out);
  }
  return out;
}

std::vector<Rat> rational_roots(const PolyQ& f) {
  std::vector<Rat> roots;
  for (const auto& [g, m] : factor_q(f).parts) {
    (void)m;
    if (deg(g) == 1) roots.push_back(-g.c[0]);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int sturm_real_roots(const PolyQ& f) {
  if (f.c.empty()) throw ZeroInput("Sturm chain of zero polynomial");
  PolyQ p0 = squarefree_part_q(f);
  if (deg(p0) == 0) return 0;
  std::vector<PolyQ> chain{p0, derivative(p0)};
  while (deg(chain.back()) > 0) {
    PolyQ r = rem(chain[chain.size() - 2], chain.back());
    if (r.c.empty()) break;
    chain.push_back(-r);
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0, prev = 0;
    for (const PolyQ& g : chain) {
      if (g.c.empty()) continue;
      int s = sign_of(lc(g));
      if (!at_plus_infinity && deg(g) % 2 == 1) s = -s;
      if (prev != 0 && s != 0 && s != prev) ++count;
      if (s != 0) prev = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

std::string to_string(const PolyQ& f) {
  if (f.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.c.size(); i-- > 0;) {
    const Rat& c = f.c[i];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace quadtor
