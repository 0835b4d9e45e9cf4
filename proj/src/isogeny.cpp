#include <quadtor/isogeny.hpp>

#include <quadtor/pointcount.hpp>
#include <quadtor/polyff.hpp>
#include <quadtor/polyq.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

namespace quadtor {

namespace {

Int mod_pos(Int x, const Int& m) {
  x %= m;
  if (x < 0) x += m;
  return x;
}

Int inv_mod(const Int& x, const Int& m) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw NotCoprime("element not invertible mod m");
  return mod_pos(s, m);
}

// Newton lift of a square root of wsq from mod p to mod M, M a power of p.
Int lift_tau(Int tau, const Int& wsq, const Int& p, const Int& M) {
  Int m = p;
  while (m < M) {
    Int m2 = m * m;
    if (m2 > M) m2 = M;
    tau = mod_pos(tau - (tau * tau - wsq) * inv_mod(mod_pos(2 * tau, m2), m2), m2);
    m = m2;
  }
  return mod_pos(tau, M);
}

bool coeff_less(const QuadElem& x, const QuadElem& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

bool polyk_less(const PolyK& f, const PolyK& g) {
  if (deg(f) != deg(g)) return deg(f) < deg(g);
  for (size_t i = f.c.size(); i-- > 0;)
    if (!(f.c[i] == g.c[i])) return coeff_less(f.c[i], g.c[i]);
  return false;
}

QuadElem into_field(const QuadElem& v, const FieldDesc& K) {
  if (K.is_rational()) {
    if (!v.is_rational_value()) throw UnsupportedField("irrational coefficient over the rationals");
    return QuadElem(v.a());
  }
  return coerce(v, K);
}

CurveK into_field_curve(const CurveK& E, const FieldDesc& K) {
  return make_curve(into_field(E.a1, K), into_field(E.a2, K), into_field(E.a3, K),
                    into_field(E.a4, K), into_field(E.a6, K));
}

// Least positive u such that the model scaled by u has denominator free
// coefficients in the (1, w) coordinates: for each prime p in a denominator
// the exponent of p in u is max over i of ceil(v_p(den a_i) / i).
Int integral_scale(const CurveK& E) {
  std::map<Int, unsigned> need;
  auto account = [&](const QuadElem& c, unsigned i) {
    for (const Rat& part : {c.a(), c.b()}) {
      Int den = part.get_den();
      if (den == 1) continue;
      for (const auto& [p, e] : factor_integer(den)) {
        unsigned lift = (e + i - 1) / i;
        auto it = need.find(p);
        if (it == need.end() || it->second < lift) need[p] = lift;
      }
    }
  };
  account(E.a1, 1);
  account(E.a2, 2);
  account(E.a3, 3);
  account(E.a4, 4);
  account(E.a6, 6);
  Int u = 1;
  for (const auto& [p, e] : need)
    for (unsigned j = 0; j < e; ++j) u *= p;
  return u;
}

CurveK scale_model(const CurveK& E, const Int& u) {
  QuadElem s{Rat(u)};
  QuadElem s2 = s * s, s3 = s2 * s;
  return make_curve(E.a1 * s, E.a2 * s2, E.a3 * s3, E.a4 * s2 * s2, E.a6 * s3 * s3);
}

// Monic polynomial whose roots are s times the roots of the monic h.
PolyK scale_roots(const PolyK& h, const QuadElem& s) {
  std::vector<QuadElem> c = h.c;
  QuadElem pw = one_like(s);
  for (size_t i = c.size(); i-- > 0;) {
    c[i] = c[i] * pw;
    pw = pw * s;
  }
  return PolyK(std::move(c));
}

template <class R>
Poly<R> eval_fraction_t(const Poly<R>& h, const Poly<R>& num, const Poly<R>& den) {
  if (h.c.empty()) return Poly<R>{};
  size_t d = h.c.size() - 1;
  std::vector<Poly<R>> dp(d + 1);
  dp[0] = poly_const(one_like(h.c[0]));
  for (size_t i = 1; i <= d; ++i) dp[i] = dp[i - 1] * den;
  Poly<R> acc;
  for (size_t i = d + 1; i-- > 0;) acc = acc * num + scale(dp[d - i], h.c[i]);
  return acc;
}

template <class R>
bool doubling_stable_t(const Curve<R>& E, const Poly<R>& h) {
  auto [n2, d2] = mult_x_fraction(E, 2);
  return divides(h, eval_fraction_t(h, n2, d2));
}

// Duplication sends the root set of each part into the root set of exactly
// one part of the same degree; to[i] = j means [2] maps part i into part j.
// Throws when the map fails to be a matching, which at a reduction prime
// signals a degenerate choice of prime.
template <class R>
std::vector<size_t> doubling_permutation(const Curve<R>& E, const std::vector<Poly<R>>& parts) {
  auto [n2, d2] = mult_x_fraction(E, 2);
  size_t n = parts.size();
  std::vector<size_t> to(n, n);
  for (size_t j = 0; j < n; ++j) {
    Poly<R> pulled = eval_fraction_t(parts[j], n2, d2);
    for (size_t i = 0; i < n; ++i)
      if (deg(parts[i]) == deg(parts[j]) && divides(parts[i], pulled)) to[i] = j;
  }
  std::vector<bool> hit(n, false);
  for (size_t v : to) {
    if (v == n || hit[v]) throw BadReductionPrime("duplication does not permute the factors");
    hit[v] = true;
  }
  return to;
}

std::vector<std::vector<size_t>> permutation_orbits(const std::vector<size_t>& to) {
  std::vector<std::vector<size_t>> orbits;
  std::vector<bool> seen(to.size(), false);
  for (size_t i = 0; i < to.size(); ++i) {
    if (seen[i]) continue;
    std::vector<size_t> orb;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      orb.push_back(j);
      j = to[j];
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

void degree_subsets(const std::vector<int>& odeg, size_t from, int remaining,
                    std::vector<size_t>& pick, std::vector<std::vector<size_t>>& out) {
  if (remaining == 0) {
    out.push_back(pick);
    return;
  }
  for (size_t i = from; i < odeg.size(); ++i) {
    if (odeg[i] > remaining) continue;
    pick.push_back(i);
    degree_subsets(odeg, i + 1, remaining - odeg[i], pick, out);
    pick.pop_back();
  }
}

// Index sets of parts whose root union is closed under duplication and has
// total degree target: unions of orbits of the duplication permutation.
template <class R>
std::vector<std::vector<size_t>> stable_index_sets(const Curve<R>& E,
                                                   const std::vector<Poly<R>>& parts, int target) {
  if (parts.empty()) return {};
  std::vector<std::vector<size_t>> orbits = permutation_orbits(doubling_permutation(E, parts));
  std::vector<int> odeg;
  for (const auto& orb : orbits) {
    int s = 0;
    for (size_t i : orb) s += deg(parts[i]);
    odeg.push_back(s);
  }
  std::vector<std::vector<size_t>> chosen;
  std::vector<size_t> pick;
  degree_subsets(odeg, 0, target, pick, chosen);
  std::vector<std::vector<size_t>> out;
  for (const auto& ch : chosen) {
    std::vector<size_t> s;
    for (size_t oi : ch)
      for (size_t i : orbits[oi]) s.push_back(i);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

// Stable degree-target divisors of psi through an exact factorization of psi
// over K; usable while deg psi stays within the factorization cap.
std::vector<PolyK> stable_divisors_exact(const CurveK& E, const FieldDesc& K, const PolyK& psi,
                                         int target) {
  std::vector<PolyK> parts = factor_over_K(psi, K).parts;
  std::vector<PolyK> out;
  for (const auto& s : stable_index_sets(E, parts, target)) {
    PolyK h = poly_const(one_like(lc(psi)));
    for (size_t i : s) h = h * parts[i];
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<PolyK> stable_divisors_modular(const CurveK& E, const FieldDesc& K, const PolyK& psi,
                                           int target);

// Exact factorization pays off only for small inputs: over the rationals up
// to the factorization cap, over a quadratic field only for the third
// division polynomial.  Larger inputs go through a reduction prime, where
// the size of the irreducible factors of psi no longer matters.
std::vector<PolyK> stable_divisors(const CurveK& E, const FieldDesc& K, const PolyK& psi,
                                   int target) {
  if (K.is_rational() ? deg(psi) <= 40 : deg(psi) <= 4)
    return stable_divisors_exact(E, K, psi, target);
  return stable_divisors_modular(E, K, psi, target);
}

// Kernel polynomials of stable cyclic subgroups of order nine: a stable
// three kernel t times a stable degree-3 divisor g of the primitive ninth
// division polynomial whose roots triple onto the roots of t.
std::vector<PolyK> nine_kernels(const CurveK& E, const FieldDesc& K) {
  std::vector<PolyK> t3 = stable_divisors(E, K, primitive_division_poly(E, 3), 1);
  if (t3.empty()) return {};
  std::vector<PolyK> g3 = stable_divisors(E, K, primitive_division_poly(E, 9), 3);
  if (g3.empty()) return {};
  auto [n3, d3] = mult_x_fraction(E, 3);
  std::vector<PolyK> out;
  for (const PolyK& t : t3) {
    PolyK pulled = eval_fraction_t(t, n3, d3);
    for (const PolyK& g : g3)
      if (divides(g, pulled)) out.push_back(t * g);
  }
  return out;
}

struct SplitPoly {
  std::vector<Int> a, b;
};

SplitPoly split_integral(const PolyK& f) {
  SplitPoly r;
  for (const QuadElem& c : f.c) {
    if (c.a().get_den() != 1 || c.b().get_den() != 1)
      throw NonIntegralInput("polynomial has denominators");
    r.a.push_back(c.a().get_num());
    r.b.push_back(c.b().get_num());
  }
  return r;
}

std::vector<Int> specialize_mod(const SplitPoly& f, const Int& tau, const Int& M) {
  std::vector<Int> r;
  r.reserve(f.a.size());
  for (size_t i = 0; i < f.a.size(); ++i) r.push_back(mod_pos(f.a[i] + f.b[i] * tau, M));
  return r;
}

std::vector<Int> ff_to_ints(const PolyF& g) {
  std::vector<Int> r;
  r.reserve(g.c.size());
  for (const FFElem& c : g.c) r.push_back(Int(static_cast<unsigned long>(c.c[0])));
  return r;
}

std::vector<Int> zp_mul(const std::vector<Int>& x, const std::vector<Int>& y, const Int& M) {
  if (x.empty() || y.empty()) return {};
  std::vector<Int> r(x.size() + y.size() - 1, Int(0));
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  for (Int& v : r) v = mod_pos(v, M);
  return r;
}

// Stable degree-target divisors of psi past the exact factorization cap,
// through a single prime of split squarefree reduction: factor mod p, close
// the factors under duplication, Hensel lift, reconstruct coefficients of
// both embeddings into K, certify every candidate by exact division.  E and
// psi must be denominator free.  A kernel defined over K reduces to a stable
// divisor at every usable prime, so an empty candidate list certifies that
// no stable kernel exists.
std::vector<PolyK> stable_divisors_modular(const CurveK& E, const FieldDesc& K, const PolyK& psi,
                                           int target) {
  const unsigned kPrec = 1024;
  SplitPoly zf = split_integral(psi);
  for (std::uint32_t pu : primes_upto(100000)) {
    if (pu == 2) continue;
    Int p(static_cast<unsigned long>(pu));
    if (!K.is_rational() && splitting_type(p, K) != SplitType::Split) continue;
    try {
      Int M;
      mpz_pow_ui(M.get_mpz_t(), p.get_mpz_t(), kPrec);
      struct Emb {
        Int tauM;
        std::vector<std::vector<Int>> lifted;
        std::vector<std::vector<size_t>> sets;
      };
      std::vector<Emb> embs;
      for (const PrimeK& P : primes_above(p, K)) {
        FiniteField F = residue_field(P, K);
        CurveF Ep = reduce_mod(E, P, F);
        PolyF fp = reduce_poly(psi, P, F);
        if (deg(fp) != deg(psi)) throw BadReductionPrime("degree drops at the prime");
        if (deg(gcd_monic(fp, derivative(fp))) != 0)
          throw BadReductionPrime("reduction is not squarefree");
        std::vector<PolyF> parts;
        for (const auto& [g, mult] : factor_mod(make_monic(fp))) {
          (void)mult;
          parts.push_back(g);
        }
        Emb e;
        e.sets = stable_index_sets(Ep, parts, target);
        if (e.sets.empty()) return {};
        e.tauM = K.is_rational() ? Int(0) : lift_tau(P.w_image, Int(K.wsq()), p, M);
        std::vector<std::vector<Int>> pints;
        pints.reserve(parts.size());
        for (const PolyF& g : parts) pints.push_back(ff_to_ints(g));
        e.lifted = hensel_lift(specialize_mod(zf, e.tauM, M), pints, p, kPrec);
        embs.push_back(std::move(e));
      }
      auto products = [&](const Emb& e) {
        std::vector<std::vector<Int>> hs;
        for (const auto& s : e.sets) {
          std::vector<Int> h{Int(1)};
          for (size_t i : s) h = zp_mul(h, e.lifted[i], M);
          hs.push_back(std::move(h));
        }
        return hs;
      };
      Int bound = isqrt_floor((M - 1) / 2);
      std::vector<PolyK> found;
      auto certify = [&](std::vector<QuadElem> cs) {
        PolyK h(std::move(cs));
        if (deg(h) != target || !(lc(h) == one_like(E.a1))) return;
        if (!divides(h, psi) || !doubling_stable_t(E, h)) return;
        for (const PolyK& g : found)
          if (g == h) return;
        found.push_back(std::move(h));
      };
      if (K.is_rational()) {
        for (const auto& H : products(embs[0])) {
          std::vector<QuadElem> cs;
          bool ok = true;
          for (const Int& c : H) {
            auto r = rational_reconstruct(c, M, bound, bound);
            if (!r) {
              ok = false;
              break;
            }
            cs.emplace_back(*r);
          }
          if (ok) certify(std::move(cs));
        }
      } else {
        Int inv2 = inv_mod(Int(2), M);
        Int inv2t = inv_mod(mod_pos(2 * embs[0].tauM, M), M);
        std::vector<std::vector<Int>> hs1 = products(embs[0]), hs2 = products(embs[1]);
        for (const auto& H1 : hs1)
          for (const auto& H2 : hs2) {
            std::vector<QuadElem> cs;
            bool ok = true;
            for (size_t i = 0; i < H1.size() && ok; ++i) {
              Int ra = mod_pos((H1[i] + H2[i]) * inv2, M);
              Int rb = mod_pos((H1[i] - H2[i]) * inv2t, M);
              auto qa = rational_reconstruct(ra, M, bound, bound);
              auto qb = rational_reconstruct(rb, M, bound, bound);
              if (!qa || !qb) {
                ok = false;
                continue;
              }
              cs.emplace_back(*qa, *qb, K);
            }
            if (ok) certify(std::move(cs));
          }
      }
      return found;
    } catch (const BadReduction&) {
    } catch (const BadReductionPrime&) {
    }
  }
  throw InsufficientGoodPrimes("no usable prime for the kernel search");
}

// Monic gcd used in the composite kernel construction.  Rational inputs
// borrow a quadratic field for the split prime pool; the certified monic gcd
// of rational polynomials is itself rational.
PolyK kernel_gcd(const PolyK& f, const PolyK& g, const FieldDesc& K) {
  if (!K.is_rational()) return modular_gcd(f, g);
  FieldDesc S = FieldDesc::imaginary(2);
  PolyK fs = f, gs = g;
  for (QuadElem& c : fs.c) c = coerce(c, S);
  for (QuadElem& c : gs.c) c = coerce(c, S);
  PolyK d = modular_gcd(fs, gs);
  std::vector<QuadElem> cs;
  for (const QuadElem& c : d.c) {
    if (!c.is_rational_value()) throw TheoremViolation("gcd of rational polynomials is rational");
    cs.emplace_back(c.a());
  }
  return PolyK(std::move(cs));
}

bool supported_order(unsigned n) { return n == 3 || n == 5 || n == 7 || n == 9 || n == 11; }

bool fill_bins(const std::vector<int>& d, size_t idx, std::vector<int>& open, long& nodes) {
  if (++nodes > 200000) return false;
  if (idx == d.size()) return true;
  int last = -1;
  for (size_t b = 0; b < open.size(); ++b) {
    if (open[b] < d[idx] || open[b] == last) continue;
    last = open[b];
    open[b] -= d[idx];
    bool ok = fill_bins(d, idx + 1, open, nodes);
    open[b] += d[idx];
    if (ok) return true;
  }
  return false;
}

// d refines s when d can be grouped into blocks summing to the entries of s.
bool refines(const std::vector<int>& dIn, const std::vector<int>& s) {
  std::vector<int> d = dIn;
  std::sort(d.begin(), d.end(), std::greater<int>());
  std::vector<int> open = s;
  long nodes = 0;
  return fill_bins(d, 0, open, nodes);
}

// Coarsest multiset refined by the factor degree multisets of f at twenty
// split primes of squarefree reduction.
std::vector<int> heuristic_degrees(const PolyK& f, const FieldDesc& K) {
  std::vector<std::vector<int>> samples;
  unsigned primes_used = 0;
  for (std::uint32_t pu : primes_upto(100000)) {
    if (primes_used >= 20) break;
    if (pu == 2) continue;
    Int p(static_cast<unsigned long>(pu));
    if (!K.is_rational() && splitting_type(p, K) != SplitType::Split) continue;
    std::vector<std::vector<int>> here;
    bool usable = true;
    for (const PrimeK& P : primes_above(p, K)) {
      FiniteField F = residue_field(P, K);
      PolyF fp;
      try {
        fp = reduce_poly(f, P, F);
      } catch (const BadReductionPrime&) {
        usable = false;
        break;
      }
      if (deg(fp) != deg(f) || deg(gcd_monic(fp, derivative(fp))) != 0) {
        usable = false;
        break;
      }
      std::vector<int> ds;
      for (const auto& [g, mult] : factor_mod(make_monic(fp))) {
        (void)mult;
        ds.push_back(deg(g));
      }
      std::sort(ds.begin(), ds.end());
      here.push_back(std::move(ds));
    }
    if (!usable) continue;
    for (auto& h : here) samples.push_back(std::move(h));
    ++primes_used;
  }
  if (samples.empty()) throw InsufficientGoodPrimes("no usable prime for the signature");
  std::vector<int> s = samples[0];
  for (const auto& d : samples) {
    while (!refines(d, s)) {
      std::sort(s.begin(), s.end());
      s[1] += s[0];
      s.erase(s.begin());
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

PolyK eval_fraction(const PolyK& h, const PolyK& num, const PolyK& den) {
  return eval_fraction_t(h, num, den);
}

bool doubling_stable(const CurveK& E, const PolyK& h) { return doubling_stable_t(E, h); }

std::vector<KernelPoly> stable_cyclic_kernels(const CurveK& E0, const FieldDesc& K, unsigned ell) {
  if (!supported_order(ell)) throw ZeroInput("cyclic kernel order must be one of 3, 5, 7, 9, 11");
  CurveK E = into_field_curve(E0, K);
  Int u = integral_scale(E);
  CurveK Ei = scale_model(E, u);
  std::vector<PolyK> raw =
      ell == 9 ? nine_kernels(Ei, K)
               : stable_divisors(Ei, K, primitive_division_poly(Ei, ell),
                                 static_cast<int>(ell - 1) / 2);
  QuadElem back = inv(QuadElem(Rat(u * u)));
  PolyK cert = ell == 9 ? division_polynomial(E, 9) : primitive_division_poly(E, ell);
  std::vector<KernelPoly> out;
  for (const PolyK& hp : raw) {
    PolyK h = u == 1 ? hp : scale_roots(hp, back);
    if (!divides(h, cert) || !doubling_stable_t(E, h))
      throw TheoremViolation("stable kernel failed its division certificate");
    out.push_back({ell, h, {h}});
  }
  std::sort(out.begin(), out.end(),
            [](const KernelPoly& x, const KernelPoly& y) { return polyk_less(x.poly, y.poly); });
  return out;
}

KernelPoly composite_kernel_poly(const CurveK& E0, const FieldDesc& K, const KernelPoly& hA,
                                 const KernelPoly& hB) {
  if (!supported_order(hA.N) || !supported_order(hB.N))
    throw IncompatibleOrders("kernel orders must come from 3, 5, 7, 9, 11");
  if (std::gcd(hA.N, hB.N) != 1) throw IncompatibleOrders("kernel orders must be coprime");
  CurveK E = into_field_curve(E0, K);
  for (const KernelPoly* kp : {&hA, &hB}) {
    if (deg(kp->poly) != static_cast<int>(kp->N - 1) / 2 || !(lc(kp->poly) == one_like(E.a1)) ||
        !divides(kp->poly, division_polynomial(E, kp->N)) || !doubling_stable_t(E, kp->poly))
      throw ZeroInput("input is not a stable kernel polynomial on this curve");
  }
  unsigned a = hA.N, b = hB.N;
  Int u = integral_scale(E);
  CurveK Ei = scale_model(E, u);
  QuadElem fwd{Rat(u * u)};
  PolyK hAi = u == 1 ? hA.poly : scale_roots(hA.poly, fwd);
  PolyK hBi = u == 1 ? hB.poly : scale_roots(hB.poly, fwd);
  auto [nb, db] = mult_x_fraction(Ei, b);
  auto [na, da] = mult_x_fraction(Ei, a);
  std::vector<PolyK> gs = {eval_fraction_t(hAi, nb, db), eval_fraction_t(hBi, na, da),
                           primitive_division_poly(Ei, a * b)};
  std::sort(gs.begin(), gs.end(), [](const PolyK& x, const PolyK& y) { return deg(x) < deg(y); });
  PolyK mid = kernel_gcd(kernel_gcd(gs[0], gs[1], K), gs[2], K);
  int want = (static_cast<int>(a * b) - 1) / 2 - deg(hA.poly) - deg(hB.poly);
  if (deg(mid) != want) throw TheoremViolation("composite kernel degree is off");
  PolyK back = u == 1 ? mid : scale_roots(mid, inv(fwd));
  PolyK f = hA.poly * hB.poly * back;
  if (!doubling_stable_t(E, f)) throw TheoremViolation("composite kernel is not doubling stable");
  return {a * b, f, {hA.poly, hB.poly, back}};
}

KernelSignature signature(const KernelPoly& f, const FieldDesc& K) {
  if (deg(f.poly) < 1) throw ZeroInput("kernel polynomial is constant");
  KernelSignature sig;
  if (deg(f.poly) <= 40) {
    for (const PolyK& part : factor_over_K(f.poly, K).parts) sig.degrees.push_back(deg(part));
    std::sort(sig.degrees.begin(), sig.degrees.end());
  } else {
    sig.degrees = heuristic_degrees(f.poly, K);
    sig.heuristic = true;
  }
  return sig;
}

bool pointwise_quadratic_feasible(const KernelSignature& sig) {
  for (int d : sig.degrees)
    if (d > 2) return false;
  return true;
}

bool pointwise_quadratic_feasible(const KernelPoly& f, const FieldDesc& K) {
  return pointwise_quadratic_feasible(signature(f, K));
}

}  // namespace quadtor
