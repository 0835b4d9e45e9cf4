#include <quadtor/polyk.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace quadtor {
namespace {

FieldDesc field_of_polyk(const PolyK& f) {
  for (const QuadElem& c : f.c)
    if (!c.field().is_rational()) return c.field();
  return FieldDesc::rationals();
}

bool coeff_less(const QuadElem& x, const QuadElem& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

bool polyk_less(const PolyK& a, const PolyK& b) {
  if (deg(a) != deg(b)) return deg(a) < deg(b);
  for (size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] != b.c[i]) return coeff_less(a.c[i], b.c[i]);
  }
  return false;
}

// Integer pair form: coefficient i is a[i] + b[i]*w after scaling away all
// denominators.
struct ZKPoly {
  std::vector<Int> a, b;
};

ZKPoly clear_poly(const PolyK& f) {
  Int den = 1;
  for (const QuadElem& c : f.c) {
    den = lcm_int(den, c.a().get_den());
    den = lcm_int(den, c.b().get_den());
  }
  ZKPoly r;
  for (const QuadElem& c : f.c) {
    r.a.push_back(Rat(c.a() * den).get_num());
    r.b.push_back(Rat(c.b() * den).get_num());
  }
  return r;
}

Int mod_pos(Int x, const Int& m) {
  x %= m;
  if (x < 0) x += m;
  return x;
}

Int inv_mod(const Int& x, const Int& m) {
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw NotCoprime("modular inverse does not exist");
  return mod_pos(s, m);
}

// Coefficients a[i] + b[i]*tau mod m, low degree first.
std::vector<Int> specialize(const ZKPoly& f, const Int& tau, const Int& m) {
  std::vector<Int> r;
  for (size_t i = 0; i < f.a.size(); ++i) r.push_back(mod_pos(f.a[i] + f.b[i] * tau, m));
  return r;
}

PolyF to_polyf(const std::vector<Int>& c, const FiniteField& F) {
  return reduce_integer_poly(c, F);
}

Int eval_zp(const std::vector<Int>& f, const Int& x, const Int& m) {
  Int acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = mod_pos(acc * x + f[i], m);
  return acc;
}

std::vector<Int> derivative_zp(const std::vector<Int>& f) {
  std::vector<Int> r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
  return r;
}

// Newton lift of a simple root r of f from mod ell to mod M (M a power of ell).
Int lift_root(const std::vector<Int>& f, const std::vector<Int>& df, Int r, const Int& ell,
              const Int& M) {
  Int m = ell;
  while (m < M) {
    Int m2 = m * m;
    if (m2 > M) m2 = M;
    Int num = eval_zp(f, r, m2);
    Int den = eval_zp(df, r, m2);
    r = mod_pos(r - num * inv_mod(den, m2), m2);
    m = m2;
  }
  return mod_pos(r, M);
}

// Square root of wsq lifted to mod M = ell^k by Newton iteration.
Int lift_tau(Int tau, const Int& wsq, const Int& ell, const Int& M) {
  Int m = ell;
  while (m < M) {
    Int m2 = m * m;
    if (m2 > M) m2 = M;
    tau = mod_pos(tau - (tau * tau - wsq) * inv_mod(mod_pos(2 * tau, m2), m2), m2);
    m = m2;
  }
  return mod_pos(tau, M);
}

struct SplitPrimeData {
  Int ell;
  Int tau;  // tau^2 = wsq mod ell
};

const std::vector<std::uint32_t>& prime_pool() {
  static const std::vector<std::uint32_t> ps = primes_upto(1000000);
  return ps;
}

// Split primes of K avoiding the given integer.
std::vector<SplitPrimeData> split_primes(const FieldDesc& K, const Int& avoid, size_t count,
                                         std::uint64_t start_above = 2) {
  std::vector<SplitPrimeData> out;
  Int wsq(K.wsq());
  for (std::uint32_t ell : prime_pool()) {
    if (out.size() >= count) break;
    if (ell <= start_above || ell == 2) continue;
    Int lI(static_cast<unsigned long>(ell));
    if (wsq % lI == 0) continue;
    if (avoid % lI == 0) continue;
    std::uint64_t w = mod_pos(wsq, lI).get_ui();
    if (legendre_u64(w, ell) != 1) continue;
    auto t = sqrtmod_u64(w, ell);
    if (!t) continue;
    out.push_back({lI, Int(static_cast<unsigned long>(*t))});
  }
  if (out.size() < count) throw InsufficientGoodPrimes("ran out of split primes");
  return out;
}

}  // namespace

PolyK conj_poly(const PolyK& f) {
  std::vector<QuadElem> c;
  for (const QuadElem& x : f.c) c.push_back(conj(x));
  return PolyK(std::move(c));
}

PolyQ norm_to_q(const PolyK& f) {
  PolyK n = f * conj_poly(f);
  std::vector<Rat> c;
  for (const QuadElem& x : n.c) {
    if (!x.is_rational_value()) throw UnsupportedField("norm polynomial is not rational");
    c.push_back(x.a());
  }
  return PolyQ(std::move(c));
}

PolyK polyk_from_q(const PolyQ& f, const FieldDesc& K) {
  std::vector<QuadElem> c;
  for (const Rat& x : f.c) c.emplace_back(x, Rat(0), K);
  return PolyK(std::move(c));
}

PolyQ polyq_from_k(const PolyK& f) {
  std::vector<Rat> c;
  for (const QuadElem& x : f.c) {
    if (!x.is_rational_value()) throw UnsupportedField("polynomial has irrational coefficients");
    c.push_back(x.a());
  }
  return PolyQ(std::move(c));
}

FiniteField residue_field(const PrimeK& P, const FieldDesc& K) {
  std::uint64_t p = P.p.get_ui();
  if (P.residue_degree == 1) return FiniteField::prime_field(p);
  if (p == 2 && K.half_ring()) {
    // F_4 presented on the basis of (1+w)/2, whose minimal polynomial is
    // y^2 - y + (1-wsq)/4.
    std::uint64_t c = static_cast<std::uint64_t>(((1 - K.wsq()) / 4) % 2);
    return FiniteField::extension(2, {c, 1, 1});
  }
  return FiniteField::inert_quadratic(p, Int(K.wsq()));
}

FFElem reduce_elem(const QuadElem& x, const PrimeK& P, const FiniteField& F) {
  const FieldDesc& K = x.field();
  Int p = P.p;
  auto rat_mod = [&](const Rat& q) -> Int {
    if (q.get_den() % p == 0) throw BadReductionPrime("denominator divisible by the prime");
    return mod_pos(q.get_num() * inv_mod(mod_pos(q.get_den(), p), p), p);
  };
  if (K.is_rational() || x.is_rational_value()) {
    if (P.residue_degree == 1) return F.from_int(rat_mod(x.a()));
    // Rational value into the quadratic residue field.
    return F.from_int(rat_mod(x.a()));
  }
  if (p == 2 && K.half_ring()) {
    // Basis (1, phi) with phi = (1+w)/2: x = u + v*phi, u = a - b, v = 2b.
    Rat u = x.a() - x.b(), v = 2 * x.b();
    if (P.residue_degree == 2) return F.from_int(rat_mod(u)) + F.from_int(rat_mod(v)) * F.gen();
    // Split at 2: phi maps to 0 at the ideal containing it, 1 at the other.
    QuadElem phi(Rat(1, 2), Rat(1, 2), K);
    Int phi_img = is_integral(phi / P.pi) ? 0 : 1;
    return F.from_int(rat_mod(u) + rat_mod(v) * phi_img);
  }
  if (P.residue_degree == 1)
    return F.from_int(mod_pos(rat_mod(x.a()) + rat_mod(x.b()) * P.w_image, p));
  return F.from_int(rat_mod(x.a())) + F.from_int(rat_mod(x.b())) * F.gen();
}

PolyF reduce_poly(const PolyK& f, const PrimeK& P, const FiniteField& F) {
  std::vector<FFElem> c;
  for (const QuadElem& x : f.c) c.push_back(reduce_elem(x, P, F));
  return PolyF(std::move(c));
}

PolyK modular_gcd(const PolyK& f0, const PolyK& g0) {
  PolyK f = f0, g = g0;
  f.normalize();
  g.normalize();
  if (f.c.empty() && g.c.empty()) throw ZeroInput("gcd of two zero polynomials");
  if (f.c.empty()) return make_monic(g);
  if (g.c.empty()) return make_monic(f);
  FieldDesc K = field_of_polyk(f);
  if (K.is_rational()) K = field_of_polyk(g);
  if (deg(f) == 0 || deg(g) == 0) return poly_const(one_like(lc(f)));
  if (K.is_rational()) return gcd_monic(f, g);

  ZKPoly F = clear_poly(f), G = clear_poly(g);
  Int wsq(K.wsq());
  auto lcnorm = [&](const ZKPoly& z) -> Int {
    size_t t = z.a.size() - 1;
    return z.a[t] * z.a[t] - wsq * z.b[t] * z.b[t];
  };
  Int avoid = lcnorm(F) * lcnorm(G);

  int best = -1;
  std::vector<Int> acc_a, acc_b;
  Int Macc = 1;
  size_t used = 0;
  std::uint64_t last = 2;
  while (used < 60) {
    SplitPrimeData sp = split_primes(K, avoid, 1, last)[0];
    last = sp.ell.get_ui();
    FiniteField Fl = FiniteField::prime_field(last);
    PolyF f1 = to_polyf(specialize(F, sp.tau, sp.ell), Fl);
    PolyF f2 = to_polyf(specialize(F, sp.ell - sp.tau, sp.ell), Fl);
    PolyF g1 = to_polyf(specialize(G, sp.tau, sp.ell), Fl);
    PolyF g2 = to_polyf(specialize(G, sp.ell - sp.tau, sp.ell), Fl);
    PolyF d1 = gcd_monic(f1, g1), d2 = gcd_monic(f2, g2);
    if (deg(d1) != deg(d2)) continue;
    int dd = deg(d1);
    if (dd == 0) return poly_const(one_like(lc(f)));
    if (best == -1 || dd < best) {
      best = dd;
      acc_a.assign(static_cast<size_t>(dd) + 1, Int(0));
      acc_b.assign(static_cast<size_t>(dd) + 1, Int(0));
      Macc = 1;
    } else if (dd > best) {
      continue;
    }
    Int inv2 = inv_mod(Int(2), sp.ell);
    Int inv2t = inv_mod(mod_pos(2 * sp.tau, sp.ell), sp.ell);
    for (size_t i = 0; i <= static_cast<size_t>(best); ++i) {
      Int c1(static_cast<unsigned long>(d1.c.size() > i ? d1.c[i].c[0] : 0));
      Int c2(static_cast<unsigned long>(d2.c.size() > i ? d2.c[i].c[0] : 0));
      Int ai = mod_pos((c1 + c2) * inv2, sp.ell);
      Int bi = mod_pos((c1 - c2) * inv2t, sp.ell);
      if (Macc == 1) {
        acc_a[i] = ai;
        acc_b[i] = bi;
      } else {
        acc_a[i] = crt_pair(acc_a[i], Macc, ai, sp.ell);
        acc_b[i] = crt_pair(acc_b[i], Macc, bi, sp.ell);
      }
    }
    Macc *= sp.ell;
    ++used;

    Int bound = isqrt_floor((Macc - 1) / 2);
    if (bound < 2) continue;
    std::vector<QuadElem> cand;
    bool ok = true;
    for (size_t i = 0; i <= static_cast<size_t>(best) && ok; ++i) {
      auto ra = rational_reconstruct(acc_a[i], Macc, bound, bound);
      auto rb = rational_reconstruct(acc_b[i], Macc, bound, bound);
      if (!ra || !rb) {
        ok = false;
        break;
      }
      cand.emplace_back(*ra, *rb, K);
    }
    if (!ok) continue;
    PolyK D(std::move(cand));
    if (deg(D) != best) continue;
    if (divides(D, f) && divides(D, g)) return D;
  }
  throw InsufficientGoodPrimes("modular gcd did not stabilize");
}

std::vector<QuadElem> roots_in_K(const PolyK& f, const FieldDesc& K) {
  PolyK fx = f;
  fx.normalize();
  if (fx.c.empty()) throw ZeroInput("roots of zero polynomial");
  if (deg(fx) == 0) return {};
  if (K.is_rational()) {
    std::vector<QuadElem> out;
    for (const Rat& r : rational_roots(polyq_from_k(fx))) out.emplace_back(r);
    return out;
  }
  for (auto& c : fx.c) c = coerce(c, K);

  PolyK d = derivative(fx);
  PolyK gg = modular_gcd(fx, d);
  PolyK fsq = deg(gg) > 0 ? exact_div(fx, gg) : fx;

  ZKPoly F = clear_poly(fsq);
  Int wsq(K.wsq());
  size_t top = F.a.size() - 1;
  Int NL = abs(F.a[top] * F.a[top] - wsq * F.b[top] * F.b[top]);
  Int C = 0;
  for (size_t i = 0; i < F.a.size(); ++i) {
    Int v = abs(F.a[i]) + abs(F.b[i]) * (abs(wsq) + 1);
    if (v > C) C = v;
  }
  Int Db = 2 * (isqrt_floor(NL) + 1);
  // Generous Cauchy-style numerator bound, valid for real embeddings too.
  Int Nb = Db * (C + 2) * (C + 2);
  Int big = Nb > Db ? Nb : Db;
  Int target = 2 * big * big + 1;

  std::vector<QuadElem> out;
  std::set<std::pair<Rat, Rat>> seen;
  std::uint64_t last = 2;
  for (int attempt = 0; attempt < 40; ++attempt) {
    SplitPrimeData sp = split_primes(K, 2 * NL, 1, last)[0];
    last = sp.ell.get_ui();
    FiniteField Fl = FiniteField::prime_field(last);
    std::vector<Int> s1 = specialize(F, sp.tau, sp.ell);
    std::vector<Int> s2 = specialize(F, sp.ell - sp.tau, sp.ell);
    PolyF p1 = to_polyf(s1, Fl), p2 = to_polyf(s2, Fl);
    if (deg(p1) != deg(fsq) || deg(p2) != deg(fsq)) continue;
    if (deg(gcd_monic(p1, derivative(p1))) != 0) continue;
    if (deg(gcd_monic(p2, derivative(p2))) != 0) continue;

    Int M = sp.ell;
    while (M < target) M *= sp.ell;
    Int tauM = lift_tau(sp.tau, wsq, sp.ell, M);
    std::vector<Int> F1 = specialize(F, tauM, M);
    std::vector<Int> F2 = specialize(F, M - tauM, M);
    std::vector<Int> dF1 = derivative_zp(F1), dF2 = derivative_zp(F2);

    std::vector<Int> lifted1, lifted2;
    for (const FFElem& r : roots_mod(p1))
      lifted1.push_back(lift_root(F1, dF1, Int(static_cast<unsigned long>(r.c[0])), sp.ell, M));
    for (const FFElem& r : roots_mod(p2))
      lifted2.push_back(lift_root(F2, dF2, Int(static_cast<unsigned long>(r.c[0])), sp.ell, M));

    Int inv2 = inv_mod(Int(2), M);
    Int inv2t = inv_mod(mod_pos(2 * tauM, M), M);
    for (const Int& r1 : lifted1) {
      for (const Int& r2 : lifted2) {
        Int aR = mod_pos((r1 + r2) * inv2, M);
        Int bR = mod_pos((r1 - r2) * inv2t, M);
        auto a = rational_reconstruct(aR, M, Nb, Db);
        auto b = rational_reconstruct(bR, M, Nb, Db);
        if (!a || !b) continue;
        QuadElem alpha(*a, *b, K);
        if (!is_zero(eval(fsq, alpha))) continue;
        if (seen.insert({*a, *b}).second) out.push_back(alpha);
      }
    }
    std::sort(out.begin(), out.end(), coeff_less);
    return out;
  }
  throw InsufficientGoodPrimes("no usable prime for root finding");
}

std::vector<QuadElem> roots_in_K(const PolyK& f) { return roots_in_K(f, field_of_polyk(f)); }

FactorsK factor_over_K(const PolyK& f, const FieldDesc& K) {
  PolyK fx = f;
  fx.normalize();
  if (fx.c.empty()) throw ZeroInput("factorization of zero polynomial");
  FactorsK res;
  res.unit = coerce(lc(fx), K.is_rational() ? lc(fx).field() : K);
  if (deg(fx) == 0) return res;
  if (deg(fx) > 40) throw DegreeTooLarge("exact factorization capped at degree 40");

  if (K.is_rational()) {
    FactorsQ fq = factor_q(polyq_from_k(fx));
    for (const auto& [g, m] : fq.parts) {
      if (m > 1) throw NotSquarefree("input has a repeated factor");
      res.parts.push_back(polyk_from_q(g, K));
    }
    return res;
  }

  for (auto& c : fx.c) c = coerce(c, K);
  PolyK gg = modular_gcd(fx, derivative(fx));
  if (deg(gg) > 0) throw NotSquarefree("input has a repeated factor");
  PolyK F0 = make_monic(fx);

  QuadElem w = gen_w(K);
  for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
    PolyK shift(std::vector<QuadElem>{QuadElem(Rat(-s)) * w, QuadElem(Rat(1))});
    PolyK gs = compose(F0, shift);
    PolyQ N = norm_to_q(gs);
    if (deg(gcd_monic(N, derivative(N))) != 0) continue;
    FactorsQ nf = factor_q(N);
    PolyK back(std::vector<QuadElem>{QuadElem(Rat(s)) * w, QuadElem(Rat(1))});
    std::vector<PolyK> parts;
    for (const auto& [Ni, m] : nf.parts) {
      (void)m;
      PolyK h = modular_gcd(gs, polyk_from_q(Ni, K));
      if (deg(h) < 1) continue;
      parts.push_back(make_monic(compose(h, back)));
    }
    PolyK prod = poly_const(one_like(res.unit));
    for (const PolyK& g : parts) prod = prod * g;
    if (prod == F0) {
      std::sort(parts.begin(), parts.end(), polyk_less);
      res.parts = std::move(parts);
      return res;
    }
  }
  throw InsufficientGoodPrimes("no squarefree norm shift found");
}

FactorsK factor_over_K(const PolyK& f) { return factor_over_K(f, field_of_polyk(f)); }

std::string to_string(const PolyK& f) {
  if (f.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.c.size(); i-- > 0;) {
    const QuadElem& c = f.c[i];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool paren = cs.find_first_of("+-", 1) != std::string::npos;
    bool neg = !paren && !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) {
        os << "-";
        cs = cs.substr(1);
      }
    } else {
      os << (neg ? "-" : "+");
      if (neg) cs = cs.substr(1);
    }
    bool unit_coeff = cs == "1";
    if (i == 0 || !unit_coeff) {
      os << (paren ? "(" + cs + ")" : cs);
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
