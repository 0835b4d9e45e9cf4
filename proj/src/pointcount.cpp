#include <quadtor/pointcount.hpp>

#include <algorithm>
#include <map>

namespace quadtor {

namespace {

constexpr std::uint64_t kNaiveCap = 10000;
constexpr std::uint64_t kFieldCap = 1000000;

// S(x) = 4x^3 + b2 x^2 + 2 b4 x + b6, the squared 2-division polynomial.
FFElem eval_s(const CurveF& E, const FFElem& x) {
  const FiniteField& F = field_of_curve(E);
  FFElem four = F.from_int(4);
  return ((four * x + E.b2) * x + E.b4 + E.b4) * x + E.b6;
}

FFElem rhs_cubic(const CurveF& E, const FFElem& x) {
  return ((x + E.a2) * x + E.a4) * x + E.a6;
}

// Trace to F_2 of an element of a characteristic-two field, as 0 or 1.
std::uint64_t trace2(const FiniteField& F, const FFElem& z) {
  FFElem acc = z, pw = z;
  for (unsigned i = 1; i < F.degree(); ++i) {
    pw = pw * pw;
    acc = acc + pw;
  }
  return acc.c[0];
}

// Solutions y of y^2 + c y = g over F_{2^k} by direct sweep; fields of
// characteristic two reached here are tiny.
std::vector<FFElem> char2_y_solutions(const FiniteField& F, const FFElem& c, const FFElem& g) {
  std::vector<FFElem> out;
  if (is_zero(c)) {
    Int half = F.order() / 2;
    out.push_back(pow_ff(g, half));  // Frobenius is a bijection
    return out;
  }
  FFElem csq_inv = inv(c * c);
  if (trace2(F, g * csq_inv) != 0) return out;
  for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
    FFElem y = F.element_by_index(i);
    if (y * y + c * y == g) out.push_back(y);
  }
  return out;
}

// chi(t^2) = 1 lookup by element index; chi(0) handled by the caller.
std::vector<signed char> square_table(const FiniteField& F) {
  std::vector<signed char> sq(F.order_u64(), -1);
  for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
    FFElem t = F.element_by_index(i);
    sq[F.index_of(t * t)] = 1;
  }
  return sq;
}

Int interval_order_multiple(const CurveF& E, const PtF& P, const Int& lo, const Int& hi);

}  // namespace

const FiniteField& field_of_curve(const CurveF& E) {
  if (!E.a6.F) throw UnsupportedField("curve coefficients carry no field");
  return *E.a6.F;
}

CurveF reduce_mod(const CurveK& E, const PrimeK& P, const FiniteField& F) {
  std::array<std::pair<const QuadElem*, int>, 5> coeffs{
      {{&E.a1, 1}, {&E.a2, 2}, {&E.a3, 3}, {&E.a4, 4}, {&E.a6, 6}}};
  Int L = 1;
  for (auto [c, e] : coeffs) {
    L = lcm_int(L, c->a().get_den());
    L = lcm_int(L, c->b().get_den());
  }
  Int u = 0;
  for (const Int& d : divisors_of(L)) {
    bool ok = true;
    for (auto [c, e] : coeffs) {
      Int scale;
      mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
      if (!is_integral(QuadElem(Rat(scale)) * *c)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      u = d;
      break;
    }
  }
  if (u == 0) throw DenominatorClash("no integral rescaling");
  if (u % P.p == 0) throw DenominatorClash("denominator meets the residue characteristic");
  std::array<FFElem, 5> red{F.zero(), F.zero(), F.zero(), F.zero(), F.zero()};
  for (size_t i = 0; i < coeffs.size(); ++i) {
    auto [c, e] = coeffs[i];
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(e));
    red[i] = reduce_elem(QuadElem(Rat(scale)) * *c, P, F);
  }
  try {
    return make_curve(red[0], red[1], red[2], red[3], red[4]);
  } catch (const ZeroInput&) {
    throw BadReduction("singular reduction");
  }
}

Int count_points_naive(const CurveF& E) {
  const FiniteField& F = field_of_curve(E);
  std::uint64_t q = F.order_u64();
  if (q > kNaiveCap) throw FieldTooLarge("naive sweep capped at 10^4");
  Int count = 1;
  if (F.p() == 2) {
    for (std::uint64_t i = 0; i < q; ++i) {
      FFElem x = F.element_by_index(i);
      FFElem c = E.a1 * x + E.a3;
      count += static_cast<long>(char2_y_solutions(F, c, rhs_cubic(E, x)).size());
    }
    return count;
  }
  std::vector<signed char> sq = square_table(F);
  for (std::uint64_t i = 0; i < q; ++i) {
    FFElem s = eval_s(E, F.element_by_index(i));
    if (is_zero(s))
      count += 1;
    else
      count += 1 + sq[F.index_of(s)];
  }
  return count;
}

std::vector<PtF> all_points(const CurveF& E) {
  const FiniteField& F = field_of_curve(E);
  std::uint64_t q = F.order_u64();
  if (q > kNaiveCap) throw FieldTooLarge("point enumeration capped at 10^4");
  std::vector<PtF> pts;
  pts.push_back(PtF{});
  if (F.p() == 2) {
    for (std::uint64_t i = 0; i < q; ++i) {
      FFElem x = F.element_by_index(i);
      FFElem c = E.a1 * x + E.a3;
      for (const FFElem& y : char2_y_solutions(F, c, rhs_cubic(E, x)))
        pts.push_back(affine_pt(x, y));
    }
    return pts;
  }
  // Square roots tabulated by index: root_of[i] indexes one root of the
  // element with index i, or is q for a non-square.
  std::vector<std::uint64_t> root_of(q, q);
  for (std::uint64_t i = 0; i < q; ++i) {
    FFElem t = F.element_by_index(i);
    root_of[F.index_of(t * t)] = i;
  }
  FFElem inv2 = inv(F.from_int(2));
  for (std::uint64_t i = 0; i < q; ++i) {
    FFElem x = F.element_by_index(i);
    FFElem c = E.a1 * x + E.a3;
    FFElem s = eval_s(E, x);
    if (is_zero(s)) {
      pts.push_back(affine_pt(x, (F.zero() - c) * inv2));
      continue;
    }
    std::uint64_t r = root_of[F.index_of(s)];
    if (r == q) continue;
    FFElem rt = F.element_by_index(r);
    pts.push_back(affine_pt(x, (rt - c) * inv2));
    pts.push_back(affine_pt(x, (F.zero() - rt - c) * inv2));
  }
  return pts;
}

PtF random_point(const CurveF& E, Rng& rng) {
  const FiniteField& F = field_of_curve(E);
  if (F.p() == 2) {
    for (std::uint64_t i = 0; i < F.order_u64(); ++i) {
      FFElem x = F.element_by_index(i);
      auto ys = char2_y_solutions(F, E.a1 * x + E.a3, rhs_cubic(E, x));
      if (!ys.empty()) return affine_pt(x, ys[rng.below(ys.size())]);
    }
    return PtF{};
  }
  FFElem inv2 = inv(F.from_int(2));
  for (int tries = 0; tries < 4096; ++tries) {
    FFElem x = F.random_element(rng);
    FFElem s = eval_s(E, x);
    auto r = sqrt_ff(s);
    if (!r) continue;
    FFElem c = E.a1 * x + E.a3;
    FFElem y = (rng.below(2) ? *r - c : F.zero() - *r - c) * inv2;
    return affine_pt(x, y);
  }
  return PtF{};
}

Int order_of_point(const CurveF& E, const PtF& P, const Int& order_multiple) {
  if (scalar_mul(order_multiple, P, E) != PtF{})
    throw ZeroInput("claimed order multiple does not kill the point");
  Int e = order_multiple;
  for (const auto& [p, mult] : factor_integer(order_multiple)) {
    for (unsigned i = 0; i < mult; ++i) {
      Int trial = e / p;
      if (scalar_mul(trial, P, E) == PtF{})
        e = trial;
      else
        break;
    }
  }
  return e;
}

namespace {

// Smallest t in [lo, hi] with [t]P = O, by baby-step giant-step; the
// interval always contains a multiple of the order.
Int interval_order_multiple(const CurveF& E, const PtF& P, const Int& lo, const Int& hi) {
  if (P.inf) return lo;
  Int len = hi - lo + 1;
  Int bI = isqrt_floor(len) + 1;
  std::uint64_t b = bI.get_ui();
  // Baby table: x-key of [i]P for i in [0, b).
  std::map<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>, std::uint64_t> baby;
  PtF walk;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (walk.inf)
      baby.emplace(std::make_pair(std::vector<std::uint64_t>{}, std::vector<std::uint64_t>{}), i);
    else
      baby.emplace(std::make_pair(walk.x.c, walk.y.c), i);
    walk = add_pts(E, walk, P);
  }
  PtF negP = neg_pt(E, P);
  PtF giant = scalar_mul(lo, P, E);
  PtF stride = scalar_mul(static_cast<long>(b), P, E);
  Int best = -1;
  for (Int j = 0; lo + j * static_cast<long>(b) <= hi; j = j + 1) {
    // [lo + jb]P = -[i]P  <=>  [lo + jb + i]P = O
    PtF target = neg_pt(E, giant);
    auto key = target.inf
                   ? std::make_pair(std::vector<std::uint64_t>{}, std::vector<std::uint64_t>{})
                   : std::make_pair(target.x.c, target.y.c);
    auto it = baby.find(key);
    if (it != baby.end()) {
      Int t = lo + j * static_cast<long>(b) + static_cast<long>(it->second);
      if (t >= lo && t <= hi && (best < 0 || t < best)) best = t;
    }
    giant = add_pts(E, giant, stride);
  }
  if (best < 0) throw ZeroInput("Hasse interval missed the order");
  return best;
}

Int exhaustive_char_sum(const CurveF& E) {
  const FiniteField& F = field_of_curve(E);
  std::uint64_t q = F.order_u64();
  if (F.degree() == 1) {
    std::uint64_t p = F.p();
    std::uint64_t c3 = 4 % p, c2 = E.b2.c[0], c1 = (2 * E.b4.c[0]) % p, c0 = E.b6.c[0];
    Int count = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t s = mulmod_u64(c3, x, p);
      s = mulmod_u64(s + c2, x, p);
      s = mulmod_u64(s + c1, x, p);
      s = (s + c0) % p;
      count += 1 + legendre_u64(s, p);
    }
    return count;
  }
  std::vector<signed char> sq = square_table(F);
  Int count = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    FFElem s = eval_s(E, F.element_by_index(i));
    count += is_zero(s) ? 1 : 1 + sq[F.index_of(s)];
  }
  return count;
}

}  // namespace

Int count_points_bsgs(const CurveF& E) {
  const FiniteField& F = field_of_curve(E);
  if (F.p() == 2) throw UnsupportedField("order finding needs odd characteristic");
  std::uint64_t q = F.order_u64();
  if (q > kFieldCap) throw FieldTooLarge("point counting capped at 10^6");
  Int qI = F.order();
  Int s = isqrt_floor(4 * qI);
  Int lo = qI + 1 - s, hi = qI + 1 + s;
  if (lo < 1) lo = 1;

  // Non-square scaling for the matched quadratic twist: #E + #E' = 2q + 2.
  FFElem g = F.zero();
  for (std::uint64_t i = 1; i < q; ++i) {
    FFElem t = F.element_by_index(i);
    if (chi_ff(t) == -1) {
      g = t;
      break;
    }
  }
  FFElem inv4 = inv(F.from_int(4));
  FFElem A = E.b2 * inv4, B = E.b4 * inv(F.from_int(2)), C = E.b6 * inv4;
  CurveF curves[2] = {E, make_curve(F.zero(), g * A, F.zero(), g * g * B, g * g * g * C)};

  Rng rng(0x9e3779b97f4a7c15ULL ^ q);
  Int L[2] = {Int(1), Int(1)};
  for (int round = 0; round < 48; ++round) {
    int side = round % 2;
    PtF P = random_point(curves[side], rng);
    Int mult = interval_order_multiple(curves[side], P, lo, hi);
    Int e = P.inf ? Int(1) : order_of_point(curves[side], P, mult);
    L[side] = lcm_int(L[side], e);

    // Candidates for #E: multiples of L[0] whose twin 2q+2-N is a multiple
    // of L[1].
    std::vector<Int> cands;
    Int c = ((lo + L[0] - 1) / L[0]) * L[0];
    for (; c <= hi; c += L[0])
      if ((2 * qI + 2 - c) % L[1] == 0) cands.push_back(c);
    if (cands.size() == 1) return cands[0];
  }
  return exhaustive_char_sum(E);
}

Int count_points(const CurveF& E) {
  const FiniteField& F = field_of_curve(E);
  Int q = F.order();
  if (q > static_cast<long>(kFieldCap)) throw FieldTooLarge("point counting capped at 10^6");
  if (q <= static_cast<long>(kNaiveCap)) return count_points_naive(E);
  return count_points_bsgs(E);
}

Int count_m_torsion(const CurveF& E, unsigned m) {
  if (m == 0) throw ZeroInput("torsion index");
  const FiniteField& F = field_of_curve(E);
  if (m == 1) return 1;
  if (F.order_u64() <= kNaiveCap) {
    Int count = 0;
    for (const PtF& P : all_points(E))
      if (scalar_mul(static_cast<long>(m), P, E).inf) count += 1;
    return count;
  }
  if (F.p() == 2) throw UnsupportedField("large characteristic-two field");
  PolyF S({E.b6, E.b4 + E.b4, E.b2, F.from_int(4)});
  std::vector<FFElem> sroots = roots_mod(S);
  Int count = 1;
  if (m % 2 == 0) count += static_cast<long>(sroots.size());
  PolyF psi = division_polynomial(E, m);
  for (const FFElem& x : roots_mod(psi)) {
    FFElem s = eval_s(E, x);
    if (is_zero(s)) continue;  // order-2 x, already counted for even m
    count += 1 + chi_ff(s);
  }
  return count;
}

std::pair<Int, Int> group_structure_ff(const CurveF& E) {
  const FiniteField& F = field_of_curve(E);
  Int N = count_points(E);
  if (N == 1) return {Int(1), Int(1)};
  Int qm1 = F.order() - 1;

  // The exponent n is the maximal point order; then m = N / n, and the
  // structure is certified by an exhibited order-n point together with an
  // m-torsion count of exactly m^2.
  if (F.order_u64() <= kNaiveCap) {
    std::vector<PtF> pts = all_points(E);
    Int n = 1;
    for (const PtF& P : pts) {
      Int o = order_of_point(E, P, N);
      if (o > n) n = o;
    }
    Int m = N / n;
    if (n % m != 0 || qm1 % m != 0) throw GroupTooLarge("structure certification failed");
    Int cnt = 0;
    for (const PtF& P : pts)
      if (scalar_mul(m, P, E).inf) cnt += 1;
    if (cnt != m * m) throw GroupTooLarge("m-torsion count mismatch");
    return {m, n};
  }

  Rng rng(0xde0b6b3a7640000ULL ^ F.order_u64());
  Int e = 1;
  for (int tries = 0; tries < 512; ++tries) {
    PtF P = random_point(E, rng);
    if (P.inf) continue;
    Int o = order_of_point(E, P, N);
    e = lcm_int(e, o);
    if (o != e || N % e != 0) continue;  // need a single point attaining e
    Int m = N / e;
    if (e % m != 0 || qm1 % m != 0) continue;
    if (m > 32) throw GroupTooLarge("torsion certification beyond desk scale");
    if (count_m_torsion(E, static_cast<unsigned>(m.get_ui())) == m * m) return {m, e};
  }
  throw GroupTooLarge("no certified generator pair found");
}

}  // namespace quadtor
