#include <quadtor/torsion.hpp>

#include <quadtor/growth.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace quadtor {

namespace {

unsigned euler_phi_small(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) r -= r / n;
  return r;
}

int field_degree(const FieldDesc& K) { return K.is_rational() ? 1 : 2; }

unsigned valuation(Int n, const Int& ell) {
  unsigned v = 0;
  while (n % ell == 0) {
    n /= ell;
    ++v;
  }
  return v;
}

Int pow_int(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// order check by scalar multiplication: nP = O and (n/ell)P != O for primes ell
void certify_order(const CurveK& E, const PtK& P, const Int& n) {
  if (!scalar_mul(n, P, E).inf) throw IncompatibleOrders("point order does not divide claim");
  for (const auto& [ell, e] : factor_integer(n)) {
    (void)e;
    if (scalar_mul(n / ell, P, E).inf) throw IncompatibleOrders("point order below claim");
  }
}

// every element a*G + b*H for 0 <= a < n, 0 <= b < m; distinct iff spanning
std::vector<PtK> span_points(const CurveK& E, const PtK& G, const Int& n, const PtK& H,
                             const Int& m) {
  std::vector<PtK> row{PtK{}};
  for (Int a(1); a < n; ++a) row.push_back(add_pts(E, row.back(), G));
  std::vector<PtK> all = row;
  PtK shift = H;
  for (Int b(1); b < m; ++b) {
    for (const PtK& P : row) all.push_back(add_pts(E, P, shift));
    shift = add_pts(E, shift, H);
  }
  return all;
}

bool all_distinct(const std::vector<PtK>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

void assert_allowed(const Int& m, const Int& n, const FieldDesc& K) {
  if (!K.is_rational() && !K.class_number_one()) return;
  std::pair<int, int> g{static_cast<int>(m.get_si()), static_cast<int>(n.get_si())};
  bool listed = false;
  if (K.is_rational()) {
    for (const auto& mg : kMazurGroups) listed = listed || mg == g;
  } else {
    for (const auto& ag : allowed_torsion(K)) listed = listed || ag == g;
  }
  if (!listed)
    throw TheoremViolation("torsion " + std::to_string(g.first) + "," + std::to_string(g.second) +
                           " outside the classified list for " + K.name());
}

}  // namespace

TorsionBound torsion_bound(const CurveK& E, const FieldDesc& K, unsigned prime_budget) {
  struct Obs {
    Int p, a, b;
  };
  std::vector<Obs> obs;
  std::set<Int> chars;
  static const std::vector<uint32_t> pool = primes_upto(500);
  for (uint32_t pu : pool) {
    if (pu == 2) continue;
    if (obs.size() >= prime_budget) break;
    Int p(static_cast<long>(pu));
    PrimeK P = prime_above(p, K);
    FiniteField F = residue_field(P, K);
    CurveF Eb;
    try {
      Eb = reduce_mod(E, P, F);
    } catch (const DenominatorClash&) {
      continue;
    } catch (const BadReduction&) {
      continue;
    }
    std::pair<Int, Int> st;
    try {
      st = group_structure_ff(Eb);
    } catch (const GroupTooLarge&) {
      continue;
    } catch (const FieldTooLarge&) {
      continue;
    }
    obs.push_back({p, st.first, st.second});
    chars.insert(p);
  }
  if (chars.size() < 2)
    throw InsufficientGoodPrimes("good reduction at two distinct odd characteristics required");

  std::set<Int> ells;
  for (const Obs& o : obs)
    for (const auto& [f, e] : factor_integer(o.a * o.b)) {
      (void)e;
      ells.insert(f);
    }
  TorsionBound bd;
  for (const Int& ell : ells) {
    unsigned eo = ~0u, ea = ~0u, eb = ~0u;
    for (const Obs& o : obs) {
      if (o.p == ell) continue;  // reduction controls only prime-to-p torsion
      eo = std::min(eo, valuation(o.a * o.b, ell));
      ea = std::min(ea, valuation(o.a, ell));
      eb = std::min(eb, valuation(o.b, ell));
    }
    bd.order_bound *= pow_int(ell, eo);
    bd.m_bound *= pow_int(ell, ea);
    bd.n_bound *= pow_int(ell, eb);
  }
  for (const Obs& o : obs) bd.primes_used.push_back(o.p);
  return bd;
}

std::vector<QuadElem> exact_order_x_coords(const CurveK& E, const FieldDesc& K, unsigned n) {
  if (n < 2) throw ZeroInput("exact order starts at 2");
  return roots_in_K(primitive_division_poly(E, n), K);
}

std::optional<PtK> point_from_x(const CurveK& E, const FieldDesc& K, const QuadElem& x) {
  QuadElem xc = coerce(x, K);
  QuadElem s = ((QuadElem(Rat(4)) * xc + E.b2) * xc + E.b4 + E.b4) * xc + E.b6;
  auto r = sqrt_in_field(coerce(s, K));
  if (!r) return std::nullopt;
  QuadElem y = (*r - E.a1 * xc - E.a3) / QuadElem(Rat(2));
  return affine_pt(xc, y);
}

std::vector<PtK> points_of_exact_order(const CurveK& E, const FieldDesc& K, unsigned n) {
  std::vector<PtK> out;
  for (const QuadElem& x : exact_order_x_coords(E, K, n)) {
    auto P = point_from_x(E, K, x);
    if (!P) continue;
    certify_order(E, *P, Int(static_cast<long>(n)));
    out.push_back(*P);
    PtK Q = neg_pt(E, *P);
    if (!(Q == *P)) out.push_back(Q);
  }
  return out;
}

std::vector<PtK> n_torsion_points(const CurveK& E, const FieldDesc& K, unsigned n) {
  std::vector<PtK> out{PtK{}};
  for (unsigned e = 2; e <= n; ++e) {
    if (n % e != 0) continue;
    for (const PtK& P : points_of_exact_order(E, K, e)) out.push_back(P);
  }
  return out;
}

namespace {

TorsionStructure realize(const CurveK& E, const FieldDesc& K, const TorsionBound& bd) {
  const Int& nb = bd.n_bound;
  TorsionStructure T;
  T.field = K;
  T.proof = bd;

  std::vector<PtK> two_pts;
  if (nb % 2 == 0) two_pts = points_of_exact_order(E, K, 2);
  unsigned e2 = 1;
  PtK even_gen{};
  if (!two_pts.empty()) {
    e2 = 2;
    even_gen = two_pts[0];
  }
  std::vector<PtK> four_pts;
  if (e2 == 2 && nb % 4 == 0) {
    four_pts = points_of_exact_order(E, K, 4);
    if (!four_pts.empty()) {
      e2 = 4;
      even_gen = four_pts[0];
      if (nb % 8 == 0) {
        std::vector<PtK> eight = points_of_exact_order(E, K, 8);
        if (!eight.empty()) {
          e2 = 8;
          even_gen = eight[0];
        }
      }
    }
  }
  unsigned m2 = two_pts.size() == 3 ? 2 : 1;
  if (m2 == 2 && four_pts.size() == 12)
    throw TheoremViolation("full 4-torsion requires a fourth root of unity");

  // odd part: cyclic witnesses per prime, plus the full-3-torsion rank check
  std::map<unsigned, std::pair<PtK, unsigned>> odd_witness;
  std::vector<PtK> three_pts;
  if (nb % 3 == 0) {
    three_pts = points_of_exact_order(E, K, 3);
    if (!three_pts.empty()) {
      odd_witness[3] = {three_pts[0], 3};
      if (nb % 9 == 0) {
        std::vector<PtK> nine = points_of_exact_order(E, K, 9);
        if (!nine.empty()) odd_witness[3] = {nine[0], 9};
      }
    }
  }
  unsigned m3 = 1;
  if (three_pts.size() == 8) {
    if (euler_phi_small(3) > static_cast<unsigned>(field_degree(K)))
      throw TheoremViolation("full 3-torsion requires a cube root of unity");
    m3 = 3;
  }
  for (unsigned ell : {5u, 7u, 11u, 13u}) {
    if (nb % ell != 0) continue;
    std::vector<PtK> pts = points_of_exact_order(E, K, ell);
    if (pts.size() == static_cast<size_t>(ell) * ell - 1)
      throw TheoremViolation("full p-torsion beyond the root of unity bound");
    if (!pts.empty()) odd_witness[ell] = {pts[0], ell};
  }

  Int n(static_cast<long>(e2));
  PtK G = even_gen;
  for (const auto& [ell, wit] : odd_witness) {
    (void)ell;
    G = add_pts(E, G, wit.first);
    n *= static_cast<long>(wit.second);
  }
  Int m(static_cast<long>(m2 * m3));
  if (n > 1) certify_order(E, G, n);

  // a second generator of order m independent of G, certified by spanning
  PtK H{};
  if (m > 1) {
    std::vector<PtK> cands;
    if (m2 == 2 && m3 == 1) {
      cands = two_pts;
    } else if (m3 == 3 && m2 == 1) {
      cands = three_pts;
    } else {
      for (const PtK& a : two_pts)
        for (const PtK& b : three_pts) cands.push_back(add_pts(E, a, b));
    }
    bool found = false;
    for (const PtK& cand : cands) {
      std::vector<PtK> span = span_points(E, G, n, cand, m);
      if (all_distinct(span)) {
        H = cand;
        found = true;
        break;
      }
    }
    if (!found) throw IncompatibleOrders("no independent generator for the smaller invariant");
  } else {
    std::vector<PtK> span = span_points(E, G, n, PtK{}, Int(1));
    if (!all_distinct(span)) throw IncompatibleOrders("cyclic generator repeats early");
  }

  T.m = m;
  T.n = n;
  if (n > 1) T.generators.push_back({G, n, false});
  if (m > 1) T.generators.push_back({H, m, false});
  return T;
}

}  // namespace

TorsionStructure torsion_subgroup(const CurveK& E, const FieldDesc& K) {
  unsigned budget = 5;
  TorsionBound bd = torsion_bound(E, K, budget);
  TorsionStructure T = realize(E, K, bd);
  while (T.order() != bd.order_bound && budget < 12) {
    ++budget;
    TorsionBound bd2 = torsion_bound(E, K, budget);
    bool same = bd2.n_bound == bd.n_bound && bd2.m_bound == bd.m_bound;
    bd = bd2;
    if (!same) T = realize(E, K, bd);
    T.proof = bd;
  }
  assert_allowed(T.m, T.n, K);
  return T;
}

TorsionStructure torsion_over_quadratic_ext(const CurveK& E, const FieldDesc& K,
                                            const QuadElem& d) {
  if (is_zero(d)) throw ZeroTwist();
  if (!two_torsion_trivial(E, K)) throw NontrivialTwoTorsion("E(K)[2] must be trivial");
  QuadElem dc = coerce(d, K);
  if (sqrt_in_field(dc)) return torsion_subgroup(E, K);

  TorsionStructure T1 = torsion_subgroup(E, K);
  TorsionStructure T2 = torsion_subgroup(quadratic_twist(E, dc), K);
  if (T1.n % 2 == 0 || T2.n % 2 == 0)
    throw TheoremViolation("even torsion despite trivial 2-torsion");
  if (T1.m != 1 || T2.m != 1)
    throw TheoremViolation("non-cyclic odd torsion over the base field");

  Int n1 = T1.n, n2 = T2.n;
  Int m = gcd(n1, n2);
  Int n = lcm_int(n1, n2);
  for (const auto& [p, e] : factor_integer(m)) {
    (void)e;
    if (p != 3) throw TheoremViolation("full p-torsion over L for a prime other than 3");
  }
  if (euler_phi_small(static_cast<unsigned>(m.get_ui())) >
      static_cast<unsigned>(2 * field_degree(K)))
    throw TheoremViolation("full m-torsion beyond the root of unity bound");

  TorsionStructure R;
  R.m = m;
  R.n = n;
  R.field = K;
  R.ext_d = dc;
  R.extended = true;
  for (const TorsionGen& g : T1.generators) R.generators.push_back(g);
  for (TorsionGen g : T2.generators) {
    g.on_twist = true;
    R.generators.push_back(g);
  }
  R.proof.order_bound = T1.proof.order_bound * T2.proof.order_bound;
  R.proof.m_bound = m;
  R.proof.n_bound = n;
  std::set<Int> ps(T1.proof.primes_used.begin(), T1.proof.primes_used.end());
  ps.insert(T2.proof.primes_used.begin(), T2.proof.primes_used.end());
  R.proof.primes_used.assign(ps.begin(), ps.end());
  return R;
}

std::string to_string(const TorsionStructure& T) {
  std::ostringstream os;
  if (T.m == 1 && T.n == 1) return "Z1";
  if (T.m > 1) os << "Z" << T.m.get_str() << "+";
  os << "Z" << T.n.get_str();
  return os.str();
}

}  // namespace quadtor
