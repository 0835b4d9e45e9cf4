#pragma once

#include <quadtor/polyk.hpp>

#include <string>

namespace quadtor {

// k copies of x by binary doubling; works in any coefficient ring hooked
// into zero_like/one_like.
template <class R>
R times_int(const R& x, long k) {
  R acc = zero_like(x);
  R base = k < 0 ? acc - x : x;
  unsigned long u = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  while (u) {
    if (u & 1) acc = acc + base;
    u >>= 1;
    if (u) base = base + base;
  }
  return acc;
}

// Long Weierstrass model y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// with the derived quantities precomputed.  Nonsingular by construction.
template <class R>
struct Curve {
  R a1, a2, a3, a4, a6;
  R b2, b4, b6, b8, c4, c6, disc;

  bool operator==(const Curve& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
  }
  bool operator!=(const Curve& o) const { return !(*this == o); }
};

template <class R>
Curve<R> make_curve(const R& a1, const R& a2, const R& a3, const R& a4, const R& a6) {
  Curve<R> E;
  E.a1 = a1;
  E.a2 = a2;
  E.a3 = a3;
  E.a4 = a4;
  E.a6 = a6;
  E.b2 = a1 * a1 + times_int(a2, 4);
  E.b4 = times_int(a4, 2) + a1 * a3;
  E.b6 = a3 * a3 + times_int(a6, 4);
  E.b8 = a1 * a1 * a6 + times_int(a2 * a6, 4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  E.c4 = E.b2 * E.b2 - times_int(E.b4, 24);
  E.c6 = times_int(E.b2 * E.b4, 36) - E.b2 * E.b2 * E.b2 - times_int(E.b6, 216);
  E.disc = times_int(E.b2 * E.b4 * E.b6, 9) - E.b2 * E.b2 * E.b8 -
           times_int(E.b4 * E.b4 * E.b4, 8) - times_int(E.b6 * E.b6, 27);
  if (is_zero(E.disc)) throw ZeroInput("singular curve");
  return E;
}

template <class R>
Curve<R> make_curve_short(const R& a4, const R& a6) {
  R z = zero_like(a4);
  return make_curve(z, z, z, a4, a6);
}

template <class R>
R j_invariant(const Curve<R>& E) {
  return E.c4 * E.c4 * E.c4 * inv(E.disc);
}

template <class R>
struct Pt {
  bool inf = true;
  R x{}, y{};

  bool operator==(const Pt& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Pt& o) const { return !(*this == o); }
};

template <class R>
Pt<R> affine_pt(const R& x, const R& y) {
  Pt<R> P;
  P.inf = false;
  P.x = x;
  P.y = y;
  return P;
}

template <class R>
bool on_curve(const Curve<R>& E, const Pt<R>& P) {
  if (P.inf) return true;
  R lhs = P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y;
  R rhs = P.x * P.x * P.x + E.a2 * P.x * P.x + E.a4 * P.x + E.a6;
  return lhs == rhs;
}

template <class R>
Pt<R> neg_pt(const Curve<R>& E, const Pt<R>& P) {
  if (P.inf) return P;
  return affine_pt(P.x, zero_like(P.y) - P.y - E.a1 * P.x - E.a3);
}

namespace detail {

// Chord-and-tangent addition, inputs assumed on the curve.
template <class R>
Pt<R> add_raw(const Curve<R>& E, const Pt<R>& P, const Pt<R>& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  R lam, nu;
  if (P.x == Q.x) {
    R negy = zero_like(Q.y) - Q.y - E.a1 * Q.x - E.a3;
    if (P.y == negy) return Pt<R>{};
    R den = P.y + P.y + E.a1 * P.x + E.a3;
    R x2 = P.x * P.x;
    R di = inv(den);
    lam = (times_int(x2, 3) + times_int(E.a2 * P.x, 2) + E.a4 - E.a1 * P.y) * di;
    nu = (E.a4 * P.x + times_int(E.a6, 2) - x2 * P.x - E.a3 * P.y) * di;
  } else {
    R di = inv(Q.x - P.x);
    lam = (Q.y - P.y) * di;
    nu = (P.y * Q.x - Q.y * P.x) * di;
  }
  R x3 = lam * lam + E.a1 * lam - E.a2 - P.x - Q.x;
  R y3 = zero_like(x3) - (lam + E.a1) * x3 - nu - E.a3;
  return affine_pt(x3, y3);
}

}  // namespace detail

template <class R>
Pt<R> add_pts(const Curve<R>& E, const Pt<R>& P, const Pt<R>& Q) {
  if (!on_curve(E, P) || !on_curve(E, Q)) throw PointNotOnCurve();
  return detail::add_raw(E, P, Q);
}

template <class R>
Pt<R> scalar_mul(const Int& n, const Pt<R>& P, const Curve<R>& E) {
  if (!on_curve(E, P)) throw PointNotOnCurve();
  Int m = n;
  Pt<R> base = P;
  if (m < 0) {
    m = -m;
    base = neg_pt(E, P);
  }
  Pt<R> acc;
  if (m == 0) return acc;
  for (long i = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    acc = detail::add_raw(E, acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      acc = detail::add_raw(E, acc, base);
  }
  return acc;
}

using CurveK = Curve<QuadElem>;
using PtK = Pt<QuadElem>;

// Twist by d of the squared model: complete the square to y^2 = x^3 + Ax^2 +
// Bx + C, then scale to x^3 + dAx^2 + d^2Bx + d^3C.  Characteristic zero.
CurveK quadratic_twist(const CurveK& E, const QuadElem& d);

// True iff the two-division cubic 4x^3 + b2 x^2 + 2 b4 x + b6 has no root
// in K, i.e. E(K)[2] = O.
bool two_torsion_trivial(const CurveK& E, const FieldDesc& K);

// "[a1,a2,a3,a4,a6]" or the short "[a4,a6]"; entries in qfield syntax.
CurveK parse_curve(const std::string& text, const FieldDesc& K);
std::string to_string(const CurveK& E);

}  // namespace quadtor
