#pragma once

#include <quadtor/elliptic.hpp>

namespace quadtor {

// Division polynomials in the y-free convention psi_2 = 2y + a1 x + a3,
// S := psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.  The stored polynomial at
// index n is psi_n itself for odd n and psi_n / psi_2 for even n, so every
// entry is a polynomial in x alone.  Requires characteristic 0 or odd.
template <class R>
struct DivisionChain {
  Poly<R> S;
  std::vector<Poly<R>> P;  // indices 0..nmax
};

template <class R>
DivisionChain<R> division_chain(const Curve<R>& E, unsigned nmax) {
  R one = one_like(E.a1);
  if (is_zero(one + one)) throw UnsupportedField("division polynomials need odd characteristic");
  DivisionChain<R> ch;
  ch.S = Poly<R>({E.b6, E.b4 + E.b4, E.b2, times_int(one, 4)});
  unsigned top = nmax < 4 ? 4 : nmax;
  ch.P.resize(top + 1);
  ch.P[0] = Poly<R>{};
  ch.P[1] = poly_const(one);
  ch.P[2] = poly_const(one);
  ch.P[3] = Poly<R>({E.b8, times_int(E.b6, 3), times_int(E.b4, 3), E.b2, times_int(one, 3)});
  ch.P[4] = Poly<R>({E.b4 * E.b8 - E.b6 * E.b6, E.b2 * E.b8 - E.b4 * E.b6, times_int(E.b8, 10),
                     times_int(E.b6, 10), times_int(E.b4, 5), E.b2, times_int(one, 2)});
  Poly<R> S2 = ch.S * ch.S;
  for (unsigned n = 5; n <= top; ++n) {
    unsigned m = n / 2;
    if (n % 2 == 1) {
      Poly<R> hi = ch.P[m + 2] * ch.P[m] * ch.P[m] * ch.P[m];
      Poly<R> lo = ch.P[m - 1] * ch.P[m + 1] * ch.P[m + 1] * ch.P[m + 1];
      ch.P[n] = m % 2 == 0 ? S2 * hi - lo : hi - S2 * lo;
    } else {
      ch.P[n] = ch.P[m] * (ch.P[m + 2] * ch.P[m - 1] * ch.P[m - 1] -
                           ch.P[m - 2] * ch.P[m + 1] * ch.P[m + 1]);
    }
  }
  return ch;
}

template <class R>
Poly<R> division_polynomial(const Curve<R>& E, unsigned n) {
  if (n == 0) throw ZeroInput("division polynomial index");
  return division_chain(E, n).P[n];
}

// Moebius product over d | n of the stored polynomials: the roots are
// exactly the x-coordinates of points of exact order n.  For n = 2 that
// role is played by S itself.
template <class R>
Poly<R> primitive_division_poly(const Curve<R>& E, unsigned n) {
  if (n == 0) throw ZeroInput("division polynomial index");
  DivisionChain<R> ch = division_chain(E, n);
  if (n == 1) return ch.P[1];
  if (n == 2) return ch.S;
  Poly<R> num = poly_const(one_like(E.a1));
  Poly<R> den = num;
  for (const Int& dI : divisors_of(Int(static_cast<long>(n)))) {
    unsigned d = static_cast<unsigned>(dI.get_ui());
    unsigned co = n / d;
    auto fac = factor_integer(Int(static_cast<long>(co)));
    bool sqfree = true;
    for (const auto& [p, e] : fac)
      if (e > 1) sqfree = false;
    if (!sqfree) continue;
    if (fac.size() % 2 == 0)
      num = num * ch.P[d];
    else
      den = den * ch.P[d];
  }
  return exact_div(num, den);
}

// Numerator and denominator of the x-coordinate of [m]P as rational
// functions of x = x(P), with no cancellation performed.
template <class R>
std::pair<Poly<R>, Poly<R>> mult_x_fraction(const Curve<R>& E, unsigned m) {
  if (m == 0) throw ZeroInput("multiplication index");
  DivisionChain<R> ch = division_chain(E, m + 1);
  Poly<R> x = poly_x(one_like(E.a1));
  if (m == 1) return {x, poly_const(one_like(E.a1))};
  Poly<R> sq = ch.P[m] * ch.P[m];
  Poly<R> cross = ch.P[m - 1] * ch.P[m + 1];
  if (m % 2 == 1) return {x * sq - ch.S * cross, sq};
  return {x * sq * ch.S - cross, sq * ch.S};
}

extern template struct DivisionChain<QuadElem>;
extern template struct DivisionChain<FFElem>;
extern template DivisionChain<QuadElem> division_chain(const Curve<QuadElem>&, unsigned);
extern template DivisionChain<FFElem> division_chain(const Curve<FFElem>&, unsigned);
extern template Poly<QuadElem> division_polynomial(const Curve<QuadElem>&, unsigned);
extern template Poly<FFElem> division_polynomial(const Curve<FFElem>&, unsigned);
extern template Poly<QuadElem> primitive_division_poly(const Curve<QuadElem>&, unsigned);
extern template Poly<FFElem> primitive_division_poly(const Curve<FFElem>&, unsigned);
extern template std::pair<Poly<QuadElem>, Poly<QuadElem>> mult_x_fraction(const Curve<QuadElem>&,
                                                                          unsigned);
extern template std::pair<Poly<FFElem>, Poly<FFElem>> mult_x_fraction(const Curve<FFElem>&,
                                                                      unsigned);

}  // namespace quadtor
