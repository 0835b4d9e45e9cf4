#pragma once

#include <quadtor/polyff.hpp>
#include <quadtor/polyq.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace quadtor {

// Hyperelliptic curve y^2 + h(x) y = f(x) over Q of genus 1 to 3.  Internally
// the square is completed: F = 4f + h^2 must be squarefree of degree 2g+1 or
// 2g+2, and all arithmetic happens on y^2 = F(x).
struct HyperCurveQ {
  PolyQ f, h;
  PolyQ F;
  unsigned genus = 0;
  // Rational square root of lc(F) when it exists; fixes which point at
  // infinity is called plus on every reduction of an even-degree model.
  std::optional<Rat> leading_root;
};

HyperCurveQ make_hyper(const PolyQ& f, const PolyQ& h);
HyperCurveQ make_hyper(const PolyQ& f);

// Reduction y^2 = F(x) over a finite field of odd characteristic.  split
// means two rational points at infinity; vplus is then the polynomial of
// degree g+1 with lc(vplus) = s, s^2 = lc(F), deg(F - vplus^2) <= g, so that
// infinity_plus is the branch y ~ vplus(x).
struct HyperCurveF {
  const FiniteField* field = nullptr;
  PolyF F;
  unsigned genus = 0;
  bool split = false;
  PolyF vplus;
};

// Throws BadReductionPrime when a denominator dies, the degree drops, or
// F mod p is not squarefree.  The field must outlive the curve.
HyperCurveF reduce_hyper(const HyperCurveQ& C, const FiniteField& k);

// Number of points on the smooth projective model: chi sums over the affine
// line plus 2, 1, or 0 points at infinity as lc(F) is an even-degree square,
// the degree is odd, or lc(F) is an even-degree non-square.
Int count_curve_points(const HyperCurveF& C);
// Convenience: builds F_{p^k} with a deterministically chosen modulus.
// Throws FieldTooLarge when p^k exceeds the enumeration bound 2*10^6.
Int count_curve_points(const HyperCurveQ& C, std::uint64_t p, unsigned k);

// Balanced Mumford representative of a divisor class: u monic of degree at
// most g, deg v < deg u, u | F - v^2, and for split models a balance count n
// in [0, g - deg u].  The class is
//   [div(u, v) + n inf_plus + (g - deg u - n) inf_minus - D_inf]
// with D_inf = ceil(g/2) inf_plus + floor(g/2) inf_minus.  Representatives
// are unique, so equality of classes is equality of triples.  Ramified
// models keep balance = 0 throughout.
struct MumfordDivisor {
  PolyF u, v;
  int balance = 0;

  bool operator==(const MumfordDivisor& o) const {
    return u == o.u && v == o.v && balance == o.balance;
  }
  bool operator!=(const MumfordDivisor& o) const { return !(*this == o); }
};

MumfordDivisor jac_zero(const HyperCurveF& C);
bool is_jac_zero(const HyperCurveF& C, const MumfordDivisor& D);

// Class of [(x0, y0) - inf_plus] (split) or [(x0, y0) - inf] (ramified).
// Throws DivisorNotOnCurve when y0^2 != F(x0).
MumfordDivisor point_class(const HyperCurveF& C, const FFElem& x0, const FFElem& y0);

// Class of [inf_minus - inf_plus]; split models only.
MumfordDivisor infinity_class(const HyperCurveF& C);

MumfordDivisor cantor_add(const MumfordDivisor& D1, const MumfordDivisor& D2,
                          const HyperCurveF& C);
MumfordDivisor cantor_neg(const MumfordDivisor& D, const HyperCurveF& C);
MumfordDivisor cantor_mul(const Int& n, const MumfordDivisor& D, const HyperCurveF& C);

// Every balanced representative on C, in enumeration order.  Exhaustive
// audit for small fields; the count must match the Jacobian order.
std::vector<MumfordDivisor> enumerate_jacobian(const HyperCurveF& C);

}  // namespace quadtor
