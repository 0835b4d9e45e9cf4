#pragma once

#include <vector>

#include "quadtor/divpoly.hpp"
#include "quadtor/pointcount.hpp"

namespace quadtor {

// Divisibility bound on E(K)_tor from reductions at good primes of odd
// residue characteristic.  At least two distinct characteristics are used, so
// every prime-to-p torsion part injects at some retained prime.
struct TorsionBound {
  Int order_bound{1};            // |E(K)_tor| divides this
  Int m_bound{1}, n_bound{1};    // E(K)_tor embeds in Z_m + Z_n, m | n
  std::vector<Int> primes_used;  // residue characteristics, ascending
};

struct TorsionGen {
  PtK point;
  Int order{1};
  // Point lies on the twist E^d over K; under the twist isomorphism it gives
  // a point of E defined over K(sqrt d).
  bool on_twist = false;
};

// E(K)_tor or E(L)_tor as Z_m + Z_n with m | n, together with certified
// generators and the reduction data backing the bound.
struct TorsionStructure {
  Int m{1}, n{1};
  std::vector<TorsionGen> generators;
  FieldDesc field;
  QuadElem ext_d;        // L = K(sqrt(ext_d)) when extended
  bool extended = false;
  TorsionBound proof;
  Int order() const { return m * n; }
};

TorsionBound torsion_bound(const CurveK& E, const FieldDesc& K, unsigned prime_budget);

// x-coordinates in K of points of exact order n (n >= 2), whether or not the
// y-coordinate lies in K.
std::vector<QuadElem> exact_order_x_coords(const CurveK& E, const FieldDesc& K, unsigned n);

// The K-rational point above x, if any; its negative is the other choice.
std::optional<PtK> point_from_x(const CurveK& E, const FieldDesc& K, const QuadElem& x);

// All K-rational points of exact order n (n >= 2), each x contributing the
// point and its negative.
std::vector<PtK> points_of_exact_order(const CurveK& E, const FieldDesc& K, unsigned n);

// E(K)[n]: every K-rational point of order dividing n, infinity included.
std::vector<PtK> n_torsion_points(const CurveK& E, const FieldDesc& K, unsigned n);

TorsionStructure torsion_subgroup(const CurveK& E, const FieldDesc& K);

// E(K(sqrt d))_tor for non-square d, assembled from the odd parts of E(K) and
// E^d(K).  Requires E(K)[2] trivial; a square d returns E(K)_tor unchanged.
TorsionStructure torsion_over_quadratic_ext(const CurveK& E, const FieldDesc& K,
                                            const QuadElem& d);

std::string to_string(const TorsionStructure& T);

}  // namespace quadtor
