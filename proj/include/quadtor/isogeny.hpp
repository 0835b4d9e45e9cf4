#pragma once

#include <quadtor/divpoly.hpp>

#include <vector>

namespace quadtor {

// Monic polynomial in x cutting out the nonzero points of a cyclic subgroup
// of odd order N: the roots are the x-coordinates of the subgroup, so the
// degree is (N-1)/2.  A cyclic subgroup is determined by its x-set because
// it equals its own negative.
struct KernelPoly {
  unsigned N = 0;
  PolyK poly;
  // Coprime-order building blocks of poly: a single entry for a prime power
  // N, the two inputs followed by the exact-order-N part for a composite.
  std::vector<PolyK> components;
};

// Factor degrees of a kernel polynomial over the base field, ascending.
// heuristic marks a multiset inferred from reductions at split primes
// rather than an exact factorization over K.
struct KernelSignature {
  std::vector<int> degrees;
  bool heuristic = false;
};

// Numerator of h(num/den): h evaluated at a fraction and cleared of its
// denominator, h(num/den) * den^deg(h).
PolyK eval_fraction(const PolyK& h, const PolyK& num, const PolyK& den);

// True iff the root set of h is closed under the duplication map, i.e. h
// divides the numerator of h(x([2]P)).  The roots must avoid the
// two-torsion x-coordinates.
bool doubling_stable(const CurveK& E, const PolyK& h);

// All cyclic subgroups of E of order ell stable under the absolute Galois
// group of K, as monic kernel polynomials; ell in {3, 5, 7, 9, 11}.  Every
// returned h is certified by exact division: h divides the ell-division
// polynomial and passes doubling_stable.  Sorted by degree then
// coefficients; empty when no stable subgroup exists.
std::vector<KernelPoly> stable_cyclic_kernels(const CurveK& E, const FieldDesc& K, unsigned ell);

// Kernel polynomial of the cyclic subgroup generated by two stable kernels
// of coprime odd orders a and b: the product hA * hB * h_ab where h_ab is
// the common divisor of psi_ab^prim and the two pullbacks
// num hA(x([b]P)), num hB(x([a]P)).  Degree (ab-1)/2.  IncompatibleOrders
// unless the orders are coprime, odd, and at least 3; ZeroInput when an
// input fails its own kernel certificate on E.
KernelPoly composite_kernel_poly(const CurveK& E, const FieldDesc& K, const KernelPoly& hA,
                                 const KernelPoly& hB);

// Factor degrees of f.poly over K.  Degree at most 40 factors exactly;
// larger inputs fall back to degree multisets of reductions at 20 split
// primes of squarefree reduction, coarsened until mutually consistent and
// flagged heuristic.
KernelSignature signature(const KernelPoly& f, const FieldDesc& K);

// Every factor degree at most 2: necessary for the kernel points to become
// rational in a single quadratic extension of K.
bool pointwise_quadratic_feasible(const KernelSignature& sig);
bool pointwise_quadratic_feasible(const KernelPoly& f, const FieldDesc& K);

}  // namespace quadtor
