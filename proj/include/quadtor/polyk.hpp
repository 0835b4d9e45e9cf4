#pragma once

#include <quadtor/polyq.hpp>

#include <vector>

namespace quadtor {

using PolyK = Poly<QuadElem>;

PolyK conj_poly(const PolyK& f);
// f times its conjugate; throws if the product fails to be rational.
PolyQ norm_to_q(const PolyK& f);

PolyK polyk_from_q(const PolyQ& f, const FieldDesc& K);
// Lifts coefficients into K; every coefficient of f must be rational.
PolyQ polyq_from_k(const PolyK& f);

// Residue field of a prime of K: F_p for split/ramified, F_p[z]/(z^2 - wsq)
// for inert.
FiniteField residue_field(const PrimeK& P, const FieldDesc& K);
FFElem reduce_elem(const QuadElem& x, const PrimeK& P, const FiniteField& F);
PolyF reduce_poly(const PolyK& f, const PrimeK& P, const FiniteField& F);

// All roots of f in K, verified by exact evaluation. The one-argument form
// reads the field off the coefficients; rational-valued polynomials then get
// their rational roots.
std::vector<QuadElem> roots_in_K(const PolyK& f, const FieldDesc& K);
std::vector<QuadElem> roots_in_K(const PolyK& f);

// f = unit * prod parts[i]; parts monic irreducible over K. Requires f
// squarefree, deg f <= 40.
struct FactorsK {
  QuadElem unit;
  std::vector<PolyK> parts;
};
FactorsK factor_over_K(const PolyK& f, const FieldDesc& K);
FactorsK factor_over_K(const PolyK& f);

// Monic gcd via split-prime reductions, CRT, rational reconstruction, and
// exact division checks.
PolyK modular_gcd(const PolyK& f, const PolyK& g);

std::string to_string(const PolyK& f);

}  // namespace quadtor
