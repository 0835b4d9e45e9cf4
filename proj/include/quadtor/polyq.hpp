#pragma once

#include <quadtor/polyff.hpp>
#include <quadtor/qfield.hpp>

#include <vector>

namespace quadtor {

using PolyQ = Poly<Rat>;

// f = unit * prod parts[i]^mult[i]; parts monic irreducible over Q.
struct FactorsQ {
  Rat unit;
  std::vector<std::pair<PolyQ, unsigned>> parts;
};

PolyQ poly_from_ints(const std::vector<Int>& c);
// Smallest positive den with den*f integral; returns the integer coefficients.
std::vector<Int> to_integer_poly(const PolyQ& f, Int& den);
PolyF reduce_integer_poly(const std::vector<Int>& c, const FiniteField& F);

// Monic squarefree pieces (g_i, i) with f = lc * prod g_i^i, Yun's algorithm.
std::vector<std::pair<PolyQ, unsigned>> squarefree_decompose_q(const PolyQ& f);
PolyQ squarefree_part_q(const PolyQ& f);

// Zassenhaus: modular factorization, multifactor quadratic Hensel lifting,
// subset recombination with exact trial division.
FactorsQ factor_q(const PolyQ& f);

// Lift a coprime monic factorization of f/lc(f) mod p to precision p^k;
// coefficients returned in [0, p^k). Requires p odd, p not dividing lc(f),
// f squarefree mod p.
std::vector<std::vector<Int>> hensel_lift(const std::vector<Int>& f,
                                          const std::vector<std::vector<Int>>& factors_mod_p,
                                          const Int& p, unsigned k);

std::vector<Rat> rational_roots(const PolyQ& f);

// Count of distinct real roots, exact Sturm chain.
int sturm_real_roots(const PolyQ& f);

std::string to_string(const PolyQ& f);

}  // namespace quadtor
