#pragma once

#include <quadtor/finitefield.hpp>
#include <quadtor/poly.hpp>

#include <vector>

namespace quadtor {

using PolyF = Poly<FFElem>;

bool is_irreducible_mod(const PolyF& f);

// Monic squarefree polynomial with the same irreducible divisors as f.
PolyF radical_mod(const PolyF& f);

// Full factorization over F_q: pairs (monic irreducible, multiplicity), sorted
// by degree then coefficient indices. Product over all factors, times lc(f),
// reassembles f. Equal-degree splitting needs odd q.
std::vector<std::pair<PolyF, unsigned>> factor_mod(const PolyF& f, Rng& rng);
std::vector<std::pair<PolyF, unsigned>> factor_mod(const PolyF& f);

// Distinct roots of f in the coefficient field, sorted by element index.
std::vector<FFElem> roots_mod(const PolyF& f, Rng& rng);
std::vector<FFElem> roots_mod(const PolyF& f);

}  // namespace quadtor
