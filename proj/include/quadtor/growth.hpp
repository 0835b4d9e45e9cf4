#pragma once

#include <array>
#include <utility>

#include "quadtor/torsion.hpp"

namespace quadtor {

// the groups allowed over the rationals, as (m, n) invariants with m | n
inline constexpr std::array<std::pair<int, int>, 15> kMazurGroups = {
    {{1, 1},
     {1, 2},
     {1, 3},
     {1, 4},
     {1, 5},
     {1, 6},
     {1, 7},
     {1, 8},
     {1, 9},
     {1, 10},
     {1, 12},
     {2, 2},
     {2, 4},
     {2, 6},
     {2, 8}}};

// Mazur's groups plus the additions specific to one of the seven imaginary
// quadratic fields of class number one.
std::vector<std::pair<int, int>> allowed_torsion(const FieldDesc& K);

struct TwistWitness {
  QuadElem square_class;  // canonical class representative; 1 means K-rational torsion
  unsigned order;         // the odd order whose primitive part produced the root
  QuadElem witness_x;
};

// Roots x in K of the primitive division polynomials for the given odd
// orders, each tagged with the square class of S(x).  A class d != 1 entry
// says the twist E^d carries a K-point of that order, so the torsion grows
// over K(sqrt d).  Requires E(K)[2] trivial.
std::vector<TwistWitness> twist_scan(const CurveK& E, const FieldDesc& K,
                                     const std::vector<unsigned>& orders);

std::vector<unsigned> default_scan_orders();

struct GrowthFinding {
  QuadElem square_class;
  TorsionStructure twist_torsion;      // E^d(K)
  TorsionStructure extension_torsion;  // E(K(sqrt d)), recomputed from both sides
  bool in_main_list = false;           // extension group sits in the classified list
};

struct GrowthReport {
  TorsionStructure base;
  std::vector<GrowthFinding> findings;  // pairwise distinct nontrivial classes
  bool in_main_list = false;            // base and every finding classified
};

// Full growth classification of E over K across every quadratic extension.
// Each finding is checked against the classified extension groups and the
// per-base-torsion twist table; a breach throws TheoremViolation.
GrowthReport classify_growth(const CurveK& E, const FieldDesc& K);

}  // namespace quadtor
