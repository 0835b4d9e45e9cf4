#pragma once

#include <quadtor/divpoly.hpp>

namespace quadtor {

using CurveF = Curve<FFElem>;
using PtF = Pt<FFElem>;

const FiniteField& field_of_curve(const CurveF& E);

// Reduction of E modulo a prime of K.  The model is first rescaled by the
// least positive integer u making every u^i a_i integral; u divisible by the
// residue characteristic is DenominatorClash, a singular reduction is
// BadReduction.  F must be the residue field of P and owns the coefficients.
CurveF reduce_mod(const CurveK& E, const PrimeK& P, const FiniteField& F);

// #E(F_q) including the point at infinity.  Naive character sweep for
// q <= 10^4, baby-step giant-step order finding in the Hasse interval above,
// FieldTooLarge past 10^6.
Int count_points(const CurveF& E);
Int count_points_naive(const CurveF& E);  // q <= 10^4 only
Int count_points_bsgs(const CurveF& E);   // odd characteristic

// Every rational point, the point at infinity included; q <= 10^4.
std::vector<PtF> all_points(const CurveF& E);

PtF random_point(const CurveF& E, Rng& rng);

// Exact order of P given any multiple of it.
Int order_of_point(const CurveF& E, const PtF& P, const Int& order_multiple);

// #E[m](F_q), via the full point list for q <= 10^4 and division-polynomial
// roots above.
Int count_m_torsion(const CurveF& E, unsigned m);

// Invariant pair (m, n) with E(F_q) isomorphic to Z_m x Z_n, m | n and
// m | q - 1, certified by a point of order n plus an m-torsion count of m^2.
std::pair<Int, Int> group_structure_ff(const CurveF& E);

}  // namespace quadtor
