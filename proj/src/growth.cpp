#include <quadtor/growth.hpp>

#include <quadtor/divpoly.hpp>

#include <set>

namespace quadtor {

namespace {

// the odd groups that can appear as E(L)_tor for L quadratic over K
const std::set<std::pair<long, long>> kOddExtensionGroups = {
    {1, 1}, {1, 3}, {1, 5}, {1, 7}, {1, 9}, {1, 11}, {1, 15}, {3, 3}, {3, 9}};

// twist torsion orders compatible with the given odd cyclic base order
std::set<long> allowed_twist_orders(long base, int d) {
  bool wide = d == 2 || d == 11;
  switch (base) {
    case 1:
      return {1, 3, 5, 7, 9, 11, 15};
    case 3:
      return wide ? std::set<long>{1, 3, 5, 9} : std::set<long>{1, 3, 5};
    case 5:
      return {1, 3};
    case 7:
    case 11:
    case 15:
      return {1};
    case 9:
      return wide ? std::set<long>{1, 3} : std::set<long>{1};
    default:
      throw TheoremViolation("odd cyclic base torsion outside the classified orders");
  }
}

}  // namespace

std::vector<std::pair<int, int>> allowed_torsion(const FieldDesc& K) {
  if (!K.class_number_one())
    throw UnsupportedField("no classified torsion list for " + K.name());
  std::vector<std::pair<int, int>> out(kMazurGroups.begin(), kMazurGroups.end());
  auto add = [&out](int m, int n) { out.push_back({m, n}); };
  switch (K.d()) {
    case 2:
      add(1, 11);
      add(2, 10);
      break;
    case 7:
      add(1, 11);
      add(1, 14);
      add(1, 15);
      break;
    case 11:
      add(1, 14);
      add(1, 15);
      add(2, 10);
      break;
    case 19:
      add(1, 11);
      add(2, 10);
      add(2, 12);
      break;
    case 43:
      add(1, 11);
      add(1, 14);
      add(1, 15);
      add(2, 12);
      break;
    default:  // 67 and 163
      add(1, 14);
      add(1, 15);
      add(2, 12);
      break;
  }
  return out;
}

std::vector<unsigned> default_scan_orders() { return {3, 5, 7, 9, 11, 13}; }

std::vector<TwistWitness> twist_scan(const CurveK& E, const FieldDesc& K,
                                     const std::vector<unsigned>& orders) {
  if (!two_torsion_trivial(E, K)) throw NontrivialTwoTorsion("scan requires E(K)[2] trivial");
  std::vector<TwistWitness> out;
  for (unsigned n : orders) {
    if (n < 3 || n % 2 == 0) throw ZeroInput("scan orders must be odd and at least 3");
    for (const QuadElem& x : roots_in_K(primitive_division_poly(E, n), K)) {
      // s is the square of 2y + a1 x + a3 at any point above x, so its
      // square class names the extension where the point becomes rational
      QuadElem s = ((QuadElem(Rat(4)) * x + E.b2) * x + E.b4 + E.b4) * x + E.b6;
      if (is_zero(s)) continue;
      out.push_back({square_class(s), n, x});
    }
  }
  return out;
}

GrowthReport classify_growth(const CurveK& E, const FieldDesc& K) {
  if (!K.class_number_one())
    throw UnsupportedField("growth classification needs an imaginary quadratic base field");
  if (!two_torsion_trivial(E, K)) throw NontrivialTwoTorsion("E(K)[2] must be trivial");

  GrowthReport rep;
  rep.base = torsion_subgroup(E, K);
  if (rep.base.m != 1 || rep.base.n % 2 == 0)
    throw TheoremViolation("even or non-cyclic base torsion despite trivial 2-torsion");
  std::set<long> twist_orders = allowed_twist_orders(rep.base.n.get_si(), K.d());

  std::vector<TwistWitness> scan = twist_scan(E, K, default_scan_orders());
  std::vector<QuadElem> classes;
  for (const TwistWitness& tw : scan) {
    if (tw.square_class == QuadElem(Rat(1))) continue;  // K-rational torsion
    bool seen = false;
    for (const QuadElem& c : classes) seen = seen || c == tw.square_class;
    if (!seen) classes.push_back(tw.square_class);
  }

  for (const QuadElem& d : classes) {
    GrowthFinding f;
    f.square_class = d;
    f.twist_torsion = torsion_subgroup(quadratic_twist(E, d), K);
    if (f.twist_torsion.m != 1 || f.twist_torsion.n % 2 == 0)
      throw TheoremViolation("even or non-cyclic twist torsion despite trivial 2-torsion");
    if (!twist_orders.count(f.twist_torsion.n.get_si()))
      throw TheoremViolation("twist torsion outside the classified orders for base " +
                             to_string(rep.base));
    for (const TwistWitness& tw : scan)
      if (tw.square_class == d && f.twist_torsion.n % static_cast<long>(tw.order) != 0)
        throw TheoremViolation("scan order missing from the twist torsion");

    f.extension_torsion = torsion_over_quadratic_ext(E, K, d);
    f.in_main_list =
        kOddExtensionGroups.count({f.extension_torsion.m.get_si(),
                                   f.extension_torsion.n.get_si()}) != 0;
    if (!f.in_main_list)
      throw TheoremViolation("extension torsion " + to_string(f.extension_torsion) +
                             " outside the classified list");
    if (f.extension_torsion.m == 3 && f.extension_torsion.n == 9 && K.d() != 2 && K.d() != 11)
      throw TheoremViolation("Z3+Z9 outside Q(sqrt(-2)) and Q(sqrt(-11))");
    rep.findings.push_back(f);
  }

  rep.in_main_list = kOddExtensionGroups.count({rep.base.m.get_si(), rep.base.n.get_si()}) != 0;
  for (const GrowthFinding& f : rep.findings) rep.in_main_list = rep.in_main_list && f.in_main_list;
  return rep;
}

}  // namespace quadtor
