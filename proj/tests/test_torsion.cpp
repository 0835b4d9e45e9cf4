#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quadtor/torsion.hpp>

using namespace quadtor;

namespace {

// the nine-torsion curves found by the division polynomial twist search
CurveK nine_curve_w2(const FieldDesc& K) {
  return parse_curve(
      "[-950/27*w-619/27,16720/243*w-210862/243,16720/243*w-210862/243,0,0]", K);
}

CurveK nine_curve_w11(const FieldDesc& K) {
  return parse_curve(
      "[-2072/27*w-4265/27,-949568/243*w+377548/243,-949568/243*w+377548/243,0,0]", K);
}

bool divides(const Int& a, const Int& b) { return b % a == 0; }

}  // namespace

TEST_CASE("X0(21) torsion is Z2+Z4 over every base field") {
  FieldDesc Q = FieldDesc::rationals();
  CurveK E = parse_curve("[1,0,0,-4,-1]", Q);
  TorsionStructure T = torsion_subgroup(E, Q);
  CHECK(T.m == 2);
  CHECK(T.n == 4);
  CHECK(to_string(T) == "Z2+Z4");
  REQUIRE(T.generators.size() == 2);
  CHECK(T.generators[0].order == 4);
  CHECK(T.generators[1].order == 2);
  for (const TorsionGen& g : T.generators) {
    CHECK(on_curve(E, g.point));
    CHECK(scalar_mul(g.order, g.point, E).inf);
  }
  CHECK(divides(T.order(), T.proof.order_bound));
  for (int d : {2, 7, 11, 19, 43, 67, 163}) {
    FieldDesc K = FieldDesc::imaginary(d);
    TorsionStructure TK = torsion_subgroup(E, K);
    CHECK(TK.m == 2);
    CHECK(TK.n == 4);
  }
}

TEST_CASE("X0(27) torsion is Z3 over the base fields") {
  FieldDesc Q = FieldDesc::rationals();
  CurveK E = parse_curve("[0,0,1,0,-7]", Q);
  TorsionStructure T = torsion_subgroup(E, Q);
  CHECK(T.m == 1);
  CHECK(T.n == 3);
  CHECK(to_string(T) == "Z3");
  for (int d : {2, 43}) {
    TorsionStructure TK = torsion_subgroup(E, FieldDesc::imaginary(d));
    CHECK(TK.m == 1);
    CHECK(TK.n == 3);
  }
}

TEST_CASE("nine torsion over the base field, certified generator") {
  FieldDesc K2 = FieldDesc::imaginary(2);
  CurveK E1 = nine_curve_w2(K2);
  TorsionStructure T1 = torsion_subgroup(E1, K2);
  CHECK(T1.m == 1);
  CHECK(T1.n == 9);
  CHECK(divides(Int(9), T1.proof.order_bound));
  REQUIRE(T1.generators.size() == 1);
  const PtK& G = T1.generators[0].point;
  CHECK(scalar_mul(Int(9), G, E1).inf);
  CHECK(!scalar_mul(Int(3), G, E1).inf);

  FieldDesc K11 = FieldDesc::imaginary(11);
  TorsionStructure T2 = torsion_subgroup(nine_curve_w11(K11), K11);
  CHECK(T2.m == 1);
  CHECK(T2.n == 9);
}

TEST_CASE("odd torsion growth to Z3+Z9 over a quadratic extension") {
  FieldDesc K2 = FieldDesc::imaginary(2);
  CurveK E1 = nine_curve_w2(K2);
  TorsionStructure L1 = torsion_over_quadratic_ext(E1, K2, QuadElem(-3));
  CHECK(L1.m == 3);
  CHECK(L1.n == 9);
  CHECK(L1.extended);
  CHECK(to_string(L1) == "Z3+Z9");
  REQUIRE(L1.generators.size() == 2);
  CHECK(L1.generators[0].order == 9);
  CHECK_FALSE(L1.generators[0].on_twist);
  CHECK(L1.generators[1].order == 3);
  CHECK(L1.generators[1].on_twist);
  CurveK Etw = quadratic_twist(E1, QuadElem(-3));
  CHECK(on_curve(E1, L1.generators[0].point));
  CHECK(on_curve(Etw, L1.generators[1].point));

  FieldDesc K11 = FieldDesc::imaginary(11);
  TorsionStructure L2 = torsion_over_quadratic_ext(nine_curve_w11(K11), K11, QuadElem(-3));
  CHECK(L2.m == 3);
  CHECK(L2.n == 9);
}

TEST_CASE("trivial torsion certified by the prime bound") {
  FieldDesc K = FieldDesc::imaginary(7);
  CurveK E = parse_curve("[0,5]", K);
  TorsionStructure T = torsion_subgroup(E, K);
  CHECK(T.m == 1);
  CHECK(T.n == 1);
  CHECK(to_string(T) == "Z1");
  CHECK(T.proof.order_bound == 1);
  CHECK(T.proof.primes_used.size() <= 8);
  // no division polynomial root carries a K-rational point
  for (unsigned n : {3u, 5u, 7u}) CHECK(points_of_exact_order(E, K, n).empty());
}

TEST_CASE("seven torsion does not grow in quadratic extensions") {
  FieldDesc K = FieldDesc::imaginary(7);
  CurveK E = parse_curve("[-1,-4,-4,0,0]", K);
  TorsionStructure T = torsion_subgroup(E, K);
  CHECK(T.m == 1);
  CHECK(T.n == 7);
  for (QuadElem d : {QuadElem(5), gen_w(K), QuadElem(-2)}) {
    TorsionStructure L = torsion_over_quadratic_ext(E, K, d);
    CHECK(L.m == 1);
    CHECK(L.n == 7);
    CHECK(L.extended);
  }
}

TEST_CASE("square twist leaves the base torsion unchanged") {
  FieldDesc K = FieldDesc::imaginary(2);
  CurveK E = parse_curve("[0,0,1,0,-7]", K);
  TorsionStructure L = torsion_over_quadratic_ext(E, K, QuadElem(4));
  CHECK(L.m == 1);
  CHECK(L.n == 3);
  CHECK_FALSE(L.extended);
  // -2 is a square in this field
  TorsionStructure L2 = torsion_over_quadratic_ext(E, K, QuadElem(-2));
  CHECK_FALSE(L2.extended);
  CHECK(L2.n == 3);
}

TEST_CASE("extension path rejects curves with two torsion") {
  FieldDesc K = FieldDesc::imaginary(2);
  CurveK E = parse_curve("[0,0,0,-1,0]", K);
  CHECK_THROWS_AS(torsion_over_quadratic_ext(E, K, QuadElem(5)), NontrivialTwoTorsion);
}

TEST_CASE("bound computation needs two characteristics") {
  FieldDesc K = FieldDesc::imaginary(7);
  CurveK E = parse_curve("[0,5]", K);
  CHECK_THROWS_AS(torsion_bound(E, K, 1), InsufficientGoodPrimes);
}

TEST_CASE("order thirteen is scanned, never realized") {
  FieldDesc Q = FieldDesc::rationals();
  CurveK E = parse_curve("[0,1]", Q);
  CHECK(points_of_exact_order(E, Q, 13).empty());
}

TEST_CASE("odd torsion of the extension decomposes through the twist") {
  Rng rng(47);
  const int fields[] = {2, 7, 11, 19, 43, 67, 163};
  int done = 0;
  while (done < 25) {
    FieldDesc K = FieldDesc::imaginary(fields[done % 7]);
    CurveK E;
    try {
      E = make_curve(QuadElem(0), QuadElem(0), QuadElem(0), QuadElem(rng.range(-8, 8)),
                     QuadElem(rng.range(-8, 8)));
    } catch (const ZeroInput&) {
      continue;
    }
    if (!two_torsion_trivial(E, K)) continue;
    QuadElem d(rng.range(-7, 7));
    if (is_zero(d) || sqrt_in_field(coerce(d, K))) continue;
    TorsionStructure L = torsion_over_quadratic_ext(E, K, d);
    CHECK(divides(L.order(), L.proof.order_bound));
    CurveK Ed = quadratic_twist(E, d);
    for (unsigned n : {3u, 5u, 7u, 9u}) {
      Int expect(static_cast<long>(n_torsion_points(E, K, n).size() *
                                   n_torsion_points(Ed, K, n).size()));
      Int got = gcd(Int(static_cast<long>(n)), L.m) * gcd(Int(static_cast<long>(n)), L.n);
      CHECK(got == expect);
    }
    ++done;
  }
}
