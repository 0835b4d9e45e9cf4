#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadtor/qfield.hpp"

using namespace quadtor;

namespace {
QuadElem elem(const FieldDesc& F, const Rat& a, const Rat& b) { return QuadElem(a, b, F); }
}  // namespace

TEST_CASE("field descriptors") {
  CHECK(FieldDesc::rationals().is_rational());
  for (int d : kClassNumberOneD) {
    FieldDesc K = FieldDesc::imaginary(d);
    CHECK(K.wsq() == -d);
    CHECK(K.d() == d);
    CHECK(K.class_number_one());
    CHECK(K.half_ring() == (d % 4 == 3));
  }
  CHECK_THROWS_AS(FieldDesc::imaginary(1), UnsupportedField);
  CHECK_THROWS_AS(FieldDesc::imaginary(3), UnsupportedField);
  CHECK_THROWS_AS(FieldDesc::imaginary(5), UnsupportedField);
  CHECK(FieldDesc::quadratic(2).wsq() == 2);
  CHECK(FieldDesc::quadratic(-3).half_ring());
  CHECK_THROWS_AS(FieldDesc::quadratic(4), UnsupportedField);
}

TEST_CASE("arithmetic in Q(sqrt(-2))") {
  FieldDesc K = FieldDesc::imaginary(2);
  QuadElem u = elem(K, 1, 1), v = elem(K, 1, -1);
  CHECK(u * v == QuadElem(Rat(3)));
  CHECK(norm(u) == 3);
  CHECK(conj(u) == v);
  CHECK(trace(u) == 2);
  QuadElem w = gen_w(K);
  CHECK(w * w == QuadElem(Rat(-2)));
  CHECK(u + v == QuadElem(Rat(2)));
  CHECK(u / v == elem(K, Rat(-1, 3), Rat(2, 3)));
  CHECK((u / v) * v == u);
  CHECK_THROWS_AS(u / QuadElem(Rat(0)), DivisionByZero);

  // rational-field operands coerce into the quadratic field
  QuadElem three(Rat(3));
  CHECK(three * w == elem(K, 0, 3));
  CHECK((three + w).field() == K);
}

TEST_CASE("integrality") {
  FieldDesc K2 = FieldDesc::imaginary(2), K7 = FieldDesc::imaginary(7);
  CHECK(is_integral(elem(K2, 3, -5)));
  CHECK(!is_integral(elem(K2, Rat(1, 2), Rat(1, 2))));
  CHECK(is_integral(elem(K7, Rat(1, 2), Rat(1, 2))));
  CHECK(is_integral(elem(K7, Rat(1, 2), Rat(3, 2))));
  CHECK(!is_integral(elem(K7, Rat(1, 2), 1)));
  CHECK(!is_integral(elem(K7, Rat(1, 3), Rat(1, 3))));
  CHECK(is_integral(QuadElem(Rat(4))));
  CHECK(!is_integral(QuadElem(Rat(1, 2))));
}

TEST_CASE("square roots in the field") {
  FieldDesc K = FieldDesc::imaginary(2);
  auto r = sqrt_in_field(QuadElem(Rat(-2), Rat(0), K));
  REQUIRE(r.has_value());
  CHECK(*r * *r == QuadElem(Rat(-2), Rat(0), K));
  CHECK(!sqrt_in_field(QuadElem(Rat(-1), Rat(0), K)).has_value());
  CHECK(!sqrt_in_field(QuadElem(Rat(2), Rat(1), K)).has_value());

  QuadElem s = elem(K, 5, -3);
  auto rr = sqrt_in_field(s * s);
  REQUIRE(rr.has_value());
  CHECK((*rr == s || *rr == -s));

  // real-quadratic verification fields support exact square roots too
  FieldDesc R = FieldDesc::quadratic(2);
  QuadElem t = elem(R, 5, 4);  // 5 + 4*sqrt(2), norm -7
  auto rt = sqrt_in_field(t * t);
  REQUIRE(rt.has_value());
  CHECK((*rt == t || *rt == -t));

  QuadElem zero_root = *sqrt_in_field(QuadElem(Rat(0), Rat(0), K));
  CHECK(zero_root.is_zero());
}

TEST_CASE("splitting types in Q(sqrt(-2))") {
  FieldDesc K = FieldDesc::imaginary(2);
  CHECK(splitting_type(Int(2), K) == SplitType::Ramified);
  CHECK(splitting_type(Int(3), K) == SplitType::Split);
  CHECK(splitting_type(Int(5), K) == SplitType::Inert);
  CHECK(splitting_type(Int(11), K) == SplitType::Split);
}

TEST_CASE("prime_above worked examples") {
  FieldDesc K2 = FieldDesc::imaginary(2);
  PrimeK p3 = prime_above(Int(3), K2);
  CHECK(p3.pi == elem(K2, 1, 1));
  CHECK(norm(p3.pi) == 3);
  CHECK(p3.residue_degree == 1);

  PrimeK p2 = prime_above(Int(2), K2);
  CHECK(p2.pi == elem(K2, 0, 1));
  CHECK(p2.type == SplitType::Ramified);

  PrimeK p5 = prime_above(Int(5), K2);
  CHECK(p5.residue_degree == 2);
  CHECK(p5.pi == QuadElem(Rat(5), Rat(0), K2));

  FieldDesc K7 = FieldDesc::imaginary(7);
  PrimeK q2 = prime_above(Int(2), K7);
  CHECK(q2.pi == elem(K7, Rat(1, 2), Rat(1, 2)));
  CHECK(norm(q2.pi) == 2);
  CHECK(q2.residue_degree == 1);

  FieldDesc K11 = FieldDesc::imaginary(11);
  CHECK(splitting_type(Int(2), K11) == SplitType::Inert);
  PrimeK r11 = prime_above(Int(11), K11);
  CHECK(r11.type == SplitType::Ramified);
  CHECK(norm(r11.pi) == 11);

  // w image: t^2 = wsq at every degree-1 prime
  for (int d : kClassNumberOneD) {
    FieldDesc K = FieldDesc::imaginary(d);
    for (Int p : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13), Int(17), Int(19), Int(163)}) {
      if (splitting_type(p, K) == SplitType::Inert) continue;
      for (const auto& P : primes_above(p, K)) {
        Int t = P.w_image;
        Int lhs = ((t * t - Int(K.wsq())) % p + p) % p;
        CHECK(lhs == 0);
      }
    }
  }
}

TEST_CASE("prime_above norm property") {
  for (int d : kClassNumberOneD) {
    FieldDesc K = FieldDesc::imaginary(d);
    for (uint32_t p : primes_upto(2000)) {
      auto ps = primes_above(Int(p), K);
      for (const auto& P : ps) {
        if (P.residue_degree == 2) {
          CHECK(norm(P.pi) == Rat(Int(p) * Int(p)));
        } else {
          CHECK(norm(P.pi) == Rat(Int(p)));
          CHECK(is_integral(P.pi));
        }
      }
      if (splitting_type(Int(p), K) == SplitType::Split) {
        CHECK(ps.size() == 2);
        CHECK(ps[0].pi.b() > 0);
        CHECK(!(ps[0].pi == ps[1].pi));
        CHECK((ps[0].pi * ps[1].pi == QuadElem(Rat(p)) || ps[0].pi * ps[1].pi == QuadElem(Rat(-Int(p)))));
      }
    }
  }
}

TEST_CASE("factor_integral round trips") {
  FieldDesc K = FieldDesc::imaginary(2);
  QuadElem v = elem(K, 6, 3);  // 3(2 + w), norm 9*6
  auto fac = factor_integral(v);
  QuadElem prod(Rat(fac.unit), Rat(0), K);
  for (const auto& [P, e] : fac.factors)
    for (unsigned i = 0; i < e; ++i) prod = prod * P.pi;
  CHECK(prod == v);

  CHECK_THROWS_AS(factor_integral(QuadElem(Rat(0), Rat(0), K)), ZeroInput);
  CHECK_THROWS_AS(factor_integral(elem(K, Rat(1, 2), 0)), NonIntegralInput);

  Rng rng(1234);
  for (int d : {2, 7, 19}) {
    FieldDesc F = FieldDesc::imaginary(d);
    int count = 0;
    for (int trial = 0; count < 60 && trial < 500; ++trial) {
      Rat a(rng.range(-50, 50)), b(rng.range(-50, 50));
      if (d % 4 == 3 && rng.range(0, 1)) {
        a += Rat(1, 2);
        b += Rat(1, 2);
      }
      QuadElem x(a, b, F);
      if (x.is_zero()) continue;
      ++count;
      auto f = factor_integral(x);
      QuadElem p(Rat(f.unit), Rat(0), F);
      for (const auto& [P, e] : f.factors)
        for (unsigned i = 0; i < e; ++i) p = p * P.pi;
      CHECK(p == x);
    }
    CHECK(count == 60);
  }
}

TEST_CASE("square_class examples") {
  // 12 = 2^2 * 3 with 3 split: class is 3 in every supported field
  for (int d : {2, 7, 11, 19, 43, 67, 163}) {
    FieldDesc K = FieldDesc::imaginary(d);
    QuadElem c = square_class(QuadElem(Rat(12), Rat(0), K));
    QuadElem ratio = QuadElem(Rat(12), Rat(0), K) / c;
    CHECK(sqrt_in_field(ratio).has_value());
  }
  FieldDesc K2 = FieldDesc::imaginary(2);
  CHECK(square_class(QuadElem(Rat(12), Rat(0), K2)) == QuadElem(Rat(3), Rat(0), K2));
  // -8 = (w^2)^3 / ... : -8 = w^6, a perfect square times unit 1
  CHECK(square_class(QuadElem(Rat(-8), Rat(0), K2)) == QuadElem(Rat(1), Rat(0), K2));
  // 2 = -w^2: the unit survives
  CHECK(square_class(QuadElem(Rat(2), Rat(0), K2)) == QuadElem(Rat(-1), Rat(0), K2));

  CHECK_THROWS_AS(square_class(QuadElem(Rat(0), Rat(0), K2)), ZeroInput);

  // idempotence and class invariance on random elements
  Rng rng(99);
  for (int d : {2, 7, 11}) {
    FieldDesc K = FieldDesc::imaginary(d);
    for (int i = 0; i < 40; ++i) {
      Rat a(rng.range(-30, 30), rng.range(1, 9)), b(rng.range(-30, 30), rng.range(1, 9));
      a.canonicalize();
      b.canonicalize();
      QuadElem x(a, b, K);
      if (x.is_zero()) continue;
      QuadElem c = square_class(x);
      CHECK(square_class(c) == c);
      CHECK(sqrt_in_field(x / c).has_value());
      QuadElem scaled = x * QuadElem(Rat(49), Rat(0), K);
      CHECK(square_class(scaled) == c);
      QuadElem twisted = x * gen_w(K) * gen_w(K);  // times w^2 = -d
      QuadElem ct = square_class(twisted);
      CHECK(sqrt_in_field(twisted / ct).has_value());
    }
  }

  // rational mode
  CHECK(square_class(QuadElem(Rat(12))) == QuadElem(Rat(3)));
  CHECK(square_class(QuadElem(Rat(-8))) == QuadElem(Rat(-2)));
  CHECK(square_class(QuadElem(Rat(9, 4))) == QuadElem(Rat(1)));
}

TEST_CASE("norm multiplicativity") {
  Rng rng(7);
  auto rat = [&](Rng& r) {
    Rat q(r.range(-99, 99), r.range(1, 7));
    q.canonicalize();
    return q;
  };
  for (int d : {2, 7, 163}) {
    FieldDesc K = FieldDesc::imaginary(d);
    for (int i = 0; i < 1000; ++i) {
      QuadElem x(rat(rng), rat(rng), K);
      QuadElem y(rat(rng), rat(rng), K);
      CHECK(norm(x * y) == norm(x) * norm(y));
    }
  }
}

TEST_CASE("element parse and print round trip") {
  FieldDesc K = FieldDesc::imaginary(2);
  for (const char* text : {"0", "1", "-1", "1/2", "-3/4", "w", "-w", "1+w", "-619/27-950/27*w",
                           "2-3*w", "1/2+5/2*w", "-7/3*w"}) {
    QuadElem v = parse_elem(text, K);
    CHECK(parse_elem(to_string(v), K) == v);
  }
  CHECK(parse_elem("1+w", K) == QuadElem(Rat(1), Rat(1), K));
  CHECK(parse_elem(" -619/27 - 950/27 * w ", K) == QuadElem(Rat(-619, 27), Rat(-950, 27), K));
  CHECK(to_string(parse_elem("1+1*w", K)) == "1+w");
  CHECK(parse_elem("5", FieldDesc::rationals()) == QuadElem(Rat(5)));
  CHECK_THROWS_AS(parse_elem("w", FieldDesc::rationals()), UnsupportedField);
  CHECK_THROWS_AS(parse_elem("1++", K), Error);
  CHECK_THROWS_AS(parse_elem("", K), Error);
}
