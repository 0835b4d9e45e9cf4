#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadtor/numutil.hpp"

namespace quadtor {

inline constexpr std::array<int, 7> kClassNumberOneD = {2, 7, 11, 19, 43, 67, 163};

// Base-field descriptor: the rationals, or a quadratic field Q(w) with
// w^2 = wsq (squarefree, not 0 or 1).  The torsion/twist pipeline supports
// the rationals and the seven non-cyclotomic imaginary quadratic fields of
// class number one; other quadratic descriptors carry exact arithmetic only
// (enough to evaluate points printed over auxiliary fields like Q(sqrt 2)).
class FieldDesc {
 public:
  FieldDesc() = default;  // the rationals
  static FieldDesc rationals() { return FieldDesc(); }
  static FieldDesc imaginary(int d);   // Q(sqrt(-d)), d in kClassNumberOneD
  static FieldDesc quadratic(int wsq); // arithmetic-only descriptor

  bool is_rational() const { return wsq_ == 0; }
  bool class_number_one() const;
  int wsq() const { return wsq_; }
  int d() const;  // = -wsq, valid for imaginary descriptors
  // ring of integers is Z[(1+w)/2] rather than Z[w]
  bool half_ring() const { return ((wsq_ % 4) + 4) % 4 == 1; }
  std::string name() const;

  bool operator==(const FieldDesc&) const = default;

 private:
  explicit FieldDesc(int wsq) : wsq_(wsq) {}
  int wsq_ = 0;
};

// Element a + b*w of a FieldDesc field.  A default-constructed or
// Rat-constructed element lives over the rationals and coerces into any
// quadratic field when combined with an element of that field.
class QuadElem {
 public:
  QuadElem() : a_(0), b_(0) {}
  QuadElem(const Rat& a) : a_(a), b_(0) {}          // NOLINT: implicit by design
  QuadElem(long a) : a_(a), b_(0) {}                // NOLINT
  QuadElem(const Int& a) : a_(Rat(a)), b_(0) {}     // NOLINT
  QuadElem(Rat a, Rat b, FieldDesc F);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const FieldDesc& field() const { return F_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational_value() const { return b_ == 0; }

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
  QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
  QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }
  QuadElem& operator/=(const QuadElem& y) { return *this = *this / y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y);
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

 private:
  Rat a_, b_;
  FieldDesc F_;
};

QuadElem conj(const QuadElem& v);
Rat norm(const QuadElem& v);   // a^2 - wsq*b^2 (= a^2 over Q)
Rat trace(const QuadElem& v);  // 2a
QuadElem inv(const QuadElem& v);
bool is_integral(const QuadElem& v);  // lies in the ring of integers
// w itself as an element of F (F must be quadratic)
QuadElem gen_w(const FieldDesc& F);
QuadElem coerce(const QuadElem& v, const FieldDesc& F);

std::optional<QuadElem> sqrt_in_field(const QuadElem& v);

enum class SplitType { Split, Inert, Ramified };

struct PrimeK {
  Int p;               // rational prime below
  QuadElem pi;         // generator; equals p for inert primes
  int residue_degree;  // 1 (split/ramified) or 2 (inert)
  SplitType type;
  // image of w in O_K/pi = F_p; only meaningful when residue_degree == 1
  Int w_image;
};

SplitType splitting_type(const Int& p, const FieldDesc& F);
// canonical prime above p; for split p, the one whose generator has b > 0
PrimeK prime_above(const Int& p, const FieldDesc& F);
// both primes above a split p (conjugate pair), one entry otherwise
std::vector<PrimeK> primes_above(const Int& p, const FieldDesc& F);

struct FactorizationK {
  int unit;  // +1 or -1
  std::vector<std::pair<PrimeK, unsigned>> factors;
};

// factorization of a nonzero integral element into canonical prime generators
FactorizationK factor_integral(const QuadElem& v);

// canonical square-class representative: unit times the product of the
// prime generators with odd exponent
QuadElem square_class(const QuadElem& v);

std::string to_string(const QuadElem& v);
// accepts sums of signed terms: rationals, "w", "c*w", e.g. "-619/27-950/27*w"
QuadElem parse_elem(const std::string& text, const FieldDesc& F);

// traits hooks used by the generic polynomial code
inline bool is_zero(const Rat& x) { return x == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inv(const Rat& x) {
  if (x == 0) throw DivisionByZero("rational inverse of 0");
  return Rat(1) / x;
}
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }
inline QuadElem zero_like(const QuadElem& x) { return QuadElem(Rat(0), Rat(0), x.field()); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem(Rat(1), Rat(0), x.field()); }

}  // namespace quadtor
