#pragma once

#include <quadtor/errors.hpp>
#include <quadtor/numutil.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadtor {

class FiniteField;

// Element of F_{p^k}: coefficients in the power basis of the residue class of
// z, low degree first, always of length k with entries reduced mod p.
struct FFElem {
  const FiniteField* F = nullptr;
  std::vector<std::uint64_t> c;

  FFElem() = default;
  FFElem(const FiniteField* field, std::vector<std::uint64_t> coeffs)
      : F(field), c(std::move(coeffs)) {}

  bool operator==(const FFElem& o) const { return c == o.c; }
  bool operator!=(const FFElem& o) const { return c != o.c; }
  bool operator<(const FFElem& o) const { return c < o.c; }
};

// F_{p^k} = F_p[z]/(modulus); the modulus is monic, verified irreducible at
// construction. Field objects must outlive their elements.
class FiniteField {
 public:
  static FiniteField prime_field(std::uint64_t p);
  // modulus: monic over F_p, low-degree-first coefficients, length k+1, k >= 1.
  static FiniteField extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  // Residue field F_p[z]/(z^2 - wsq) for an inert rational prime p.
  static FiniteField inert_quadratic(std::uint64_t p, const Int& wsq);

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return k_; }
  const Int& order() const { return q_; }
  std::uint64_t order_u64() const;  // throws FieldTooLarge when the order exceeds uint64
  const std::vector<std::uint64_t>& modulus() const { return mod_; }

  FFElem zero() const;
  FFElem one() const;
  FFElem from_int(const Int& n) const;
  FFElem from_int(long n) const { return from_int(Int(n)); }
  FFElem gen() const;  // residue class of z; requires k >= 2
  FFElem element_by_index(std::uint64_t idx) const;  // base-p digit expansion
  std::uint64_t index_of(const FFElem& a) const;
  FFElem random_element(Rng& rng) const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
  }

 private:
  FiniteField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> mod);

  std::uint64_t p_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint64_t> mod_;
  Int q_;
};

FFElem operator+(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a);
FFElem operator*(const FFElem& a, const FFElem& b);
FFElem operator/(const FFElem& a, const FFElem& b);
FFElem inv(const FFElem& a);
FFElem pow_ff(FFElem base, Int e);

inline bool is_zero(const FFElem& a) {
  for (std::uint64_t x : a.c)
    if (x) return false;
  return true;
}
FFElem zero_like(const FFElem& a);
FFElem one_like(const FFElem& a);

bool is_square_ff(const FFElem& a);
// Square root when one exists; deterministic Tonelli-Shanks for odd q,
// Frobenius power for even q.
std::optional<FFElem> sqrt_ff(const FFElem& a);
// Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
int chi_ff(const FFElem& a);

std::string to_string(const FFElem& a);

}  // namespace quadtor
