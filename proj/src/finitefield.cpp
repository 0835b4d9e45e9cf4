#include <quadtor/finitefield.hpp>

#include <algorithm>
#include <sstream>

namespace quadtor {
namespace {

using Vec = std::vector<std::uint64_t>;

// Dense polynomials over F_p, low-degree-first, used only for modulus
// bookkeeping inside this translation unit.

void vtrim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int vdeg(const Vec& a) { return static_cast<int>(a.size()) - 1; }

Vec vadd(const Vec& a, const Vec& b, std::uint64_t p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s >= p ? s - p : s;
  }
  vtrim(r);
  return r;
}

Vec vsub(const Vec& a, const Vec& b, std::uint64_t p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + p - y;
  }
  vtrim(r);
  return r;
}

Vec vmul(const Vec& a, const Vec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
  }
  vtrim(r);
  return r;
}

Vec vscale(const Vec& a, std::uint64_t s, std::uint64_t p) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod_u64(a[i], s, p);
  vtrim(r);
  return r;
}

// Remainder of a by monic-or-unit-lc b.
Vec vrem(Vec a, const Vec& b, std::uint64_t p) {
  vtrim(a);
  std::uint64_t li = invmod_u64(b.back(), p);
  while (vdeg(a) >= vdeg(b)) {
    std::uint64_t q = mulmod_u64(a.back(), li, p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      std::uint64_t t = mulmod_u64(q, b[i], p);
      std::uint64_t& x = a[shift + i];
      x = x >= t ? x - t : x + p - t;
    }
    vtrim(a);
  }
  return a;
}

Vec vgcd(Vec a, Vec b, std::uint64_t p) {
  vtrim(a);
  vtrim(b);
  while (!b.empty()) {
    Vec r = vrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = vscale(a, invmod_u64(a.back(), p), p);
  return a;
}

Vec vpowmod(Vec base, const Int& e, const Vec& mod, std::uint64_t p) {
  Vec r{1};
  base = vrem(std::move(base), mod, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = vrem(vmul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = vrem(vmul(r, base, p), mod, p);
  }
  return r;
}

// Rabin test: f monic of degree k is irreducible iff x^(p^k) = x mod f and
// gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k.
bool irreducible_mod_p(const Vec& f, std::uint64_t p) {
  int k = vdeg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  Vec x{0, 1};
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
  if (vsub(vpowmod(x, pk, f, p), x, p) != Vec{}) return false;
  auto fac = factor_integer(Int(k));
  for (const auto& [r, e] : fac) {
    (void)e;
    unsigned long kr = static_cast<unsigned long>(Int(k / r).get_ui());
    Int pkr;
    mpz_ui_pow_ui(pkr.get_mpz_t(), p, kr);
    Vec g = vgcd(vsub(vpowmod(x, pkr, f, p), x, p), f, p);
    if (vdeg(g) != 0) return false;
  }
  return true;
}

std::uint64_t mod_to_u64(const Int& n, std::uint64_t p) {
  Int r = n % Int(static_cast<unsigned long>(p));
  if (r < 0) r += Int(static_cast<unsigned long>(p));
  return r.get_ui();
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned k, Vec mod)
    : p_(p), k_(k), mod_(std::move(mod)) {
  mpz_ui_pow_ui(q_.get_mpz_t(), p_, k_);
}

FiniteField FiniteField::prime_field(std::uint64_t p) {
  if (!is_probable_prime(Int(static_cast<unsigned long>(p)))) throw UnsupportedField("characteristic must be prime");
  return FiniteField(p, 1, {0, 1});
}

FiniteField FiniteField::extension(std::uint64_t p, Vec modulus) {
  if (!is_probable_prime(Int(static_cast<unsigned long>(p)))) throw UnsupportedField("characteristic must be prime");
  vtrim(modulus);
  int k = vdeg(modulus);
  if (k < 1) throw UnsupportedField("modulus must be nonconstant");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw UnsupportedField("modulus must be monic");
  if (!irreducible_mod_p(modulus, p)) throw UnsupportedField("modulus is reducible");
  return FiniteField(p, static_cast<unsigned>(k), std::move(modulus));
}

FiniteField FiniteField::inert_quadratic(std::uint64_t p, const Int& wsq) {
  std::uint64_t c = mod_to_u64(-wsq, p);
  return extension(p, {c, 0, 1});
}

std::uint64_t FiniteField::order_u64() const {
  if (!q_.fits_ulong_p()) throw FieldTooLarge("field order exceeds machine range");
  return q_.get_ui();
}

FFElem FiniteField::zero() const { return FFElem(this, Vec(k_, 0)); }

FFElem FiniteField::one() const {
  Vec c(k_, 0);
  c[0] = p_ > 1 ? 1 : 0;
  return FFElem(this, c);
}

FFElem FiniteField::from_int(const Int& n) const {
  Vec c(k_, 0);
  c[0] = mod_to_u64(n, p_);
  return FFElem(this, c);
}

FFElem FiniteField::gen() const {
  if (k_ < 2) throw UnsupportedField("prime field has no extension generator");
  Vec c(k_, 0);
  c[1] = 1;
  return FFElem(this, c);
}

FFElem FiniteField::element_by_index(std::uint64_t idx) const {
  Vec c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  if (idx) throw FieldTooLarge("element index out of range");
  return FFElem(this, c);
}

std::uint64_t FiniteField::index_of(const FFElem& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
  return idx;
}

FFElem FiniteField::random_element(Rng& rng) const {
  Vec c(k_);
  for (auto& x : c) x = rng.below(p_);
  return FFElem(this, c);
}

namespace {

const FiniteField& field_of(const FFElem& a, const FFElem& b) {
  if (!a.F || !b.F || !(*a.F == *b.F))
    throw UnsupportedField("finite field element mismatch");
  return *a.F;
}

}  // namespace

FFElem operator+(const FFElem& a, const FFElem& b) {
  const FiniteField& F = field_of(a, b);
  FFElem r = F.zero();
  for (unsigned i = 0; i < F.degree(); ++i) {
    std::uint64_t s = a.c[i] + b.c[i];
    r.c[i] = s >= F.p() ? s - F.p() : s;
  }
  return r;
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  const FiniteField& F = field_of(a, b);
  FFElem r = F.zero();
  for (unsigned i = 0; i < F.degree(); ++i)
    r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + F.p() - b.c[i];
  return r;
}

FFElem operator-(const FFElem& a) {
  if (!a.F) throw UnsupportedField("unbound finite field element");
  return a.F->zero() - a;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  const FiniteField& F = field_of(a, b);
  Vec prod = vrem(vmul(a.c, b.c, F.p()), F.modulus(), F.p());
  prod.resize(F.degree(), 0);
  return FFElem(&F == a.F ? a.F : b.F, std::move(prod));
}

FFElem inv(const FFElem& a) {
  if (!a.F) throw UnsupportedField("unbound finite field element");
  if (is_zero(a)) throw DivisionByZero("finite field inverse of zero");
  const FiniteField& F = *a.F;
  if (F.degree() == 1)
    return FFElem(a.F, {invmod_u64(a.c[0], F.p())});
  // Extended Euclid in F_p[z] against the modulus.
  Vec r0 = F.modulus(), r1 = a.c;
  vtrim(r1);
  Vec s0 = {}, s1 = {1};
  std::uint64_t p = F.p();
  while (!r1.empty()) {
    std::uint64_t li = invmod_u64(r1.back(), p);
    Vec q;
    Vec rr = r0;
    vtrim(rr);
    while (vdeg(rr) >= vdeg(r1)) {
      std::uint64_t qc = mulmod_u64(rr.back(), li, p);
      size_t shift = rr.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = qc;
      for (size_t i = 0; i < r1.size(); ++i) {
        std::uint64_t t = mulmod_u64(qc, r1[i], p);
        std::uint64_t& x = rr[shift + i];
        x = x >= t ? x - t : x + p - t;
      }
      vtrim(rr);
    }
    Vec s2 = vsub(s0, vmul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rr);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd, a unit since the modulus is irreducible.
  Vec out = vscale(s0, invmod_u64(r0[0], p), p);
  out.resize(F.degree(), 0);
  return FFElem(a.F, std::move(out));
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * inv(b); }

FFElem pow_ff(FFElem base, Int e) {
  if (!base.F) throw UnsupportedField("unbound finite field element");
  if (e < 0) {
    base = inv(base);
    e = -e;
  }
  FFElem r = base.F->one();
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * base;
  }
  return r;
}

FFElem zero_like(const FFElem& a) {
  if (!a.F) throw UnsupportedField("unbound finite field element");
  return a.F->zero();
}

FFElem one_like(const FFElem& a) {
  if (!a.F) throw UnsupportedField("unbound finite field element");
  return a.F->one();
}

int chi_ff(const FFElem& a) {
  if (is_zero(a)) return 0;
  const FiniteField& F = *a.F;
  if (F.p() == 2) return 1;  // squaring is bijective in characteristic 2
  Int e = (F.order() - 1) / 2;
  FFElem t = pow_ff(a, e);
  return t == F.one() ? 1 : -1;
}

bool is_square_ff(const FFElem& a) { return chi_ff(a) >= 0; }

std::optional<FFElem> sqrt_ff(const FFElem& a) {
  if (!a.F) throw UnsupportedField("unbound finite field element");
  const FiniteField& F = *a.F;
  if (is_zero(a)) return F.zero();
  if (F.p() == 2) return pow_ff(a, F.order() / 2);
  if (chi_ff(a) != 1) return std::nullopt;
  // Tonelli-Shanks in the cyclic group F_q^*.
  Int q1 = F.order() - 1;
  Int t = q1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  FFElem n = F.zero();
  for (std::uint64_t idx = 1;; ++idx) {
    n = F.element_by_index(idx);
    if (chi_ff(n) == -1) break;
  }
  FFElem z = pow_ff(n, t);
  FFElem x = pow_ff(a, (t + 1) / 2);
  FFElem b = pow_ff(a, t);
  unsigned m = s;
  while (!(b == F.one())) {
    unsigned i = 0;
    FFElem bb = b;
    while (!(bb == F.one())) {
      bb = bb * bb;
      ++i;
    }
    FFElem zz = z;
    for (unsigned j = 0; j + i + 1 < m; ++j) zz = zz * zz;
    x = x * zz;
    z = zz * zz;
    b = b * z;
    m = i;
  }
  return x;
}

std::string to_string(const FFElem& a) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) os << ",";
    os << a.c[i];
  }
  os << "]";
  return os.str();
}

}  // namespace quadtor
