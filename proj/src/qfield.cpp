#include "quadtor/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quadtor {

FieldDesc FieldDesc::imaginary(int d) {
  for (int k : kClassNumberOneD)
    if (k == d) return FieldDesc(-d);
  throw UnsupportedField("imaginary quadratic field with d = " + std::to_string(d));
}

FieldDesc FieldDesc::quadratic(int wsq) {
  if (wsq == 0 || wsq == 1) throw UnsupportedField("w^2 must not be 0 or 1");
  Int n = abs(Int(wsq));
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) throw UnsupportedField("w^2 must be squarefree");
  return FieldDesc(wsq);
}

bool FieldDesc::class_number_one() const {
  for (int k : kClassNumberOneD)
    if (wsq_ == -k) return true;
  return false;
}

int FieldDesc::d() const {
  if (wsq_ >= 0) throw UnsupportedField("d() on a non-imaginary descriptor");
  return -wsq_;
}

std::string FieldDesc::name() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q(sqrt(" << wsq_ << "))";
  return os.str();
}

QuadElem::QuadElem(Rat a, Rat b, FieldDesc F) : a_(std::move(a)), b_(std::move(b)), F_(F) {
  if (F_.is_rational() && b_ != 0)
    throw UnsupportedField("nonzero w-part over the rationals");
}

namespace {

// resolve the common field of two operands, lifting rational values
FieldDesc common_field(const QuadElem& x, const QuadElem& y) {
  if (x.field() == y.field()) return x.field();
  if (x.field().is_rational()) {
    if (x.b() != 0) throw Error("rational-field element with w-part");
    return y.field();
  }
  if (y.field().is_rational()) return x.field();
  throw Error("mixed quadratic fields: " + x.field().name() + " vs " + y.field().name());
}

}  // namespace

QuadElem coerce(const QuadElem& v, const FieldDesc& F) {
  if (v.field() == F) return v;
  if (!v.field().is_rational() || v.b() != 0)
    throw Error("cannot coerce " + to_string(v) + " into " + F.name());
  return QuadElem(v.a(), Rat(0), F);
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  FieldDesc F = common_field(x, y);
  return QuadElem(x.a() + y.a(), x.b() + y.b(), F);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  FieldDesc F = common_field(x, y);
  return QuadElem(x.a() - y.a(), x.b() - y.b(), F);
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  FieldDesc F = common_field(x, y);
  Rat wsq(F.wsq());
  return QuadElem(x.a() * y.a() + wsq * x.b() * y.b(),
                  x.a() * y.b() + x.b() * y.a(), F);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * inv(coerce(y, common_field(x, y))); }

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, F_); }

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.a() != y.a() || x.b() != y.b()) return false;
  if (x.b() != 0 && !(x.field() == y.field())) common_field(x, y);  // throws on mismatch
  return true;
}

QuadElem conj(const QuadElem& v) { return QuadElem(v.a(), -v.b(), v.field()); }

Rat norm(const QuadElem& v) { return v.a() * v.a() - Rat(v.field().wsq()) * v.b() * v.b(); }

Rat trace(const QuadElem& v) { return 2 * v.a(); }

QuadElem inv(const QuadElem& v) {
  Rat n = norm(v);
  if (n == 0) throw DivisionByZero("inverse of " + to_string(v));
  return QuadElem(v.a() / n, -v.b() / n, v.field());
}

bool is_integral(const QuadElem& v) {
  if (v.field().is_rational() || !v.field().half_ring())
    return v.a().get_den() == 1 && v.b().get_den() == 1;
  Rat two_a = 2 * v.a(), two_b = 2 * v.b(), sum = v.a() + v.b();
  return two_a.get_den() == 1 && two_b.get_den() == 1 && sum.get_den() == 1;
}

QuadElem gen_w(const FieldDesc& F) {
  if (F.is_rational()) throw UnsupportedField("gen_w over the rationals");
  return QuadElem(Rat(0), Rat(1), F);
}

std::optional<QuadElem> sqrt_in_field(const QuadElem& v) {
  if (v.is_zero()) return QuadElem(Rat(0), Rat(0), v.field());
  const FieldDesc& F = v.field();
  if (F.is_rational()) {
    auto r = exact_sqrt(v.a());
    if (!r) return std::nullopt;
    return QuadElem(*r);
  }
  Rat wsq(F.wsq());
  if (v.b() == 0) {
    if (auto r = exact_sqrt(v.a())) return QuadElem(*r, Rat(0), F);
    if (auto r = exact_sqrt(v.a() / wsq)) return QuadElem(Rat(0), *r, F);
    return std::nullopt;
  }
  auto n = exact_sqrt(norm(v));
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    Rat half = (v.a() + Rat(sign) * *n) / 2;
    auto x = exact_sqrt(half);
    if (!x || *x == 0) continue;
    Rat y = v.b() / (2 * *x);
    QuadElem s(*x, y, F);
    if (s * s == v) return s;
  }
  return std::nullopt;
}

SplitType splitting_type(const Int& p, const FieldDesc& F) {
  if (F.is_rational()) throw UnsupportedField("splitting_type over the rationals");
  Int wsq(F.wsq());
  if (p == 2) {
    if (!F.half_ring()) return SplitType::Ramified;
    Int m = ((wsq % 8) + 8) % 8;
    return m == 1 ? SplitType::Split : SplitType::Inert;
  }
  if (mpz_divisible_p(wsq.get_mpz_t(), p.get_mpz_t())) return SplitType::Ramified;
  int leg = mpz_legendre(wsq.get_mpz_t(), p.get_mpz_t());
  return leg == 1 ? SplitType::Split : SplitType::Inert;
}

namespace {

// quadratic form value of x + y*omega where omega generates the ring of
// integers (omega = w, or (1+w)/2 for half rings)
Int form_norm(const FieldDesc& F, const Int& x, const Int& y) {
  Int wsq(F.wsq());
  if (!F.half_ring()) return x * x - wsq * y * y;
  return x * x + x * y + y * y * (1 - wsq) / 4;
}

QuadElem from_omega_coords(const FieldDesc& F, const Int& x, const Int& y) {
  if (!F.half_ring()) return QuadElem(Rat(x), Rat(y), F);
  Rat a(2 * x + y, 2), b(y, 2);
  a.canonicalize();
  b.canonicalize();
  return QuadElem(a, b, F);
}

QuadElem canonical_sign(const QuadElem& g) {
  if (g.a() > 0) return g;
  if (g.a() == 0 && g.b() > 0) return g;
  return -g;
}

// Gauss-reduce the rank-2 lattice spanned by u, v under the norm form;
// returns a shortest nonzero vector
std::pair<Int, Int> shortest_vector(const FieldDesc& F, std::pair<Int, Int> u,
                                    std::pair<Int, Int> v) {
  auto N = [&](const std::pair<Int, Int>& t) { return form_norm(F, t.first, t.second); };
  while (true) {
    if (N(v) < N(u)) std::swap(u, v);
    Int nu = N(u);
    // 2*B(u,v) = N(u+v) - N(u) - N(v)
    Int twoB = form_norm(F, u.first + v.first, u.second + v.second) - nu - N(v);
    // mu = round(2B / 2N(u))
    Int num = twoB + nu, den = 2 * nu;
    Int mu;
    mpz_fdiv_q(mu.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (mu == 0) return u;
    v.first -= mu * u.first;
    v.second -= mu * u.second;
  }
}

Int w_image_mod_p(const QuadElem& pi, const Int& p) {
  // t with w = t (mod (pi)): from 2*pi = U + V*w in the prime's residue field
  Rat U2 = 2 * pi.a(), V2 = 2 * pi.b();
  Int U(U2.get_num()), V(V2.get_num());
  if (p == 2) {
    // ramified (pi = w, t = 0) or split half ring (pi = (1+-w)/2, w = -+1 = 1)
    return V % 2 == 0 ? Int(0) : Int(1);
  }
  Int Vp = V % p;
  if (Vp < 0) Vp += p;
  if (Vp == 0) throw Error("degenerate prime generator");
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Vp.get_mpz_t(), p.get_mpz_t());
  Int img = (-U * s) % p;
  if (img < 0) img += p;
  return img;
}

PrimeK make_prime(const FieldDesc&, const Int& p, SplitType type, const QuadElem& pi) {
  PrimeK P;
  P.p = p;
  P.pi = pi;
  P.type = type;
  P.residue_degree = type == SplitType::Inert ? 2 : 1;
  P.w_image = type == SplitType::Inert ? Int(0) : w_image_mod_p(pi, p);
  return P;
}

}  // namespace

std::vector<PrimeK> primes_above(const Int& p, const FieldDesc& F) {
  if (!is_probable_prime(p)) throw Error("primes_above: " + p.get_str() + " is not prime");
  if (F.is_rational()) {
    PrimeK P;
    P.p = p;
    P.pi = QuadElem(Rat(p));
    P.residue_degree = 1;
    P.type = SplitType::Split;
    P.w_image = 0;
    return {P};
  }
  if (!F.class_number_one())
    throw UnsupportedField("prime decomposition in " + F.name());
  SplitType type = splitting_type(p, F);
  if (type == SplitType::Inert)
    return {make_prime(F, p, type, QuadElem(Rat(p), Rat(0), F))};

  // root tau of the minimal polynomial of omega mod p
  Int tau;
  if (p == 2) {
    // half-ring split: omega^2 - omega + (1-wsq)/4 with both residues roots;
    // tau = 0 and tau = 1 give the two primes. ramified: omega = w, tau = 0.
    tau = 0;
  } else {
    Int wsq(F.wsq());
    Int a = ((wsq % p) + p) % p;
    auto t = sqrtmod_u64(a.get_ui(), p.get_ui());
    if (!t) throw Error("internal: no square root at a split prime");
    Int tt(static_cast<unsigned long>(*t));
    if (!F.half_ring()) {
      tau = tt;
    } else {
      // omega = (1+w)/2, so tau = (1+t)/2 mod p
      Int inv2((p + 1) / 2);
      tau = ((1 + tt) * inv2) % p;
    }
  }
  auto sv = shortest_vector(F, {p, Int(0)}, {tau, Int(-1)});
  QuadElem pi = canonical_sign(from_omega_coords(F, sv.first, sv.second));
  if (Rat(norm(pi)) != Rat(p))
    throw Error("norm equation failed at p = " + p.get_str());
  if (type == SplitType::Ramified) return {make_prime(F, p, type, pi)};
  QuadElem pibar = canonical_sign(conj(pi));
  PrimeK P1 = make_prime(F, p, type, pi);
  PrimeK P2 = make_prime(F, p, type, pibar);
  if (P1.pi.b() < 0) std::swap(P1, P2);
  return {P1, P2};
}

PrimeK prime_above(const Int& p, const FieldDesc& F) { return primes_above(p, F).front(); }

FactorizationK factor_integral(const QuadElem& v) {
  if (v.is_zero()) throw ZeroInput("factor_integral of 0");
  if (!is_integral(v)) throw NonIntegralInput(to_string(v));
  FactorizationK out;
  out.unit = 1;
  const FieldDesc& F = v.field();
  if (F.is_rational()) {
    Int n(v.a().get_num());
    out.unit = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(abs(n))) {
      PrimeK P;
      P.p = p;
      P.pi = QuadElem(Rat(p));
      P.residue_degree = 1;
      P.type = SplitType::Split;
      P.w_image = 0;
      out.factors.emplace_back(P, e);
    }
    return out;
  }
  if (!F.class_number_one())
    throw UnsupportedField("factorization in " + F.name());
  Rat nv = norm(v);
  if (nv.get_den() != 1) throw Error("internal: integral element with fractional norm");
  Int N(nv.get_num());
  QuadElem rest = v;
  auto divide_out = [&](const QuadElem& pi) {
    unsigned e = 0;
    while (true) {
      QuadElem q = rest * conj(pi);
      Rat np = norm(pi);
      q = QuadElem(q.a() / np, q.b() / np, F);
      if (!is_integral(q)) break;
      rest = q;
      ++e;
    }
    return e;
  };
  for (const auto& [p, eN] : factor_integer(N)) {
    SplitType type = splitting_type(p, F);
    if (type == SplitType::Inert) {
      if (eN % 2 != 0) throw Error("internal: odd inert exponent");
      unsigned e = eN / 2;
      Rat pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= Rat(p);
      rest = QuadElem(rest.a() / pe, rest.b() / pe, F);
      if (!is_integral(rest)) throw Error("internal: inert division failed");
      PrimeK P;
      P.p = p;
      P.pi = QuadElem(Rat(p), Rat(0), F);
      P.residue_degree = 2;
      P.type = type;
      P.w_image = 0;
      out.factors.emplace_back(P, e);
    } else {
      auto primes = primes_above(p, F);
      for (const auto& P : primes) {
        unsigned e = divide_out(P.pi);
        if (e) out.factors.emplace_back(P, e);
      }
    }
  }
  if (rest.b() != 0 || (rest.a() != 1 && rest.a() != -1))
    throw Error("internal: non-unit remainder " + to_string(rest));
  out.unit = rest.a() == 1 ? 1 : -1;
  return out;
}

QuadElem square_class(const QuadElem& v) {
  if (v.is_zero()) throw ZeroInput("square_class of 0");
  const FieldDesc& F = v.field();
  if (F.is_rational()) {
    Int n(v.a().get_num()), d(v.a().get_den());
    return QuadElem(Rat(squarefree_part(n * d)));
  }
  Int den = lcm_int(Int(v.a().get_den()), Int(v.b().get_den()));
  QuadElem scaled = v * QuadElem(Rat(den * den), Rat(0), F);
  FactorizationK fac = factor_integral(scaled);
  QuadElem rep(Rat(fac.unit), Rat(0), F);
  for (const auto& [P, e] : fac.factors)
    if (e % 2) rep = rep * P.pi;
  return rep;
}

std::string to_string(const QuadElem& v) {
  auto rat_str = [](const Rat& r) { return r.get_str(); };
  if (v.b() == 0) return rat_str(v.a());
  std::ostringstream os;
  bool lead = true;
  if (v.a() != 0) {
    os << rat_str(v.a());
    lead = false;
  }
  Rat b = v.b();
  if (!lead) os << (b > 0 ? "+" : "-");
  else if (b < 0) os << "-";
  Rat ab = abs(b);
  if (ab != 1) os << rat_str(ab) << "*";
  os << "w";
  return os.str();
}

QuadElem parse_elem(const std::string& text, const FieldDesc& F) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("parse_elem: empty input");
  Rat a(0), b(0);
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw Error("parse_elem: dangling sign in '" + text + "'");
    size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    bool has_digits = j > i;
    Rat coeff(1);
    if (has_digits) {
      std::string numtext = s.substr(i, j - i);
      if (numtext.front() == '/' || numtext.back() == '/' ||
          numtext.find("//") != std::string::npos)
        throw Error("parse_elem: bad rational '" + numtext + "'");
      coeff = Rat(numtext);
      coeff.canonicalize();
      i = j;
    }
    bool wterm = false;
    if (i < s.size() && (s[i] == '*' || s[i] == 'w')) {
      if (s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'w') throw Error("parse_elem: expected w in '" + text + "'");
      }
      ++i;  // past 'w'
      wterm = true;
    }
    if (!has_digits && !wterm) throw Error("parse_elem: junk in '" + text + "'");
    if (wterm)
      b += Rat(sign) * coeff;
    else
      a += Rat(sign) * coeff;
  }
  if (b != 0 && F.is_rational()) throw UnsupportedField("w-term over the rationals");
  return F.is_rational() ? QuadElem(a) : QuadElem(a, b, F);
}

}  // namespace quadtor
