#include <quadtor/polyff.hpp>

#include <algorithm>
#include <map>

namespace quadtor {
namespace {

const FiniteField& field_of(const PolyF& f) {
  if (f.c.empty() || !f.c[0].F) throw ZeroInput("polynomial carries no field");
  return *f.c[0].F;
}

// Inverse of the p-th power Frobenius on coefficients: c -> c^(q/p).
FFElem pth_root_coeff(const FFElem& a) {
  const FiniteField& F = *a.F;
  if (F.degree() == 1) return a;
  return pow_ff(a, F.order() / F.p());
}

// f with derivative zero is g(x^p); recover g.
PolyF pth_root(const PolyF& f) {
  const FiniteField& F = field_of(f);
  std::uint64_t p = F.p();
  std::vector<FFElem> g;
  for (size_t i = 0; i < f.c.size(); i += p) g.push_back(pth_root_coeff(f.c[i]));
  return PolyF(std::move(g));
}

// Equal-degree splitting of a squarefree monic product of degree-d
// irreducibles, Cantor-Zassenhaus.
void edf(const PolyF& f, int d, Rng& rng, std::vector<PolyF>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  const FiniteField& F = field_of(f);
  if (F.p() == 2) throw UnsupportedField("equal-degree splitting needs odd characteristic");
  Int e = 1;
  for (int i = 0; i < d; ++i) e *= F.order();
  e = (e - 1) / 2;
  while (true) {
    std::vector<FFElem> ac;
    for (int i = 0; i < deg(f); ++i) ac.push_back(F.random_element(rng));
    PolyF a(std::move(ac));
    if (deg(a) < 1) continue;
    PolyF g = gcd_monic(a, f);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      edf(g, d, rng, out);
      edf(exact_div(f, g), d, rng, out);
      return;
    }
    PolyF b = pow_mod(a, e, f) - poly_const(F.one());
    g = gcd_monic(b, f);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      edf(g, d, rng, out);
      edf(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

// Distinct-degree decomposition of squarefree monic f, then equal-degree
// splitting of each part.
std::vector<PolyF> split_squarefree(PolyF f, Rng& rng) {
  const FiniteField& F = field_of(f);
  std::vector<PolyF> out;
  PolyF x = poly_x(F.one());
  PolyF h = rem(x, f);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = pow_mod(h, F.order(), f);
    PolyF g = gcd_monic(h - x, f);
    if (deg(g) > 0) {
      edf(g, d, rng, out);
      f = exact_div(f, g);
      h = rem(h, f);
    }
  }
  if (deg(f) > 0) out.push_back(make_monic(f));
  return out;
}

bool poly_less(const PolyF& a, const PolyF& b) {
  if (deg(a) != deg(b)) return deg(a) < deg(b);
  const FiniteField& F = field_of(a);
  for (size_t i = a.c.size(); i-- > 0;) {
    std::uint64_t ia = F.index_of(a.c[i]), ib = F.index_of(b.c[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

bool is_irreducible_mod(const PolyF& f) {
  int k = deg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const FiniteField& F = field_of(f);
  PolyF m = make_monic(f);
  PolyF x = poly_x(F.one());
  Int qk = 1;
  for (int i = 0; i < k; ++i) qk *= F.order();
  if ((pow_mod(x, qk, m) - x).c.empty() == false) return false;
  for (const auto& [r, e] : factor_integer(Int(k))) {
    (void)e;
    Int qkr = 1;
    for (Int i = 0; i < k / r; ++i) qkr *= F.order();
    PolyF g = gcd_monic(pow_mod(x, qkr, m) - x, m);
    if (deg(g) != 0) return false;
  }
  return true;
}

PolyF radical_mod(const PolyF& f) {
  if (f.c.empty()) throw ZeroInput("radical of zero polynomial");
  const FiniteField& F = field_of(f);
  PolyF res = poly_const(F.one());
  PolyF g = make_monic(f);
  while (deg(g) > 0) {
    PolyF d = derivative(g);
    if (d.c.empty()) {
      g = make_monic(pth_root(g));
      continue;
    }
    PolyF r = exact_div(g, gcd_monic(g, d));
    res = exact_div(res * r, gcd_monic(res, r));
    // Remove every occurrence of the factors of r from g.
    while (true) {
      PolyF s = gcd_monic(g, r);
      if (deg(s) == 0) break;
      g = exact_div(g, s);
    }
  }
  return res;
}

std::vector<std::pair<PolyF, unsigned>> factor_mod(const PolyF& f, Rng& rng) {
  if (f.c.empty()) throw ZeroInput("factorization of zero polynomial");
  if (deg(f) == 0) return {};
  PolyF rad = radical_mod(f);
  std::vector<PolyF> irr = split_squarefree(rad, rng);
  std::sort(irr.begin(), irr.end(), poly_less);
  std::vector<std::pair<PolyF, unsigned>> out;
  PolyF remf = make_monic(f);
  for (const PolyF& g : irr) {
    unsigned m = 0;
    while (divides(g, remf)) {
      remf = exact_div(remf, g);
      ++m;
    }
    if (!is_irreducible_mod(g)) throw NotSquarefree("splitting produced a reducible factor");
    out.emplace_back(g, m);
  }
  if (deg(remf) != 0) throw NotSquarefree("factorization does not reassemble");
  return out;
}

std::vector<std::pair<PolyF, unsigned>> factor_mod(const PolyF& f) {
  Rng rng(0x51ul);
  return factor_mod(f, rng);
}

std::vector<FFElem> roots_mod(const PolyF& f, Rng& rng) {
  if (f.c.empty()) throw ZeroInput("roots of zero polynomial");
  const FiniteField& F = field_of(f);
  if (deg(f) == 0) return {};
  PolyF x = poly_x(F.one());
  PolyF lin = gcd_monic(pow_mod(x, F.order(), f) - x, f);
  std::vector<FFElem> roots;
  if (deg(lin) > 0) {
    if (deg(lin) == 1) {
      roots.push_back(-lin.c[0]);
    } else {
      std::vector<PolyF> parts;
      edf(lin, 1, rng, parts);
      for (const PolyF& g : parts) roots.push_back(-g.c[0]);
    }
  }
  std::sort(roots.begin(), roots.end(), [&](const FFElem& a, const FFElem& b) {
    return F.index_of(a) < F.index_of(b);
  });
  return roots;
}

std::vector<FFElem> roots_mod(const PolyF& f) {
  Rng rng(0x52ul);
  return roots_mod(f, rng);
}

}  // namespace quadtor
