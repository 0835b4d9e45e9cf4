#pragma once

#include <quadtor/errors.hpp>
#include <quadtor/qfield.hpp>

#include <utility>
#include <vector>

namespace quadtor {

// Dense univariate polynomial, low-degree-first; the zero polynomial is the
// empty coefficient vector. Coefficient rings plug in through the unqualified
// hooks is_zero, zero_like, one_like, inv resolved in this namespace.
template <class R>
struct Poly {
  std::vector<R> c;

  Poly() = default;
  explicit Poly(std::vector<R> cc) : c(std::move(cc)) { normalize(); }

  void normalize() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(c == o.c); }
};

template <class R>
int deg(const Poly<R>& f) {
  return static_cast<int>(f.c.size()) - 1;
}

template <class R>
const R& lc(const Poly<R>& f) {
  if (f.c.empty()) throw ZeroInput("leading coefficient of zero polynomial");
  return f.c.back();
}

template <class R>
Poly<R> poly_const(const R& v) {
  return Poly<R>({v});
}

template <class R>
Poly<R> poly_x(const R& sample) {
  return Poly<R>({zero_like(sample), one_like(sample)});
}

// x^n with the given leading value.
template <class R>
Poly<R> poly_monomial(const R& v, int n) {
  std::vector<R> c(static_cast<size_t>(n) + 1, zero_like(v));
  c.back() = v;
  return Poly<R>(std::move(c));
}

template <class R>
Poly<R> operator+(const Poly<R>& a, const Poly<R>& b) {
  if (a.c.empty()) return b;
  if (b.c.empty()) return a;
  std::vector<R> r(std::max(a.c.size(), b.c.size()), zero_like(a.c[0]));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
  return Poly<R>(std::move(r));
}

template <class R>
Poly<R> operator-(const Poly<R>& a) {
  std::vector<R> r = a.c;
  for (auto& x : r) x = zero_like(x) - x;
  return Poly<R>(std::move(r));
}

template <class R>
Poly<R> operator-(const Poly<R>& a, const Poly<R>& b) {
  return a + (-b);
}

template <class R>
Poly<R> operator*(const Poly<R>& a, const Poly<R>& b) {
  if (a.c.empty() || b.c.empty()) return Poly<R>();
  std::vector<R> r(a.c.size() + b.c.size() - 1, zero_like(a.c[0]));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
  }
  return Poly<R>(std::move(r));
}

template <class R>
Poly<R> scale(const Poly<R>& a, const R& s) {
  std::vector<R> r = a.c;
  for (auto& x : r) x = x * s;
  return Poly<R>(std::move(r));
}

// Multiply by x^n.
template <class R>
Poly<R> shift_up(const Poly<R>& a, int n) {
  if (a.c.empty() || n == 0) return a;
  std::vector<R> r(a.c.size() + static_cast<size_t>(n), zero_like(a.c[0]));
  for (size_t i = 0; i < a.c.size(); ++i) r[i + static_cast<size_t>(n)] = a.c[i];
  return Poly<R>(std::move(r));
}

// Quotient and remainder; requires an invertible leading coefficient.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& a, const Poly<R>& b) {
  if (b.c.empty()) throw DivisionByZero("polynomial division by zero");
  if (deg(a) < deg(b)) return {Poly<R>(), a};
  R li = inv(lc(b));
  std::vector<R> rem = a.c;
  std::vector<R> quo(a.c.size() - b.c.size() + 1, zero_like(a.c[0]));
  for (size_t top = rem.size(); top-- >= b.c.size();) {
    if (is_zero(rem[top])) continue;
    R q = rem[top] * li;
    size_t shift = top - (b.c.size() - 1);
    quo[shift] = q;
    for (size_t i = 0; i < b.c.size(); ++i) rem[shift + i] = rem[shift + i] - q * b.c[i];
    if (top == 0) break;
  }
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> rem(const Poly<R>& a, const Poly<R>& b) {
  return divrem(a, b).second;
}

template <class R>
Poly<R> quo(const Poly<R>& a, const Poly<R>& b) {
  return divrem(a, b).first;
}

// Quotient with zero-remainder check.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.c.empty()) throw NotCoprime("inexact polynomial division");
  return q;
}

template <class R>
bool divides(const Poly<R>& b, const Poly<R>& a) {
  if (b.c.empty()) return a.c.empty();
  return rem(a, b).c.empty();
}

template <class R>
Poly<R> make_monic(const Poly<R>& f) {
  if (f.c.empty()) return f;
  return scale(f, inv(lc(f)));
}

template <class R>
Poly<R> gcd_monic(Poly<R> a, Poly<R> b) {
  while (!b.c.empty()) {
    Poly<R> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class R, class E>
Poly<R> pow_mod(const Poly<R>& base, const E& e, const Poly<R>& mod) {
  if (mod.c.empty()) throw DivisionByZero("power modulo zero polynomial");
  Poly<R> b = rem(base, mod);
  Poly<R> r;
  E n = e;
  bool started = false;
  std::vector<bool> bits;
  while (n > 0) {
    bits.push_back((n % 2) != 0);
    n /= 2;
  }
  if (bits.empty()) {
    R one = mod.c.empty() ? one_like(base.c[0]) : one_like(mod.c[0]);
    return rem(poly_const(one), mod);
  }
  for (size_t i = bits.size(); i-- > 0;) {
    if (started) r = rem(r * r, mod);
    if (bits[i]) {
      if (!started) {
        r = b;
        started = true;
      } else {
        r = rem(r * b, mod);
      }
    }
  }
  return r;
}

template <class R>
R eval(const Poly<R>& f, const R& x) {
  R acc = zero_like(x);
  for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
  return acc;
}

template <class R>
Poly<R> derivative(const Poly<R>& f) {
  if (f.c.size() <= 1) return Poly<R>();
  std::vector<R> r;
  r.reserve(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) {
    R m = zero_like(f.c[i]);
    for (size_t j = 0; j < i; ++j) m = m + one_like(f.c[i]);
    r.push_back(m * f.c[i]);
  }
  return Poly<R>(std::move(r));
}

// f(g(x)) by Horner over polynomial values.
template <class R>
Poly<R> compose(const Poly<R>& f, const Poly<R>& g) {
  Poly<R> acc;
  for (size_t i = f.c.size(); i-- > 0;) acc = acc * g + poly_const(f.c[i]);
  return acc;
}

template <class R>
Poly<R> poly_pow(const Poly<R>& f, unsigned e) {
  if (e == 0) {
    if (f.c.empty()) throw ZeroInput("0^0 polynomial power");
    return poly_const(one_like(f.c[0]));
  }
  Poly<R> r = f;
  for (unsigned i = 1; i < e; ++i) r = r * f;
  return r;
}

}  // namespace quadtor
