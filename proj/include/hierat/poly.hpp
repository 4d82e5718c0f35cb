#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/rat.hpp"

namespace hierat {

// degree() of the zero polynomial.
inline constexpr int kZeroPolyDegree = -1;

// Dense univariate polynomial over Rat, coefficients stored low to high,
// trailing zeros stripped so equal polynomials compare equal memberwise.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) {  // NOLINT: implicit, constants promote freely
    if (!c.is_zero()) c_.push_back(c);
  }
  Poly(long n) : Poly(Rat(n)) {}  // NOLINT
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return monomial(1, Rat(1)); }
  static Poly monomial(std::size_t deg, const Rat& coeff) {
    if (coeff.is_zero()) return Poly();
    std::vector<Rat> c(deg + 1);
    c[deg] = coeff;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // True for c*x^k with c nonzero, and for the zero polynomial only if k==0 is asked of it.
  bool is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const Rat& leading() const {
    static const Rat zero(0);
    return c_.empty() ? zero : c_.back();
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

  friend Poly operator*(const Poly& a, const Rat& s) {
    if (s.is_zero()) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  // Multiplies by x^k.
  Poly shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rat> c(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Poly(std::move(c));
  }

  Poly pow(unsigned e) const {
    Poly r(Rat(1));
    Poly b = *this;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1u;
    }
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(c));
  }

  Rat evaluate(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // p(x) -> p(q(x)), by Horner.
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + Poly(c_[i]);
    return acc;
  }

  // p(x) -> p(s*x).
  Poly compose_scale(const Rat& s) const {
    std::vector<Rat> c = c_;
    Rat p(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] *= p;
      p *= s;
    }
    return Poly(std::move(c));
  }

  // Euclidean division, exact over the rationals. Throws on zero divisor.
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q;
    Poly r = a;
    const Rat inv_lead = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      Rat f = r.leading() * inv_lead;
      Poly t = Poly::monomial(shift, f);
      q += t;
      r -= t * b;
    }
    return {q, r};
  }

  // Division known to be exact; throws Error if a remainder appears.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error("exact_div saw a nonzero remainder");
    return q;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  // Least common multiple of coefficient denominators; 1 for the zero polynomial.
  mpz_class denominator_lcm() const {
    mpz_class l(1);
    for (const auto& c : c_) {
      mpz_class d = c.den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    return l;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rat& c = c_[i];
      if (c.is_zero()) continue;
      Rat a = c.abs();
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      bool unit = a.is_one() && i > 0;
      if (!unit) out += a.str();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;
};

namespace detail {

// Primitive integer image of a rational polynomial: content 1, positive leading
// coefficient. Zero maps to the empty vector.
inline std::vector<mpz_class> primitive_int_image(const Poly& p) {
  if (p.is_zero()) return {};
  mpz_class l = p.denominator_lcm();
  std::vector<mpz_class> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rat& c = p.coeff(i);
    v[i] = c.num() * (l / c.den());
  }
  mpz_class content(0);
  for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (sgn(v.back()) < 0) content = -content;
  for (auto& x : v) x /= content;
  return v;
}

inline void trim_int(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline void make_primitive_int(std::vector<mpz_class>& v) {
  trim_int(v);
  if (v.empty()) return;
  mpz_class content(0);
  for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (sgn(v.back()) < 0) content = -content;
  for (auto& x : v) x /= content;
}

// Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b on entry is not required).
inline std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const mpz_class& lb = b.back();
  while (true) {
    trim_int(a);
    if (a.empty() || a.size() < b.size()) return a;
    std::size_t shift = a.size() - b.size();
    mpz_class la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
  }
}

}  // namespace detail

// Monic greatest common divisor via a primitive pseudo-remainder sequence over Z,
// so intermediate coefficients never leave the integers.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<mpz_class> u = detail::primitive_int_image(a);
  std::vector<mpz_class> v = detail::primitive_int_image(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<mpz_class> r = detail::pseudo_rem(u, v);
    detail::make_primitive_int(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rat> c(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) c[i] = Rat(u[i]);
  return Poly(std::move(c)).monic();
}

}  // namespace hierat
