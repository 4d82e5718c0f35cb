#pragma once

#include <string>
#include <utility>

#include "hierat/errors.hpp"
#include "hierat/poly.hpp"
#include "hierat/rat.hpp"

namespace hierat {

// Rational function in one variable over Q, kept canonical: numerator and
// denominator coprime, denominator monic, zero represented as 0/1. Two equal
// functions therefore have identical representations and operator== is exact.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT: implicit by design
  RatFunc(long n) : RatFunc(Rat(n)) {}              // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }

  // Max of numerator and denominator degree; -1 for zero. Used by degree guards.
  int height_degree() const { return std::max(num_.degree(), den_.degree()); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
  RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero function");
    return RatFunc(den_, num_);
  }

  RatFunc derivative() const {
    if (is_polynomial()) return RatFunc(num_.derivative() * den_.coeff(0).inverse());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  // Antiderivative with zero constant term, defined on the class closed under
  // differentiation that the library works in: Laurent elements p(x) + sum c_k x^-k.
  // The denominator must be a power of x and the x^-1 coefficient must vanish;
  // anything else has no rational antiderivative.
  RatFunc antiderivative() const {
    if (is_zero()) return RatFunc();
    if (!den_.is_monomial())
      throw NonElementaryAntiderivative("denominator is not a power of the variable: " + den_.str());
    std::size_t m = static_cast<std::size_t>(den_.degree());
    if (m == 0) {
      Poly p = num_ * den_.coeff(0).inverse();
      std::vector<Rat> c(static_cast<std::size_t>(p.degree()) + 2);
      for (std::size_t j = 0; j < c.size() - 1; ++j)
        c[j + 1] = p.coeff(j) / Rat(static_cast<long>(j + 1));
      return RatFunc(Poly(std::move(c)));
    }
    // Here den = x^m exactly (monic by canonical form). Coefficient j of the
    // numerator sits at power j-m; j = m-1 is the log term.
    if (!num_.coeff(m - 1).is_zero())
      throw NonElementaryAntiderivative("nonzero coefficient at 1/x integrates to a logarithm");
    std::vector<Rat> c(static_cast<std::size_t>(num_.degree()) + 2);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(num_.degree()); ++j) {
      if (j == m - 1) continue;
      long p = static_cast<long>(j) - static_cast<long>(m) + 1;
      c[j] = num_.coeff(j) / Rat(p);
    }
    return RatFunc(Poly(std::move(c)), Poly::monomial(m - 1, Rat(1)));
  }

  // f(x) -> f(s*x).
  RatFunc compose_scale(const Rat& s) const {
    return RatFunc(num_.compose_scale(s), den_.compose_scale(s));
  }

  // f(x) -> f(g(x)) for rational g; throws DivisionByZero if the denominator
  // collapses (g maps into a pole of f).
  RatFunc compose(const RatFunc& g) const {
    RatFunc n, d;
    for (std::size_t i = static_cast<std::size_t>(num_.degree()) + 1; i-- > 0;)
      n = n * g + RatFunc(num_.coeff(i));
    for (std::size_t i = static_cast<std::size_t>(den_.degree()) + 1; i-- > 0;)
      d = d * g + RatFunc(den_.coeff(i));
    if (is_zero()) return RatFunc();
    return n / d;
  }

  // Exact evaluation; throws DivisionByZero at a pole.
  Rat evaluate(const Rat& x) const {
    Rat d = den_.evaluate(x);
    if (d.is_zero()) throw DivisionByZero("evaluation at a pole");
    return num_.evaluate(x) / d;
  }

  std::string str(const std::string& var = "x") const {
    if (is_polynomial()) {
      if (den_.coeff(0).is_one()) return num_.str(var);
      return "(" + num_.str(var) + ")/" + den_.coeff(0).str();
    }
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rat(1));
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    Rat inv_lead = den_.leading().inverse();
    num_ = num_ * inv_lead;
    den_ = den_ * inv_lead;
  }

  Poly num_;
  Poly den_;
};

}  // namespace hierat
