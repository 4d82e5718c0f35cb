#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "hierat/errors.hpp"

namespace hierat {

// Exact rational scalar. Wraps a GMP rational kept in canonical form
// (reduced, positive denominator); every constructor canonicalizes.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix with literals
  Rat(long n, long d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p" or "p/q", base 10, optional leading minus.
  static Rat parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
      if (!ok) throw ParseError("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw DivisionByZero("rational literal with zero denominator: " + s);
    q.canonicalize();
    return Rat(q);
  }

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  Rat inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p" when integral, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

}  // namespace hierat
