#pragma once

// Deterministic random generators shared by the test suites. Seeded fixed so
// failures reproduce; values stay small enough that exact arithmetic is fast.

#include <random>
#include <vector>

#include "hierat/ratfunc.hpp"
#include "hierat/system.hpp"
#include "hierat/weyl.hpp"

namespace testgen {

using hierat::ParamVector;
using hierat::Poly;
using hierat::Rat;
using hierat::RatFunc;

inline std::mt19937& rng() {
  static std::mt19937 gen(20260816u);
  return gen;
}

inline long rand_int(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng());
}

inline Rat rand_rat(long max_num = 6, long max_den = 4) {
  long den = rand_int(1, max_den);
  return Rat(rand_int(-max_num, max_num), den);
}

inline Rat rand_nonzero_rat(long max_num = 6, long max_den = 4) {
  Rat r = rand_rat(max_num, max_den);
  while (r.is_zero()) r = rand_rat(max_num, max_den);
  return r;
}

inline Poly rand_poly(int max_deg = 3) {
  int deg = static_cast<int>(rand_int(0, max_deg));
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = rand_rat();
  return Poly(std::move(c));
}

inline Poly rand_nonzero_poly(int max_deg = 3) {
  Poly p = rand_poly(max_deg);
  while (p.is_zero()) p = rand_poly(max_deg);
  return p;
}

inline RatFunc rand_ratfunc(int max_deg = 3) {
  return RatFunc(rand_poly(max_deg), rand_nonzero_poly(2));
}

// A random element of the class closed under antiderivatives: polynomial part
// plus pure powers x^-k with k >= 2.
inline RatFunc rand_laurent_integrable(int max_deg = 3, int max_neg = 4) {
  RatFunc f(rand_poly(max_deg));
  for (int k = 2; k <= max_neg; ++k)
    if (rand_int(0, 1)) f += RatFunc(Poly(rand_rat()), Poly::monomial(static_cast<std::size_t>(k), Rat(1)));
  return f;
}

inline ParamVector rand_params(std::size_t m) {
  ParamVector p;
  p.a.reserve(m);
  for (std::size_t i = 0; i < m; ++i) p.a.push_back(rand_rat());
  return p;
}

inline hierat::WeylWord rand_word(std::size_t arity, std::size_t len) {
  hierat::WeylWord w;
  for (std::size_t i = 0; i < len; ++i) {
    long pick = rand_int(0, static_cast<long>(arity) + 1);
    if (pick < static_cast<long>(arity))
      w.push_back(hierat::Letter::S(static_cast<std::size_t>(pick)));
    else if (pick == static_cast<long>(arity))
      w.push_back(hierat::Letter::PI());
    else
      w.push_back(hierat::Letter::PI_INV());
  }
  return w;
}

}  // namespace testgen
