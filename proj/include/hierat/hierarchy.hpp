#pragma once

#include <optional>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/system.hpp"

namespace hierat {

// Residual evaluators: each returns, for a candidate tuple, the exact amount by
// which every equation of the family fails. A tuple is a solution iff every
// entry is the zero function. Nothing here approximates.

// Odd-size cyclic system: f_i' = f_i * (f_{i+1} - f_{i+2} + ... - f_{i+n-1}) + a_i.
inline std::vector<RatFunc> residual_p4_symmetric(const SolutionTuple& s) {
  s.system.validate();
  s.check_arity();
  std::size_t n = s.system.arity();
  std::vector<RatFunc> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatFunc alt;
    for (std::size_t k = 1; k < n; ++k) {
      const RatFunc& f = s.at_cyc(static_cast<long>(i + k));
      if (k % 2 == 1)
        alt += f;
      else
        alt -= f;
    }
    out[i] = s.components[i].derivative() - s.components[i] * alt - RatFunc(s.params[i]);
  }
  return out;
}

// Periodically closed chain: g_i' + g_{i+1}' = g_{i+1}^2 - g_i^2 + a_i.
// Works for any period >= 2; the odd/even split is carried by the system kind.
inline std::vector<RatFunc> residual_chain(const SolutionTuple& s) {
  s.system.validate();
  s.check_arity();
  std::size_t n = s.system.arity();
  std::vector<RatFunc> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatFunc& g = s.components[i];
    const RatFunc& gn = s.at_cyc(static_cast<long>(i) + 1);
    out[i] = g.derivative() + gn.derivative() - gn * gn + g * g - RatFunc(s.params[i]);
  }
  return out;
}

namespace detail {

// Phi_i = sum_{1<=r<=s<=n} f_{i+2r-1} f_{i+2s} - sum_{1<=r<=s<=n} f_{i+2r} f_{i+2s+1}.
inline RatFunc p5_phi(const SolutionTuple& s, std::size_t i, std::size_t n) {
  RatFunc phi;
  long base = static_cast<long>(i);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t sx = r; sx <= n; ++sx) {
      phi += s.at_cyc(base + 2 * static_cast<long>(r) - 1) * s.at_cyc(base + 2 * static_cast<long>(sx));
      phi -= s.at_cyc(base + 2 * static_cast<long>(r)) * s.at_cyc(base + 2 * static_cast<long>(sx) + 1);
    }
  return phi;
}

}  // namespace detail

// Even-size cyclic system in the variable z:
//   z f_i' = z f_i Phi_i - A_{i mod 2} f_* + a_i C_{i mod 2},
// with f_* = f_0 (literal variant) or f_i (diagonal variant), plus the two
// constraint rows sum(f_even) = C0, sum(f_odd) = C1. Returns arity()+2
// residuals; the last two are the constraint defects, appended as a guard.
inline std::vector<RatFunc> residual_p5_symmetric(const SolutionTuple& s) {
  s.system.validate();
  s.check_arity();
  std::size_t m = s.system.arity();
  std::size_t n = s.system.n;
  Rat c0 = s.system.require_c0();
  Rat c1 = s.system.require_c1();
  Rat a_even(0), a_odd(0);
  for (std::size_t i = 0; i < m; ++i) (i % 2 == 0 ? a_even : a_odd) += s.params[i];

  RatFunc z = RatFunc::variable();
  std::vector<RatFunc> out;
  out.reserve(m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    const RatFunc& coupled =
        s.system.variant == CouplingVariant::LiteralF0 ? s.components[0] : s.components[i];
    const Rat& a_block = i % 2 == 0 ? a_even : a_odd;
    const Rat& c_block = i % 2 == 0 ? c0 : c1;
    out.push_back(z * s.components[i].derivative() - z * s.components[i] * detail::p5_phi(s, i, n) +
                  RatFunc(a_block) * coupled - RatFunc(s.params[i] * c_block));
  }
  RatFunc even_sum, odd_sum;
  for (std::size_t i = 0; i < m; ++i) (i % 2 == 0 ? even_sum : odd_sum) += s.components[i];
  out.push_back(even_sum - RatFunc(c0));
  out.push_back(odd_sum - RatFunc(c1));
  return out;
}

// Scalar fourth-order equation for y(x) with constants beta, delta. The left
// side is assembled in five blocks mirroring how the equation is usually laid
// out, so a transcription slip stays localizable to one block.
inline RatFunc residual_kudryashov2(const SolutionTuple& s) {
  s.check_arity();
  Rat beta = s.system.require_beta();
  Rat delta = s.system.require_delta();

  const RatFunc& y = s.components[0];
  RatFunc x = RatFunc::variable();
  RatFunc y1 = y.derivative();
  RatFunc y2 = y1.derivative();
  RatFunc y3 = y2.derivative();
  RatFunc y4 = y3.derivative();
  RatFunc y_2 = y * y;
  RatFunc y_3 = y_2 * y;
  RatFunc y_4 = y_2 * y_2;
  RatFunc y_5 = y_4 * y;
  RatFunc y_6 = y_3 * y_3;
  RatFunc y_7 = y_6 * y;
  RatFunc y_8 = y_4 * y_4;
  RatFunc y_10 = y_5 * y_5;
  RatFunc b(beta);
  RatFunc d(delta);
  Rat half(1, 2);
  Rat three_halves(3, 2);

  // y'''' and y''' terms
  RatFunc block1 = (y2 - 2 * x * y - 2 * y_3 - b) * y_2 * y4 - RatFunc(half) * y_2 * (y3 * y3) +
                   (2 * y_2 + 8 * y_3 * y1 + 4 * x * y * y1 - y1 * y2 + b * y1) * y * y3;
  // (y'')^3 and (y'')^2 terms
  RatFunc block2 = RatFunc(Rat(-4, 3)) * y * (y2 * y2 * y2) +
                   (3 * x * y_2 + 3 * b * y - RatFunc(three_halves) * y_4 +
                    RatFunc(three_halves) * (y1 * y1)) *
                       (y2 * y2);
  // linear y'' term
  RatFunc block3 = (b * y_4 - 2 * y1 * y_2 - 12 * (y1 * y1) * y_3 - 2 * b * b * y + 10 * x * y_5 -
                    3 * b * (y1 * y1) + 10 * y_7 - 4 * x * y * (y1 * y1) - 4 * b * x * y_2) *
                   y2;
  // y' and (y')^2 terms
  RatFunc block4 = 2 * (b - 4 * y_3) * y_2 * y1 +
                   (4 * b * x * y + 8 * x * y_4 + RatFunc(three_halves) * b * b + 12 * b * y_3) *
                       (y1 * y1);
  // derivative-free tail
  RatFunc block5 = RatFunc(Rat(-10, 3)) * y_10 - 8 * x * y_8 - 2 * b * y_7 - 6 * x * x * y_6 -
                   2 * b * x * y_5 +
                   (RatFunc(half) * b * b - 2 + 9 * d - RatFunc(Rat(4, 3)) * x * x * x) * y_4 +
                   b * x * y_2 + RatFunc(Rat(1, 3)) * b * b * b * y;

  return block1 + block2 + block3 + block4 + block5;
}

inline std::vector<RatFunc> residual(const SolutionTuple& s) {
  switch (s.system.kind) {
    case SystemKind::P4Symmetric: return residual_p4_symmetric(s);
    case SystemKind::P4Chain:
    case SystemKind::P5Chain: return residual_chain(s);
    case SystemKind::P5Symmetric: return residual_p5_symmetric(s);
    case SystemKind::Kudryashov2: return {residual_kudryashov2(s)};
  }
  throw UnsupportedSystem("unknown system kind");
}

inline bool is_exact_solution(const SolutionTuple& s) {
  for (const auto& r : residual(s))
    if (!r.is_zero()) return false;
  return true;
}

// Index of the first nonzero residual, or nullopt for a solution.
inline std::optional<std::size_t> first_defect(const std::vector<RatFunc>& res) {
  for (std::size_t i = 0; i < res.size(); ++i)
    if (!res[i].is_zero()) return i;
  return std::nullopt;
}

struct RescaleResult {
  Rat c;  // variable scale: new component i is c * f_i(c * t)
  ParamVector params;
  std::optional<SolutionTuple> solution;
};

// Normalizes the parameter sum to 1 by the scaling symmetry t -> c t,
// f -> c f, alpha -> alpha / h with c^2 = 1/h. Exact only when h is a square
// of a rational; h must also be nonzero. The even-size symmetric system has no
// such symmetry acting on alpha (its scaling moves the constraint constants),
// and the scalar equation has no parameter sum at all.
inline RescaleResult rescale_to_unit_h(const SystemSpec& sys, const ParamVector& p,
                                       const std::optional<SolutionTuple>& tuple = std::nullopt) {
  switch (sys.kind) {
    case SystemKind::P4Symmetric:
    case SystemKind::P4Chain:
    case SystemKind::P5Chain:
      break;
    case SystemKind::P5Symmetric:
      throw UnsupportedSystem(
          "variable rescaling moves the constraint constants, not the parameter sum");
    case SystemKind::Kudryashov2:
      throw UnsupportedSystem("the scalar equation has no parameter sum to normalize");
  }
  if (p.size() != sys.arity()) throw ArityMismatch("parameter count does not match system arity");
  Rat h = p.sum();
  if (h.is_zero()) throw ZeroH();
  if (h.sign() < 0)
    throw NonSquareScale("parameter sum " + h.str() + " is negative, 1/h has no rational square root");
  mpz_class hn = h.num(), hd = h.den();
  if (!mpz_perfect_square_p(hn.get_mpz_t()) || !mpz_perfect_square_p(hd.get_mpz_t()))
    throw NonSquareScale("parameter sum " + h.str() + " is not the square of a rational");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), hn.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), hd.get_mpz_t());
  Rat c(rd, rn);  // c = 1/sqrt(h)

  RescaleResult out;
  out.c = c;
  Rat inv_h = h.inverse();
  out.params.a.reserve(p.size());
  for (const auto& x : p.a) out.params.a.push_back(x * inv_h);
  if (tuple) {
    SolutionTuple t = *tuple;
    if (!(t.params == p)) throw ArityMismatch("tuple parameters disagree with the parameter vector");
    t.params = out.params;
    for (auto& f : t.components) f = RatFunc(c) * f.compose_scale(c);
    out.solution = std::move(t);
  }
  return out;
}

}  // namespace hierat
