#pragma once

#include <cstddef>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/hierarchy.hpp"
#include "hierat/system.hpp"

namespace hierat {

// The odd-size correspondence is linear in both directions and preserves the
// parameters on the nose:
//   f_i = g_i + g_{i+1},      g_i = (1/2) * sum_{j=0}^{n-1} (-1)^j f_{i+j}.
// Since f_i - f_{i+1} telescopes the alternating sum with odd period, the two
// maps are exact inverses on arbitrary tuples, solutions or not.

inline SolutionTuple p4_dressing_to_symmetric(const SolutionTuple& g) {
  if (g.system.kind != SystemKind::P4Chain)
    throw UnsupportedSystem("expected an odd-size chain tuple");
  g.check_arity();
  std::size_t n = g.system.arity();
  SolutionTuple f;
  f.system = g.system;
  f.system.kind = SystemKind::P4Symmetric;
  f.params = g.params;
  f.components.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    f.components.push_back(g.components[i] + g.at_cyc(static_cast<long>(i) + 1));
  return f;
}

inline SolutionTuple p4_symmetric_to_dressing(const SolutionTuple& f) {
  if (f.system.kind != SystemKind::P4Symmetric)
    throw UnsupportedSystem("expected an odd-size symmetric tuple");
  f.check_arity();
  std::size_t n = f.system.arity();
  Rat half(1, 2);
  SolutionTuple g;
  g.system = f.system;
  g.system.kind = SystemKind::P4Chain;
  g.params = f.params;
  g.components.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatFunc acc;
    for (std::size_t j = 0; j < n; ++j) {
      const RatFunc& c = f.at_cyc(static_cast<long>(i + j));
      if (j % 2 == 0)
        acc += c;
      else
        acc -= c;
    }
    g.components.push_back(RatFunc(half) * acc);
  }
  return g;
}

struct TransformReport {
  bool residual_identity_ok = false;  // the chain tuple solves its system
  bool forward_ok = false;            // the candidate solves the pulled-back symmetric system
  std::size_t components_checked = 0;
};

// The even-size correspondence involves a change of the independent variable,
// so it cannot be a RatFunc-level identity in one variable; instead this
// verifies a claimed correspondence. g is a chain tuple in x; candidate holds
// functions of x asserted to be the symmetric components evaluated at
// z = zeta(x). The symmetric equations pull back through the chain rule
// f_i'(z) = (d/dx f_i(zeta(x))) / zeta'(x), which is exact in Q(x).
inline TransformReport p5_verify_transform(const SolutionTuple& g, const SolutionTuple& candidate,
                                           const RatFunc& zeta) {
  if (g.system.kind != SystemKind::P5Chain)
    throw UnsupportedSystem("expected an even-size chain tuple");
  if (candidate.system.kind != SystemKind::P5Symmetric)
    throw UnsupportedSystem("expected an even-size symmetric candidate");
  g.check_arity();
  candidate.check_arity();
  if (g.system.arity() != candidate.system.arity())
    throw ArityMismatch("chain and candidate tuples have different arity");
  RatFunc dzeta = zeta.derivative();
  if (dzeta.is_zero()) throw InvalidVariableMap("zeta is constant, the chain rule cannot divide by zeta'");

  TransformReport rep;
  rep.residual_identity_ok = true;
  for (const auto& r : residual(g)) {
    ++rep.components_checked;
    if (!r.is_zero()) rep.residual_identity_ok = false;
  }

  // Pulled-back symmetric system: z f_i' = z f_i Phi_i - A f_* + a_i C with
  // z replaced by zeta(x) and f_i' by the chain-ruled derivative.
  std::size_t m = candidate.system.arity();
  std::size_t n = candidate.system.n;
  Rat c0 = candidate.system.require_c0();
  Rat c1 = candidate.system.require_c1();
  Rat a_even(0), a_odd(0);
  for (std::size_t i = 0; i < m; ++i)
    (i % 2 == 0 ? a_even : a_odd) += candidate.params[i];

  rep.forward_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    const RatFunc& fi = candidate.components[i];
    const RatFunc& coupled = candidate.system.variant == CouplingVariant::LiteralF0
                                 ? candidate.components[0]
                                 : fi;
    RatFunc dz = fi.derivative() / dzeta;
    RatFunc res = zeta * dz - zeta * fi * detail::p5_phi(candidate, i, n) +
                  RatFunc(i % 2 == 0 ? a_even : a_odd) * coupled -
                  RatFunc(candidate.params[i] * (i % 2 == 0 ? c0 : c1));
    ++rep.components_checked;
    if (!res.is_zero()) rep.forward_ok = false;
  }
  RatFunc even_sum, odd_sum;
  for (std::size_t i = 0; i < m; ++i) (i % 2 == 0 ? even_sum : odd_sum) += candidate.components[i];
  rep.components_checked += 2;
  if (!(even_sum - RatFunc(c0)).is_zero() || !(odd_sum - RatFunc(c1)).is_zero())
    rep.forward_ok = false;
  return rep;
}

}  // namespace hierat
