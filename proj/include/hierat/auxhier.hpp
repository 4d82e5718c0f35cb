#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/hierarchy.hpp"
#include "hierat/system.hpp"

namespace hierat {

// Exact Lagrange interpolation through distinct rational nodes.
inline Poly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw InterpolationDegenerate("node and value counts differ");
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw InterpolationDegenerate("repeated interpolation node " + xs[i].str());
  Poly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    Poly term(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * Poly(std::vector<Rat>{-xs[j], Rat(1)}) * Poly((xs[i] - xs[j]).inverse());
    }
    acc += term;
  }
  return acc;
}

// Polynomial in two constants: coeffs[i][j] multiplies beta^i delta^j.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<Rat>> c) : c_(std::move(c)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int beta_degree() const { return static_cast<int>(c_.size()) - 1; }
  int delta_degree() const {
    int d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }

  Rat coeff(std::size_t i, std::size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return Rat(0);
    return c_[i][j];
  }
  const std::vector<std::vector<Rat>>& coeffs() const { return c_; }

  Rat evaluate(const Rat& beta, const Rat& delta) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      Rat row(0);
      for (std::size_t j = c_[i].size(); j-- > 0;) row = row * delta + c_[i][j];
      acc = acc * beta + row;
    }
    return acc;
  }

  // Substitute beta = b, leaving a polynomial in delta.
  Poly at_beta(const Rat& b) const {
    std::size_t width = 0;
    for (const auto& row : c_) width = std::max(width, row.size());
    std::vector<Rat> out(width);
    Rat p(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = 0; j < c_[i].size(); ++j) out[j] += c_[i][j] * p;
      p *= b;
    }
    return Poly(std::move(out));
  }

  // The polynomial in beta when no delta term is present at all.
  Poly beta_only() const {
    std::vector<Rat> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_.at(i).empty() ? Rat(0) : c_[i][0];
    return Poly(std::move(out));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j) {
        if (c_[i][j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i][j].str();
        if (i) s += "*b" + (i > 1 ? "^" + std::to_string(i) : "");
        if (j) s += "*d" + (j > 1 ? "^" + std::to_string(j) : "");
      }
    return s;
  }

 private:
  void trim() {
    for (auto& row : c_)
      while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
  }

  std::vector<std::vector<Rat>> c_;
};

// All rational roots of a nonzero polynomial, exactly, ascending.
inline std::vector<Rat> rational_roots(const Poly& f) {
  if (f.is_zero()) throw Error("rational_roots of the zero polynomial");
  std::vector<Rat> roots;
  Poly g = f;
  while (!g.is_zero() && g.coeff(0).is_zero()) {
    if (roots.empty()) roots.push_back(Rat(0));
    g = exact_div(g, Poly::variable());
  }
  if (g.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  std::vector<mpz_class> v = detail::primitive_int_image(g);
  auto divisors = [](mpz_class n) {
    if (sgn(n) < 0) n = -n;
    std::vector<mpz_class> out;
    mpz_class d(1);
    while (d * d <= n) {
      if (n % d == 0) {
        out.push_back(d);
        mpz_class q = n / d;
        if (q != d) out.push_back(q);
      }
      ++d;
    }
    return out;
  };
  for (const auto& p : divisors(v.front()))
    for (const auto& q : divisors(v.back())) {
      for (int sign = 0; sign < 2; ++sign) {
        Rat cand(sign ? -p : p, q);
        if (g.evaluate(cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Every (beta, delta) for which y = sigma/x solves the scalar fourth-order
// equation. points are isolated solutions; vertical_lines are beta values that
// work for every delta; all_pairs marks the degenerate sigma = 0, where y = 0
// kills the equation identically. constraints holds, per power of x, the
// exact coefficient polynomial the elimination worked from.
struct KudryashovConstraint {
  Rat sigma;
  bool all_pairs = false;
  std::vector<std::pair<Rat, Rat>> points;
  std::vector<Rat> vertical_lines;
  std::map<long, BiPoly> constraints;
};

namespace detail {

// Laurent coefficients of a rational function whose denominator is x^P:
// exponent -> coefficient. Anything else is not Laurent and throws.
inline std::map<long, Rat> laurent_coeffs(const RatFunc& f) {
  std::map<long, Rat> out;
  if (f.is_zero()) return out;
  if (!f.den().is_monomial()) throw Error("expected a Laurent element, denominator " + f.den().str());
  long p = f.den().degree();
  for (long j = 0; j <= f.num().degree(); ++j) {
    Rat c = f.num().coeff(static_cast<std::size_t>(j));
    if (!c.is_zero()) out[j - p] = c;
  }
  return out;
}

inline RatFunc kudryashov_residual_at(const Rat& sigma, const Rat& beta, const Rat& delta) {
  SolutionTuple s;
  s.system.kind = SystemKind::Kudryashov2;
  s.system.beta = beta;
  s.system.delta = delta;
  s.components = {RatFunc(Poly(sigma), Poly::variable())};
  return residual_kudryashov2(s);
}

}  // namespace detail

// Exact elimination for the pole candidate y = sigma/x. The residual is a
// Laurent element whose coefficients are polynomials in (beta, delta) of low
// degree (cubic in beta, linear in delta), so a 5x5 grid determines them
// exactly; two off-grid spot checks guard the degree assumption. beta is then
// pinned by the gcd of the delta-free coefficients, and each candidate beta
// either fixes delta linearly, holds for every delta, or dies inconsistent.
// Every reported pair is re-verified against the full residual before return.
inline KudryashovConstraint solve_kudryashov_params(const Rat& sigma) {
  KudryashovConstraint out;
  out.sigma = sigma;

  const std::vector<Rat> bnodes = {Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)};
  const std::vector<Rat> dnodes = {Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)};
  std::map<long, std::vector<std::vector<Rat>>> grids;  // exponent -> [bi][dj]
  for (std::size_t bi = 0; bi < bnodes.size(); ++bi)
    for (std::size_t dj = 0; dj < dnodes.size(); ++dj) {
      auto coeffs = detail::laurent_coeffs(detail::kudryashov_residual_at(sigma, bnodes[bi], dnodes[dj]));
      for (const auto& [e, c] : coeffs) {
        auto& grid = grids[e];
        if (grid.empty()) grid.assign(bnodes.size(), std::vector<Rat>(dnodes.size(), Rat(0)));
        grid[bi][dj] = c;
      }
    }

  if (grids.empty()) {
    out.all_pairs = true;  // residual vanished on the whole grid: sigma = 0
    return out;
  }

  for (auto& [e, grid] : grids) {
    // Interpolate in delta per beta node, then in beta per delta power.
    std::vector<std::vector<Rat>> delta_polys(bnodes.size());
    std::size_t width = 0;
    for (std::size_t bi = 0; bi < bnodes.size(); ++bi) {
      delta_polys[bi] = lagrange_interpolate(dnodes, grid[bi]).coeffs();
      width = std::max(width, delta_polys[bi].size());
    }
    std::vector<std::vector<Rat>> bmajor;
    for (std::size_t j = 0; j < width; ++j) {
      std::vector<Rat> column(bnodes.size());
      for (std::size_t bi = 0; bi < bnodes.size(); ++bi)
        column[bi] = j < delta_polys[bi].size() ? delta_polys[bi][j] : Rat(0);
      Poly in_beta = lagrange_interpolate(bnodes, column);
      for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(0, in_beta.degree())); ++i) {
        if (bmajor.size() <= i) bmajor.resize(i + 1);
        if (bmajor[i].size() <= j) bmajor[i].resize(j + 1, Rat(0));
        bmajor[i][j] = in_beta.coeff(i);
      }
    }
    out.constraints[e] = BiPoly(std::move(bmajor));
  }

  // Spot-check the interpolation off the grid before trusting it.
  for (const auto& probe : {std::pair<Rat, Rat>{Rat(5), Rat(7)}, {Rat(-3), Rat(2)}}) {
    auto direct = detail::laurent_coeffs(detail::kudryashov_residual_at(sigma, probe.first, probe.second));
    for (const auto& [e, bp] : out.constraints) {
      Rat want = direct.count(e) ? direct[e] : Rat(0);
      if (!(bp.evaluate(probe.first, probe.second) == want))
        throw InterpolationDegenerate("coefficient at x^" + std::to_string(e) +
                                      " disagrees off the grid; degree bound violated");
      direct.erase(e);
    }
    for (const auto& [e, c] : direct)
      if (!c.is_zero())
        throw InterpolationDegenerate("unseen exponent x^" + std::to_string(e) + " off the grid");
  }

  // Eliminate: beta candidates from the delta-free coefficients.
  Poly beta_gcd;
  bool have_free = false;
  for (const auto& [e, bp] : out.constraints) {
    if (bp.is_zero()) continue;
    if (bp.delta_degree() == 0) {
      have_free = true;
      beta_gcd = beta_gcd.is_zero() ? bp.beta_only() : poly_gcd(beta_gcd, bp.beta_only());
    }
  }
  if (!have_free)
    throw InterpolationDegenerate("no delta-free coefficient; elimination has no anchor");
  if (beta_gcd.degree() < 1 && !beta_gcd.is_zero()) return out;  // nonzero constant: no beta works

  for (const Rat& b : rational_roots(beta_gcd)) {
    // Remaining constraints at beta = b, as polynomials in delta. A nonzero
    // constant means b satisfies the delta-free part but not the rest.
    std::vector<Poly> in_delta;
    bool dead = false;
    for (const auto& [e, bp] : out.constraints) {
      Poly pd = bp.at_beta(b);
      if (pd.is_zero()) continue;
      if (pd.degree() < 1) { dead = true; break; }
      in_delta.push_back(pd);
    }
    if (dead) continue;
    if (in_delta.empty()) {
      // Every coefficient vanished for symbolic delta; verify the line at an
      // arbitrary delta before reporting it.
      if (detail::kudryashov_residual_at(sigma, b, Rat(11)).is_zero())
        out.vertical_lines.push_back(b);
      continue;
    }
    std::vector<Rat> cands = rational_roots(in_delta.front());
    for (const Rat& d : cands) {
      bool ok = true;
      for (const auto& pd : in_delta)
        if (!pd.evaluate(d).is_zero()) { ok = false; break; }
      if (!ok) continue;
      if (!detail::kudryashov_residual_at(sigma, b, d).is_zero())
        throw InterpolationDegenerate("eliminated pair failed direct re-verification");
      out.points.emplace_back(b, d);
    }
  }
  std::sort(out.points.begin(), out.points.end());
  std::sort(out.vertical_lines.begin(), out.vertical_lines.end());
  return out;
}

// The two-field recursion machinery: pairs (u, v) of fields and the operator
//   R(a, b) = 1/2 * ( (u * int a)' + 2 b,
//                     2 v a + v' * int a + u b + b' ),
// together with the inverse of the off-diagonal derivative matrix,
//   Binv(a, b) = (int b, int a).
// Antiderivatives stay inside the Laurent class or throw.
struct FieldPair {
  RatFunc u;
  RatFunc v;
};

inline std::pair<RatFunc, RatFunc> gjp_apply_R(const FieldPair& w,
                                               const std::pair<RatFunc, RatFunc>& ab) {
  RatFunc inta = ab.first.antiderivative();
  Rat half(1, 2);
  RatFunc first = RatFunc(half) * ((w.u * inta).derivative() + 2 * ab.second);
  RatFunc second = RatFunc(half) * (2 * w.v * ab.first + w.v.derivative() * inta +
                                    w.u * ab.second + ab.second.derivative());
  return {first, second};
}

inline std::pair<RatFunc, RatFunc> gjp_apply_B_inverse(const std::pair<RatFunc, RatFunc>& ab) {
  return {ab.second.antiderivative(), ab.first.antiderivative()};
}

}  // namespace hierat
