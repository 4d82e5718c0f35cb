#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/hierarchy.hpp"
#include "hierat/system.hpp"

namespace hierat {

// How the zero couples of a table row are distributed: entry j counts the
// couples sitting right after the j-th nonzero slot, going around the circle.
// Rows that differ only by a cyclic rotation are the same row, so arrangements
// are kept in necklace-canonical form (lexicographically least rotation).
using Arrangement = std::vector<int>;

namespace detail {

inline Arrangement least_rotation(const Arrangement& a) {
  Arrangement best = a;
  Arrangement cur = a;
  for (std::size_t r = 1; r < a.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

inline void compositions(std::size_t gaps, int total, Arrangement& acc,
                         std::vector<Arrangement>& out) {
  if (acc.size() + 1 == gaps) {
    acc.push_back(total);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    acc.push_back(v);
    compositions(gaps, total - v, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// All ways to distribute `pairs` zero couples into `gaps` cyclic gaps, one
// representative per necklace, sorted; index 0 is always the all-in-one-gap
// shape (every couple after the last nonzero slot), which is the row as the
// tables print it.
inline std::vector<Arrangement> enumerate_arrangements(std::size_t gaps, std::size_t pairs) {
  if (gaps == 0) throw InvalidArrangement("a row needs at least one nonzero slot");
  std::vector<Arrangement> all;
  Arrangement acc;
  detail::compositions(gaps, static_cast<int>(pairs), acc, all);
  std::vector<Arrangement> keep;
  for (const auto& a : all)
    if (a == detail::least_rotation(a)) keep.push_back(a);
  std::sort(keep.begin(), keep.end());
  return keep;
}

namespace detail {

inline void check_arrangement(const Arrangement& a, std::size_t gaps, std::size_t pairs) {
  if (a.size() != gaps)
    throw InvalidArrangement("arrangement has " + std::to_string(a.size()) + " gaps, row needs " +
                             std::to_string(gaps));
  long sum = 0;
  for (int v : a) {
    if (v < 0) throw InvalidArrangement("negative couple count in arrangement");
    sum += v;
  }
  if (sum != static_cast<long>(pairs))
    throw InvalidArrangement("arrangement places " + std::to_string(sum) + " couples, row has " +
                             std::to_string(pairs));
}

}  // namespace detail

// Zero-couple arrangements available to row k of the odd-size table (2k+1
// nonzero slots, (n-2k-1)/2 couples).
inline std::vector<Arrangement> p4_arrangements(std::size_t n, std::size_t k) {
  if (n < 3 || n % 2 == 0) throw UnsupportedSystem("odd-size family needs odd n >= 3");
  if (2 * k + 1 > n) throw RowOutOfRange("row k=" + std::to_string(k) + " does not exist for n=" + std::to_string(n));
  return enumerate_arrangements(2 * k + 1, (n - 2 * k - 1) / 2);
}

// Row k of the odd-size table with a chosen zero-couple arrangement:
// alpha = 1/(2k+1) and f = t/(2k+1) on the nonzero slots, zeros elsewhere.
inline SolutionTuple p4_seed(std::size_t n, std::size_t k, const Arrangement& arr) {
  if (n < 3 || n % 2 == 0) throw UnsupportedSystem("odd-size family needs odd n >= 3");
  if (2 * k + 1 > n) throw RowOutOfRange("row k=" + std::to_string(k) + " does not exist for n=" + std::to_string(n));
  detail::check_arrangement(arr, 2 * k + 1, (n - 2 * k - 1) / 2);
  Rat v(1, static_cast<long>(2 * k + 1));
  SolutionTuple s;
  s.system.kind = SystemKind::P4Symmetric;
  s.system.n = n;
  for (std::size_t j = 0; j < 2 * k + 1; ++j) {
    s.params.a.push_back(v);
    s.components.push_back(RatFunc(Poly::monomial(1, v)));
    for (int c = 0; c < arr[j]; ++c) {
      s.params.a.push_back(Rat(0));
      s.params.a.push_back(Rat(0));
      s.components.push_back(RatFunc());
      s.components.push_back(RatFunc());
    }
  }
  return s;
}

inline SolutionTuple p4_seed(std::size_t n, std::size_t k, std::size_t arrangement_index = 0) {
  auto arrs = p4_arrangements(n, k);
  if (arrangement_index >= arrs.size())
    throw InvalidArrangement("arrangement index " + std::to_string(arrangement_index) +
                             " out of range, row has " + std::to_string(arrs.size()));
  return p4_seed(n, k, arrs[arrangement_index]);
}

// Zero-couple arrangements for row k of the even-size table (2(k+1) nonzero
// slots, n-k couples). Couples move in steps of two slots, so the parity
// alignment of the alternating pair is preserved by construction.
inline std::vector<Arrangement> p5_arrangements(std::size_t n, std::size_t k) {
  if (n < 1) throw UnsupportedSystem("even-size family needs n >= 1");
  if (k > n) throw RowOutOfRange("row k=" + std::to_string(k) + " does not exist for n=" + std::to_string(n));
  return enumerate_arrangements(2 * (k + 1), n - k);
}

struct SeedRow {
  ParamVector params;
  std::optional<std::string> warning;
};

// Row k of the even-size table: the couple (a0, 1/(k+1) - a0) repeated k+1
// times with the chosen zero-couple arrangement. a0 outside [0, 1/(k+1)] is
// legal but flagged, since the printed table restricts to that closed range.
inline SeedRow p5_alpha_row(std::size_t n, std::size_t k, const Rat& a0, const Arrangement& arr) {
  if (n < 1) throw UnsupportedSystem("even-size family needs n >= 1");
  if (k > n) throw RowOutOfRange("row k=" + std::to_string(k) + " does not exist for n=" + std::to_string(n));
  detail::check_arrangement(arr, 2 * (k + 1), n - k);
  Rat top(1, static_cast<long>(k + 1));
  SeedRow row;
  for (std::size_t j = 0; j < 2 * (k + 1); ++j) {
    row.params.a.push_back(j % 2 == 0 ? a0 : top - a0);
    for (int c = 0; c < arr[j]; ++c) {
      row.params.a.push_back(Rat(0));
      row.params.a.push_back(Rat(0));
    }
  }
  if (a0.sign() < 0 || a0 > top)
    row.warning = "alpha0 = " + a0.str() + " lies outside the tabulated range [0, " + top.str() + "]";
  return row;
}

inline SeedRow p5_alpha_row(std::size_t n, std::size_t k, const Rat& a0,
                            std::size_t arrangement_index = 0) {
  auto arrs = p5_arrangements(n, k);
  if (arrangement_index >= arrs.size())
    throw InvalidArrangement("arrangement index " + std::to_string(arrangement_index) +
                             " out of range, row has " + std::to_string(arrs.size()));
  return p5_alpha_row(n, k, a0, arrs[arrangement_index]);
}

// Constant candidate f_i = a_i * C_{i mod 2} / A_{i mod 2} for the even-size
// system. The parity sums A0, A1 must both be nonzero for the formula to make
// sense; the candidate is then accepted only if its full residual vanishes
// (for the diagonal coupling and a table row it always does; the construction
// stays honest for arbitrary parameters by checking instead of assuming).
inline std::optional<SolutionTuple> p5_constant_seed(const SystemSpec& sys, const ParamVector& p) {
  if (sys.kind != SystemKind::P5Symmetric)
    throw UnsupportedSystem("constant seeds exist for the even-size symmetric system only");
  sys.validate();
  if (p.size() != sys.arity()) throw ArityMismatch("parameter count does not match system arity");
  Rat c0 = sys.require_c0();
  Rat c1 = sys.require_c1();
  Rat a_even(0), a_odd(0);
  for (std::size_t i = 0; i < p.size(); ++i) (i % 2 == 0 ? a_even : a_odd) += p[i];
  if (a_even.is_zero()) throw ZeroA("even parameter sum A0 vanishes, constant seed undefined");
  if (a_odd.is_zero()) throw ZeroA("odd parameter sum A1 vanishes, constant seed undefined");

  SolutionTuple s;
  s.system = sys;
  s.params = p;
  s.components.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rat& c = i % 2 == 0 ? c0 : c1;
    const Rat& a = i % 2 == 0 ? a_even : a_odd;
    s.components.push_back(RatFunc(p[i] * c / a));
  }
  if (!is_exact_solution(s)) return std::nullopt;
  return s;
}

}  // namespace hierat
