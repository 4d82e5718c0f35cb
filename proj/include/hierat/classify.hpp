#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/seeds.hpp"
#include "hierat/weyl.hpp"

namespace hierat {

// A table row that matches a parameter vector exactly: row k of the given
// family, with a zero-couple arrangement, rotated into place. alpha0 is the
// free value of the even-size rows and is absent for the odd-size table.
struct MatchedRow {
  SystemKind kind = SystemKind::P4Symmetric;
  std::size_t n = 0;
  std::size_t k = 0;
  Arrangement arrangement;
  std::size_t rotation = 0;
  std::optional<Rat> alpha0;
};

namespace detail {

inline ParamVector rotated(const ParamVector& p, std::size_t r) {
  ParamVector q = p;
  for (std::size_t i = 0; i < r; ++i) q = rotate_params(q);
  return q;
}

}  // namespace detail

// All table rows equal to p on the nose, in deterministic order (k, then
// arrangement, then rotation; the even-size table reads alpha0 off p).
// Rotations are part of the match because a row and its rotations describe the
// same orbit of solutions.
inline std::vector<MatchedRow> match_tables_all(const ParamVector& p, SystemKind kind) {
  std::vector<MatchedRow> out;
  std::size_t m = p.size();
  if (kind == SystemKind::P4Symmetric) {
    if (m < 3 || m % 2 == 0) return out;
    for (std::size_t k = 0; 2 * k + 1 <= m; ++k) {
      for (const auto& arr : p4_arrangements(m, k)) {
        ParamVector row = p4_seed(m, k, arr).params;
        for (std::size_t r = 0; r < m; ++r) {
          if (detail::rotated(row, r) == p)
            out.push_back({kind, m, k, arr, r, std::nullopt});
        }
      }
    }
    return out;
  }
  if (kind == SystemKind::P5Symmetric) {
    if (m < 4 || m % 2 != 0) return out;
    std::size_t n = m / 2 - 1;
    for (std::size_t k = 0; k <= n; ++k) {
      for (const auto& arr : p5_arrangements(n, k)) {
        for (std::size_t r = 0; r < m; ++r) {
          // The rotated row starts with its alpha0 slot at position r.
          Rat a0 = p[cyc(static_cast<long>(m) - static_cast<long>(r), m)];
          ParamVector row = p5_alpha_row(n, k, a0, arr).params;
          if (detail::rotated(row, r) == p)
            out.push_back({kind, n, k, arr, r, a0});
        }
      }
    }
    return out;
  }
  throw UnsupportedSystem("tables exist for the two symmetric families only");
}

inline std::optional<MatchedRow> match_tables(const ParamVector& p, SystemKind kind) {
  auto all = match_tables_all(p, kind);
  if (all.empty()) return std::nullopt;
  return all.front();
}

struct NormalizeResult {
  ParamVector params;
  WeylWord word;       // applied to the input, left to right, reaches params
  bool complete = false;
  int depth_used = 0;
  std::size_t states_seen = 0;
};

namespace detail {

inline bool in_unit_box(const ParamVector& p) {
  for (const auto& x : p.a)
    if (x.sign() < 0 || x > Rat(1)) return false;
  return true;
}

// Total distance to [0,1] per coordinate; lexicographic tie-break on the vector.
inline std::pair<Rat, std::vector<Rat>> violation_key(const ParamVector& p) {
  Rat total(0);
  for (const auto& x : p.a) {
    if (x.sign() < 0) total -= x;
    if (x > Rat(1)) total += x - Rat(1);
  }
  return {total, p.a};
}

}  // namespace detail

// Breadth-first search through reflections and rotations for a representative
// with every coordinate in [0,1]. Real parameters always have one in theory;
// the search is depth-bounded, and on exhaustion reports complete=false with
// the least-violating representative seen instead of pretending.
inline NormalizeResult normalize_real(const ParamVector& p, int max_depth = 16) {
  std::size_t m = p.size();
  std::vector<Letter> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(Letter::S(i));
  gens.push_back(Letter::PI());
  gens.push_back(Letter::PI_INV());

  std::map<std::vector<Rat>, std::pair<std::vector<Rat>, Letter>> parent;
  auto reconstruct = [&](const ParamVector& end) {
    WeylWord w;
    std::vector<Rat> cur = end.a;
    while (cur != p.a) {
      auto it = parent.find(cur);
      w.push_back(it->second.second);
      cur = it->second.first;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  NormalizeResult best;
  best.params = p;
  auto best_key = detail::violation_key(p);

  if (detail::in_unit_box(p)) {
    best.complete = true;
    return best;
  }

  std::vector<ParamVector> frontier = {p};
  std::map<std::vector<Rat>, bool> seen;
  seen[p.a] = true;
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<ParamVector> next;
    for (const auto& state : frontier) {
      for (const auto& g : gens) {
        ParamVector t = apply_letter_params(state, g);
        if (seen.count(t.a)) continue;
        seen[t.a] = true;
        parent[t.a] = {state.a, g};
        if (detail::in_unit_box(t)) {
          NormalizeResult res;
          res.params = t;
          res.word = reconstruct(t);
          res.complete = true;
          res.depth_used = depth;
          res.states_seen = seen.size();
          return res;
        }
        auto key = detail::violation_key(t);
        if (key < best_key) {
          best_key = key;
          best.params = t;
          best.word = reconstruct(t);
        }
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
    best.depth_used = depth;
    if (frontier.empty()) break;
  }
  best.states_seen = seen.size();
  best.complete = false;
  return best;
}

enum class Verdict { Admits, NotInTables, UndecidedAtDepth };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Admits: return "admits";
    case Verdict::NotInTables: return "not-in-tables";
    case Verdict::UndecidedAtDepth: return "undecided-at-depth";
  }
  return "?";
}

struct ClassificationVerdict {
  Verdict status = Verdict::UndecidedAtDepth;
  ParamVector normalized;
  WeylWord normalize_word;
  std::optional<MatchedRow> matched;
  std::optional<BTResult> witness;
  int depth_used = 0;
  std::string note;
};

struct ClassifyOptions {
  int max_depth = 16;
  int degree_cap = 400;  // guard for the witness pullback
  // Constraint constants for even-size witness construction.
  Rat c0 = Rat(1);
  Rat c1 = Rat(1);
};

// Decides whether the parameter vector admits a rational solution, by
// normalizing into the unit box, matching against the seed tables, and then
// proving ADMITS constructively: build the seed at the normalized point and
// pull it back along the inverse word, re-verifying the residual at the end.
// The normalized representative in the box is unique up to rotation (the box
// cut with the level set of the parameter sum is the fundamental alcove), and
// the match scans all rotations, so a failed match is a proof of absence
// rather than a search failure. Only a depth-exhausted normalization or a
// degenerate even-size row leaves the answer undecided.
inline ClassificationVerdict classify(const ParamVector& p, SystemKind kind,
                                      const ClassifyOptions& opts = {}) {
  if (kind != SystemKind::P4Symmetric && kind != SystemKind::P5Symmetric)
    throw UnsupportedSystem("classification runs on the two symmetric families");
  ClassificationVerdict v;
  NormalizeResult norm = normalize_real(p, opts.max_depth);
  v.normalized = norm.params;
  v.normalize_word = norm.word;
  v.depth_used = norm.depth_used;
  if (!norm.complete) {
    v.status = Verdict::UndecidedAtDepth;
    v.note = "no representative inside the unit box within depth " + std::to_string(opts.max_depth);
    return v;
  }
  auto matches = match_tables_all(norm.params, kind);
  if (matches.empty()) {
    v.status = Verdict::NotInTables;
    v.note = "normalized representative matches no table row in any rotation";
    return v;
  }
  v.matched = matches.front();

  // Constructive witness at the normalized point, pulled back to p.
  WeylWord back = inverse_word(norm.word);
  std::string degenerate;
  for (const auto& row : matches) {
    SolutionTuple seed;
    if (kind == SystemKind::P4Symmetric) {
      seed.system.kind = SystemKind::P4Symmetric;
      seed.system.n = p.size();
      seed.params = norm.params;
      for (const auto& a : norm.params.a)
        seed.components.push_back(RatFunc(Poly::monomial(1, a)));
    } else {
      SystemSpec sys;
      sys.kind = SystemKind::P5Symmetric;
      sys.n = row.n;
      sys.c0 = opts.c0;
      sys.c1 = opts.c1;
      try {
        auto cs = p5_constant_seed(sys, norm.params);
        if (!cs) {
          degenerate = "constant candidate at the matched row is not a solution";
          continue;
        }
        seed = *cs;
      } catch (const ZeroA& e) {
        degenerate = e.what();
        break;  // the parity sums do not depend on the row; no retry will help
      }
    }
    ApplyOptions aopts;
    aopts.degree_cap = opts.degree_cap;
    BTResult w = apply_word(seed, back, aopts);
    if (!w.verified || !(w.params() == p))
      throw VerificationFailed("witness pullback failed to land on the input parameters");
    v.matched = row;
    v.witness = std::move(w);
    v.status = Verdict::Admits;
    return v;
  }
  v.status = Verdict::UndecidedAtDepth;
  v.note = "matched a table row but could not build a verified witness: " + degenerate;
  return v;
}

}  // namespace hierat
