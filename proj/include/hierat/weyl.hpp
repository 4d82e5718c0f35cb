#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/hierarchy.hpp"
#include "hierat/system.hpp"

namespace hierat {

// One generator of the extended affine Weyl action: a reflection s_i or a
// cyclic rotation (pi shifts every index down by one, so component 1 becomes
// component 0; ipi is its inverse).
struct Letter {
  enum class Op { Reflect, Rotate, RotateInv };
  Op op = Op::Reflect;
  std::size_t index = 0;

  static Letter S(std::size_t i) { return {Op::Reflect, i}; }
  static Letter PI() { return {Op::Rotate, 0}; }
  static Letter PI_INV() { return {Op::RotateInv, 0}; }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.op == b.op && (a.op != Op::Reflect || a.index == b.index);
  }

  Letter inverse() const {
    switch (op) {
      case Op::Reflect: return *this;
      case Op::Rotate: return PI_INV();
      case Op::RotateInv: return PI();
    }
    return *this;
  }

  std::string str() const {
    switch (op) {
      case Op::Reflect: return "s" + std::to_string(index);
      case Op::Rotate: return "pi";
      case Op::RotateInv: return "ipi";
    }
    return "?";
  }
};

// Words apply left to right: {a, b} means first a, then b.
using WeylWord = std::vector<Letter>;

inline WeylWord inverse_word(const WeylWord& w) {
  WeylWord out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(w[i].inverse());
  return out;
}

inline std::string word_str(const WeylWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s;
}

// Parses "s0,s2,pi,ipi" (commas and/or spaces). Empty string is the identity.
inline WeylWord parse_word(const std::string& text) {
  WeylWord out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok == "pi") {
      out.push_back(Letter::PI());
    } else if (tok == "ipi") {
      out.push_back(Letter::PI_INV());
    } else if (tok.size() >= 2 && tok[0] == 's') {
      for (std::size_t i = 1; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') throw ParseError("bad word letter: " + tok);
      out.push_back(Letter::S(std::stoul(tok.substr(1))));
    } else {
      throw ParseError("bad word letter: " + tok);
    }
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  return out;
}

// Parameter-level action. alpha_i flips sign and spills onto both neighbours.
inline ParamVector reflect_params(const ParamVector& p, std::size_t i) {
  std::size_t m = p.size();
  if (i >= m) throw ParseError("reflection index " + std::to_string(i) + " out of range for arity " + std::to_string(m));
  ParamVector q = p;
  Rat ai = p[i];
  q[i] = -ai;
  q[cyc(static_cast<long>(i) + 1, m)] += ai;
  q[cyc(static_cast<long>(i) - 1, m)] += ai;
  return q;
}

inline ParamVector rotate_params(const ParamVector& p) {
  ParamVector q = p;
  if (!q.a.empty()) std::rotate(q.a.begin(), q.a.begin() + 1, q.a.end());
  return q;
}

inline ParamVector rotate_params_inv(const ParamVector& p) {
  ParamVector q = p;
  if (!q.a.empty()) std::rotate(q.a.begin(), q.a.end() - 1, q.a.end());
  return q;
}

inline ParamVector apply_letter_params(const ParamVector& p, const Letter& l) {
  switch (l.op) {
    case Letter::Op::Reflect: return reflect_params(p, l.index);
    case Letter::Op::Rotate: return rotate_params(p);
    case Letter::Op::RotateInv: return rotate_params_inv(p);
  }
  return p;
}

inline ParamVector apply_word_params(const ParamVector& p, const WeylWord& w) {
  ParamVector q = p;
  for (const auto& l : w) q = apply_letter_params(q, l);
  return q;
}

namespace detail {

inline void require_symmetric_kind(const SystemSpec& sys) {
  if (sys.kind == SystemKind::P4Chain || sys.kind == SystemKind::P5Chain)
    throw UnsupportedSystem("chain tuples transform through the correspondence maps, not directly");
  if (sys.kind == SystemKind::Kudryashov2)
    throw UnsupportedSystem("the scalar equation carries no cyclic group action");
}

}  // namespace detail

// Reflection s_i on a full tuple. The component correction is alpha_i / f_i
// for the odd-size system and alpha_i / (z f_i) for the even-size one;
// component i+1 gains it, component i-1 loses it. When f_i is identically
// zero the reflection is the identity if alpha_i is zero too, and has no
// meaning otherwise (ZeroPivot).
inline SolutionTuple apply_reflection(const SolutionTuple& s, std::size_t i) {
  detail::require_symmetric_kind(s.system);
  s.check_arity();
  std::size_t m = s.system.arity();
  if (i >= m) throw ParseError("reflection index " + std::to_string(i) + " out of range for arity " + std::to_string(m));
  if (s.system.kind == SystemKind::P5Symmetric &&
      s.system.variant == CouplingVariant::LiteralF0)
    throw UnsupportedVariant(
        "the literal coupling admits no reflection of this shape; use the diagonal variant");

  SolutionTuple out = s;
  out.params = reflect_params(s.params, i);
  const RatFunc& fi = s.components[i];
  if (fi.is_zero()) {
    if (!s.params[i].is_zero())
      throw ZeroPivot("s" + std::to_string(i) + " pivots on an identically zero component with alpha = " +
                      s.params[i].str());
    return out;  // alpha_i = 0: s_i acts trivially
  }
  RatFunc corr = RatFunc(s.params[i]) / fi;
  if (s.system.kind == SystemKind::P5Symmetric) corr = corr / RatFunc::variable();
  out.components[cyc(static_cast<long>(i) + 1, m)] += corr;
  out.components[cyc(static_cast<long>(i) - 1, m)] -= corr;
  return out;
}

// Rotation pi on a full tuple: components and parameters shift down by one.
// For the even-size system the parity classes trade places, so the constraint
// constants swap with them.
inline SolutionTuple apply_rotation(const SolutionTuple& s) {
  detail::require_symmetric_kind(s.system);
  s.check_arity();
  SolutionTuple out = s;
  out.params = rotate_params(s.params);
  std::rotate(out.components.begin(), out.components.begin() + 1, out.components.end());
  if (s.system.kind == SystemKind::P5Symmetric) std::swap(out.system.c0, out.system.c1);
  return out;
}

inline SolutionTuple apply_rotation_inv(const SolutionTuple& s) {
  detail::require_symmetric_kind(s.system);
  s.check_arity();
  SolutionTuple out = s;
  out.params = rotate_params_inv(s.params);
  std::rotate(out.components.begin(), out.components.end() - 1, out.components.end());
  if (s.system.kind == SystemKind::P5Symmetric) std::swap(out.system.c0, out.system.c1);
  return out;
}

inline SolutionTuple apply_letter(const SolutionTuple& s, const Letter& l) {
  switch (l.op) {
    case Letter::Op::Reflect: return apply_reflection(s, l.index);
    case Letter::Op::Rotate: return apply_rotation(s);
    case Letter::Op::RotateInv: return apply_rotation_inv(s);
  }
  return s;
}

struct ApplyOptions {
  bool verify_each = false;  // run the residual oracle after every letter
  int degree_cap = 400;      // abort when any component degree passes this
};

struct BTResult {
  SolutionTuple solution;
  WeylWord word;
  bool verified = false;
  int degree = kZeroPolyDegree;

  const ParamVector& params() const { return solution.params; }
};

// Applies a word letter by letter with a degree guard, then runs the residual
// oracle on the result. Failures carry the word prefix that produced them.
inline BTResult apply_word(const SolutionTuple& s, const WeylWord& w,
                           const ApplyOptions& opts = {}) {
  SolutionTuple cur = s;
  for (std::size_t step = 0; step < w.size(); ++step) {
    WeylWord prefix(w.begin(), w.begin() + static_cast<long>(step) + 1);
    try {
      cur = apply_letter(cur, w[step]);
    } catch (const ZeroPivot& e) {
      throw ZeroPivot(std::string(e.what()) + " after prefix \"" + word_str(prefix) + "\"");
    }
    int deg = cur.total_degree();
    if (deg > opts.degree_cap)
      throw DegreeOverflow("degree " + std::to_string(deg) + " exceeds cap " +
                           std::to_string(opts.degree_cap) + " after prefix \"" +
                           word_str(prefix) + "\"");
    if (opts.verify_each && !is_exact_solution(cur))
      throw VerificationFailed("residual became nonzero after prefix \"" + word_str(prefix) + "\"");
  }
  BTResult res;
  res.solution = std::move(cur);
  res.word = w;
  res.degree = res.solution.total_degree();
  res.verified = is_exact_solution(res.solution);
  return res;
}

}  // namespace hierat
