#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hierat/errors.hpp"
#include "hierat/rat.hpp"
#include "hierat/ratfunc.hpp"

namespace hierat {

// The five equation families the engine evaluates.
enum class SystemKind {
  P4Symmetric,      // odd-size cyclic first-order system, n components
  P4Chain,          // its dressing-chain form, n components
  P5Symmetric,      // even-size cyclic system with two constraints, 2n+2 components
  P5Chain,          // its dressing-chain form, 2n+2 components
  Kudryashov2,      // scalar fourth-order equation, 1 component
};

// How the non-derivative coupling term of the even-size system reads its
// component: the first component always, or the component of the row itself.
enum class CouplingVariant { LiteralF0, DiagonalFi };

inline std::string kind_name(SystemKind k) {
  switch (k) {
    case SystemKind::P4Symmetric: return "p4-symmetric";
    case SystemKind::P4Chain: return "p4-chain";
    case SystemKind::P5Symmetric: return "p5-symmetric";
    case SystemKind::P5Chain: return "p5-chain";
    case SystemKind::Kudryashov2: return "kudryashov2";
  }
  return "?";
}

inline std::string variant_name(CouplingVariant v) {
  return v == CouplingVariant::LiteralF0 ? "literal-f0" : "diagonal-fi";
}

// Wraps the index into [0, m) for cyclic subscripts.
inline std::size_t cyc(long i, std::size_t m) {
  long mm = static_cast<long>(m);
  long r = i % mm;
  if (r < 0) r += mm;
  return static_cast<std::size_t>(r);
}

struct ParamVector {
  std::vector<Rat> a;

  ParamVector() = default;
  explicit ParamVector(std::vector<Rat> v) : a(std::move(v)) {}

  std::size_t size() const { return a.size(); }
  const Rat& operator[](std::size_t i) const { return a[i]; }
  Rat& operator[](std::size_t i) { return a[i]; }
  Rat at_cyc(long i) const { return a[cyc(i, a.size())]; }

  // The weighted parameter sum the hierarchy conserves.
  Rat sum() const {
    Rat s(0);
    for (const auto& x : a) s += x;
    return s;
  }

  friend bool operator==(const ParamVector& x, const ParamVector& y) { return x.a == y.a; }
  friend bool operator<(const ParamVector& x, const ParamVector& y) { return x.a < y.a; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ", ";
      s += a[i].str();
    }
    return s + ")";
  }
};

// Which family, its size index n, and every constant the equations need.
// The size index means: n components for the odd family, 2n+2 for the even
// family, 1 for the scalar equation.
struct SystemSpec {
  SystemKind kind = SystemKind::P4Symmetric;
  std::size_t n = 3;
  CouplingVariant variant = CouplingVariant::DiagonalFi;  // even-size systems only
  std::optional<Rat> c0;     // even-component constraint constant
  std::optional<Rat> c1;     // odd-component constraint constant
  std::optional<Rat> beta;   // scalar equation only
  std::optional<Rat> delta;  // scalar equation only

  std::size_t arity() const {
    switch (kind) {
      case SystemKind::P4Symmetric:
      case SystemKind::P4Chain:
        return n;
      case SystemKind::P5Symmetric:
      case SystemKind::P5Chain:
        return 2 * n + 2;
      case SystemKind::Kudryashov2:
        return 1;
    }
    return 0;
  }

  void validate() const {
    switch (kind) {
      case SystemKind::P4Symmetric:
      case SystemKind::P4Chain:
        if (n < 3 || n % 2 == 0)
          throw UnsupportedSystem("odd-size family needs odd n >= 3, got n=" + std::to_string(n));
        break;
      case SystemKind::P5Symmetric:
      case SystemKind::P5Chain:
        if (n < 1)
          throw UnsupportedSystem("even-size family needs n >= 1");
        break;
      case SystemKind::Kudryashov2:
        break;
    }
  }

  Rat require_c0() const {
    if (!c0) throw MissingConstants("constraint constant c0 is required");
    return *c0;
  }
  Rat require_c1() const {
    if (!c1) throw MissingConstants("constraint constant c1 is required");
    return *c1;
  }
  Rat require_beta() const {
    if (!beta) throw MissingConstants("constant beta is required");
    return *beta;
  }
  Rat require_delta() const {
    if (!delta) throw MissingConstants("constant delta is required");
    return *delta;
  }
};

// A parameter vector plus candidate components, as one checkable object.
struct SolutionTuple {
  SystemSpec system;
  ParamVector params;
  std::vector<RatFunc> components;

  void check_arity() const {
    std::size_t m = system.arity();
    // The scalar equation has constants beta/delta instead of a parameter vector.
    std::size_t want_params = system.kind == SystemKind::Kudryashov2 ? 0 : m;
    if (params.size() != want_params)
      throw ArityMismatch("parameter count " + std::to_string(params.size()) +
                          " does not match expected " + std::to_string(want_params));
    if (components.size() != m)
      throw ArityMismatch("component count " + std::to_string(components.size()) +
                          " does not match system arity " + std::to_string(m));
  }

  const RatFunc& at_cyc(long i) const { return components[cyc(i, components.size())]; }

  // Largest numerator/denominator degree across components.
  int total_degree() const {
    int d = kZeroPolyDegree;
    for (const auto& f : components) d = std::max(d, f.height_degree());
    return d;
  }
};

}  // namespace hierat
