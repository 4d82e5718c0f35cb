#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hierat/auxhier.hpp"
#include "hierat/classify.hpp"
#include "hierat/miura.hpp"
#include "hierat/system.hpp"
#include "hierat/weyl.hpp"

namespace hierat {

using nlohmann::json;

// JSON conventions: every rational is a decimal string "p" or "p/q" so no
// reader ever rounds it; polynomials are coefficient lists, low power first;
// rational functions carry integer-normalized num/den lists (common content
// divided out, denominator leading coefficient positive), which makes the
// serialized form canonical: equal functions serialize to equal bytes.

inline json rat_to_json(const Rat& r) { return r.str(); }

inline Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

inline json ratfunc_to_json(const RatFunc& f) {
  mpz_class l = f.num().denominator_lcm();
  mpz_class ld = f.den().denominator_lcm();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  auto scaled = [&](const Poly& p) {
    std::vector<mpz_class> v(static_cast<std::size_t>(p.degree()) + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat c = p.coeff(i);
      v[i] = c.num() * (l / c.den());
    }
    return v;
  };
  std::vector<mpz_class> nv = f.num().is_zero() ? std::vector<mpz_class>{mpz_class(0)} : scaled(f.num());
  std::vector<mpz_class> dv = scaled(f.den());
  mpz_class content(0);
  for (const auto& x : nv) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (const auto& x : dv) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content == 0) content = 1;
  json num = json::array(), den = json::array();
  for (const auto& x : nv) num.push_back(mpz_class(x / content).get_str());
  for (const auto& x : dv) den.push_back(mpz_class(x / content).get_str());
  return json{{"num", num}, {"den", den}};
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

inline RatFunc ratfunc_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return RatFunc(rat_from_json(j));
  if (j.is_array()) return RatFunc(poly_from_json(j));
  if (j.is_object()) {
    if (!j.contains("num")) throw ParseError("rational function object needs a num list");
    Poly num = poly_from_json(j.at("num"));
    Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(Rat(1));
    return RatFunc(num, den);
  }
  throw ParseError("cannot read a rational function from " + j.dump());
}

inline json params_to_json(const ParamVector& p) {
  json out = json::array();
  for (const auto& a : p.a) out.push_back(rat_to_json(a));
  return out;
}

inline ParamVector params_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a parameter array, got " + j.dump());
  ParamVector p;
  p.a.reserve(j.size());
  for (const auto& e : j) p.a.push_back(rat_from_json(e));
  return p;
}

inline SystemKind kind_from_name(const std::string& s) {
  if (s == "p4-symmetric") return SystemKind::P4Symmetric;
  if (s == "p4-chain") return SystemKind::P4Chain;
  if (s == "p5-symmetric") return SystemKind::P5Symmetric;
  if (s == "p5-chain") return SystemKind::P5Chain;
  if (s == "kudryashov2") return SystemKind::Kudryashov2;
  throw ParseError("unknown system kind: " + s);
}

inline CouplingVariant variant_from_name(const std::string& s) {
  if (s == "literal-f0") return CouplingVariant::LiteralF0;
  if (s == "diagonal-fi") return CouplingVariant::DiagonalFi;
  throw ParseError("unknown coupling variant: " + s);
}

inline json system_to_json(const SystemSpec& s) {
  json out{{"kind", kind_name(s.kind)}, {"n", s.n}};
  if (s.kind == SystemKind::P5Symmetric) out["variant"] = variant_name(s.variant);
  if (s.c0) out["c0"] = rat_to_json(*s.c0);
  if (s.c1) out["c1"] = rat_to_json(*s.c1);
  if (s.beta) out["beta"] = rat_to_json(*s.beta);
  if (s.delta) out["delta"] = rat_to_json(*s.delta);
  return out;
}

inline SystemSpec system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("system object needs a kind");
  SystemSpec s;
  s.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("n")) {
    const json& nj = j.at("n");
    if (!nj.is_number_integer() || (!nj.is_number_unsigned() && nj.get<long long>() < 0))
      throw ParseError("system n must be a nonnegative integer");
    s.n = nj.get<std::size_t>();
  } else if (s.kind == SystemKind::Kudryashov2) {
    s.n = 2;
  } else {
    throw ParseError("system object needs n");
  }
  if (j.contains("variant")) s.variant = variant_from_name(j.at("variant").get<std::string>());
  if (j.contains("c0")) s.c0 = rat_from_json(j.at("c0"));
  if (j.contains("c1")) s.c1 = rat_from_json(j.at("c1"));
  if (j.contains("beta")) s.beta = rat_from_json(j.at("beta"));
  if (j.contains("delta")) s.delta = rat_from_json(j.at("delta"));
  s.validate();
  return s;
}

inline json tuple_to_json(const SolutionTuple& t) {
  json comps = json::array();
  for (const auto& f : t.components) comps.push_back(ratfunc_to_json(f));
  return json{{"system", system_to_json(t.system)},
              {"params", params_to_json(t.params)},
              {"components", comps}};
}

inline SolutionTuple tuple_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a solution object, got " + j.dump());
  SolutionTuple t;
  t.system = system_from_json(j.at("system"));
  t.params = j.contains("params") ? params_from_json(j.at("params")) : ParamVector();
  if (!j.contains("components")) throw ParseError("solution object needs components");
  for (const auto& e : j.at("components")) t.components.push_back(ratfunc_from_json(e));
  t.check_arity();
  return t;
}

inline json btresult_to_json(const BTResult& b) {
  return json{{"word", word_str(b.word)},
              {"params", params_to_json(b.params())},
              {"solution", tuple_to_json(b.solution)},
              {"verified", b.verified},
              {"degree", b.degree}};
}

inline BTResult btresult_from_json(const json& j) {
  BTResult b;
  b.solution = tuple_from_json(j.at("solution"));
  b.word = parse_word(j.value("word", std::string()));
  b.verified = j.value("verified", false);
  b.degree = j.value("degree", b.solution.total_degree());
  return b;
}

inline json matched_row_to_json(const MatchedRow& m) {
  json out{{"table", kind_name(m.kind)},
           {"n", m.n},
           {"k", m.k},
           {"rotation", m.rotation},
           {"arrangement", m.arrangement}};
  if (m.alpha0) out["alpha0"] = rat_to_json(*m.alpha0);
  return out;
}

inline json verdict_to_json(const ClassificationVerdict& v) {
  json out{{"status", verdict_name(v.status)},
           {"normalized_params", params_to_json(v.normalized)},
           {"normalize_word", word_str(v.normalize_word)},
           {"depth_used", v.depth_used}};
  if (v.matched) out["matched_row"] = matched_row_to_json(*v.matched);
  if (v.witness) out["witness"] = btresult_to_json(*v.witness);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

inline json transform_report_to_json(const TransformReport& r) {
  return json{{"chain_residual_zero", r.residual_identity_ok},
              {"forward_ok", r.forward_ok},
              {"components_checked", r.components_checked}};
}

inline json kudryashov_to_json(const KudryashovConstraint& k) {
  json pts = json::array();
  for (const auto& [b, d] : k.points) pts.push_back(json{{"beta", b.str()}, {"delta", d.str()}});
  json lines = json::array();
  for (const auto& b : k.vertical_lines) lines.push_back(b.str());
  json cons = json::array();
  for (const auto& [e, bp] : k.constraints) {
    json rows = json::array();
    for (const auto& row : bp.coeffs()) {
      json r = json::array();
      for (const auto& c : row) r.push_back(c.str());
      rows.push_back(r);
    }
    cons.push_back(json{{"exponent", e}, {"beta_major_coeffs", rows}});
  }
  return json{{"sigma", k.sigma.str()},
              {"all_pairs", k.all_pairs},
              {"points", pts},
              {"vertical_lines", lines},
              {"constraints", cons}};
}

// Canonical writer used everywhere: two-space indent, sorted keys (the json
// object type is an ordered map), trailing newline. Byte-stable across runs.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hierat
