// Command line front end: exact construction, verification, transformation and
// classification of rational solutions of the cyclic Painleve-type systems.
// JSON goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success (verify: the tuple is a solution; classify: admits),
// 1 a well-formed run with a negative or aborted outcome, 2 malformed input
// or usage, 3 classification left undecided at the search depth.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hierat/json_io.hpp"
#include "hierat/seeds.hpp"

namespace {

using namespace hierat;

int degree_cap_from_env() {
  const char* s = std::getenv("HIERAT_DEGREE_CAP");
  if (!s || !*s) return 400;
  try {
    int v = std::stoi(s);
    if (v < 1) throw std::invalid_argument("nonpositive");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("HIERAT_DEGREE_CAP is not a positive integer: ") + s);
  }
}

json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out_path) {
  std::string text = dump_canonical(j);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
  }
}

ParamVector parse_param_list(const std::string& text) {
  ParamVector p;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.erase(tok.begin());
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();
    if (!tok.empty()) p.a.push_back(Rat::parse(tok));
  }
  if (p.a.empty()) throw ParseError("empty parameter list");
  return p;
}

void check_word_arity(const WeylWord& w, std::size_t arity) {
  for (const auto& l : w)
    if (l.op == Letter::Op::Reflect && l.index >= arity)
      throw ParseError("letter s" + std::to_string(l.index) + " out of range for arity " +
                       std::to_string(arity));
}

int cmd_verify(const std::string& input) {
  json j = read_json_input(input);
  if (j.is_object() && j.contains("solution")) j = j.at("solution");
  SolutionTuple t = tuple_from_json(j);
  auto res = residual(t);
  auto defect = first_defect(res);
  json out{{"solution", !defect.has_value()}, {"residuals_checked", res.size()}};
  if (defect) {
    out["first_defect"] = json{{"index", *defect}, {"residual", ratfunc_to_json(res[*defect])}};
  }
  emit(out, "");
  return defect ? 1 : 0;
}

int cmd_generate(const std::string& kind_name_arg, std::size_t n, std::size_t k,
                 std::size_t arrangement_index, const std::string& a0_text,
                 const std::string& c0_text, const std::string& c1_text,
                 const std::string& variant_text, const std::string& word_text, bool verify_each,
                 const std::string& out_path) {
  SystemKind kind = kind_from_name(kind_name_arg);
  SolutionTuple seed;
  if (kind == SystemKind::P4Symmetric) {
    seed = p4_seed(n, k, arrangement_index);
  } else if (kind == SystemKind::P5Symmetric) {
    SystemSpec sys;
    sys.kind = kind;
    sys.n = n;
    sys.variant = variant_from_name(variant_text);
    sys.c0 = Rat::parse(c0_text);
    sys.c1 = Rat::parse(c1_text);
    SeedRow row = p5_alpha_row(n, k, Rat::parse(a0_text), arrangement_index);
    if (row.warning) std::cerr << "warning: " << *row.warning << "\n";
    auto s = p5_constant_seed(sys, row.params);
    if (!s) throw VerificationFailed("constant candidate at this row is not a solution");
    seed = *s;
  } else {
    throw UnsupportedSystem("generate seeds the two symmetric families; convert reaches the chains");
  }
  WeylWord w = parse_word(word_text);
  check_word_arity(w, seed.system.arity());
  ApplyOptions opts;
  opts.verify_each = verify_each;
  opts.degree_cap = degree_cap_from_env();
  BTResult b = apply_word(seed, w, opts);
  emit(btresult_to_json(b), out_path);
  return b.verified ? 0 : 1;
}

int cmd_classify(const std::string& kind_name_arg, const std::string& params_text, int max_depth,
                 const std::string& c0_text, const std::string& c1_text) {
  SystemKind kind = kind_from_name(kind_name_arg);
  ParamVector p = parse_param_list(params_text);
  ClassifyOptions opts;
  opts.max_depth = max_depth;
  opts.degree_cap = degree_cap_from_env();
  opts.c0 = Rat::parse(c0_text);
  opts.c1 = Rat::parse(c1_text);
  ClassificationVerdict v = classify(p, kind, opts);
  emit(verdict_to_json(v), "");
  switch (v.status) {
    case Verdict::Admits: return 0;
    case Verdict::NotInTables: return 1;
    case Verdict::UndecidedAtDepth: return 3;
  }
  return 3;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& out_path) {
  SolutionTuple t = tuple_from_json(read_json_input(input));
  SolutionTuple r;
  if (to == "chain") {
    r = p4_symmetric_to_dressing(t);
  } else if (to == "symmetric") {
    r = p4_dressing_to_symmetric(t);
  } else {
    throw ParseError("--to must be chain or symmetric");
  }
  emit(tuple_to_json(r), out_path);
  return 0;
}

int cmd_p5_verify(const std::string& input) {
  json j = read_json_input(input);
  if (!j.is_object() || !j.contains("chain") || !j.contains("candidate") || !j.contains("zeta"))
    throw ParseError("p5-verify input needs chain, candidate and zeta");
  SolutionTuple chain = tuple_from_json(j.at("chain"));
  SolutionTuple cand = tuple_from_json(j.at("candidate"));
  RatFunc zeta = ratfunc_from_json(j.at("zeta"));
  TransformReport rep = p5_verify_transform(chain, cand, zeta);
  emit(transform_report_to_json(rep), "");
  return rep.forward_ok && rep.residual_identity_ok ? 0 : 1;
}

int cmd_kudryashov(const std::string& sigma_text) {
  KudryashovConstraint k = solve_kudryashov_params(Rat::parse(sigma_text));
  emit(kudryashov_to_json(k), "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational-solution engine for the cyclic Painleve-type hierarchies"};
  app.require_subcommand(1);

  std::string input = "-", out_path, kind = "p4-symmetric", variant = "diagonal-fi";
  std::string a0 = "0", c0 = "1", c1 = "1", word, params_text, to, sigma = "1";
  std::size_t n = 3, k = 0, arrangement_index = 0;
  int max_depth = 16;
  bool verify_each = false;

  auto* verify = app.add_subcommand("verify", "check a tuple's residual exactly");
  verify->add_option("--input,-i", input, "solution JSON file, - for stdin");

  auto* generate = app.add_subcommand("generate", "build a table seed and apply a word");
  generate->add_option("--kind", kind, "p4-symmetric or p5-symmetric");
  generate->add_option("--n", n, "family size index");
  generate->add_option("--k", k, "table row");
  generate->add_option("--arrangement-index", arrangement_index, "zero-couple arrangement");
  generate->add_option("--a0", a0, "free row value (even-size table)");
  generate->add_option("--c0", c0, "even constraint constant");
  generate->add_option("--c1", c1, "odd constraint constant");
  generate->add_option("--variant", variant, "literal-f0 or diagonal-fi");
  generate->add_option("--word,-w", word, "letters s<i>, pi, ipi; comma separated");
  generate->add_flag("--verify-each", verify_each, "run the oracle after every letter");
  generate->add_option("--out,-o", out_path, "also write the JSON to this file");

  auto* classify_cmd = app.add_subcommand("classify", "decide whether parameters admit a rational solution");
  classify_cmd->add_option("--kind", kind, "p4-symmetric or p5-symmetric");
  classify_cmd->add_option("--params,-p", params_text, "comma separated rationals")->required();
  classify_cmd->add_option("--max-depth", max_depth, "normalization search depth");
  classify_cmd->add_option("--c0", c0, "even constraint constant for the witness");
  classify_cmd->add_option("--c1", c1, "odd constraint constant for the witness");

  auto* convert = app.add_subcommand("convert", "map a tuple across the odd-size correspondence");
  convert->add_option("--input,-i", input, "solution JSON file, - for stdin");
  convert->add_option("--to", to, "chain or symmetric")->required();
  convert->add_option("--out,-o", out_path, "also write the JSON to this file");

  auto* p5v = app.add_subcommand("p5-verify", "verify a claimed even-size correspondence");
  p5v->add_option("--input,-i", input, "JSON with chain, candidate, zeta");

  auto* kud = app.add_subcommand("kudryashov", "eliminate (beta, delta) for the pole candidate sigma/x");
  kud->add_option("--sigma", sigma, "pole residue of the candidate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; every malformed invocation exits 2.
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(input);
    if (generate->parsed())
      return cmd_generate(kind, n, k, arrangement_index, a0, c0, c1, variant, word, verify_each,
                          out_path);
    if (classify_cmd->parsed()) return cmd_classify(kind, params_text, max_depth, c0, c1);
    if (convert->parsed()) return cmd_convert(input, to, out_path);
    if (p5v->parsed()) return cmd_p5_verify(input);
    if (kud->parsed()) return cmd_kudryashov(sigma);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RowOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArrangement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedVariant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MissingConstants& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArityMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidVariableMap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // ZeroPivot, DegreeOverflow, VerificationFailed, ZeroA and friends:
    // well-formed runs that could not deliver.
    std::cerr << "aborted: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
