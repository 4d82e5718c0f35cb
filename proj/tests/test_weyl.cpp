#include <catch2/catch_amalgamated.hpp>

#include "hierat/classify.hpp"
#include "hierat/seeds.hpp"
#include "hierat/weyl.hpp"
#include "support.hpp"

using namespace hierat;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

bool same_tuple(const SolutionTuple& a, const SolutionTuple& b) {
  return a.system.kind == b.system.kind && a.params == b.params && a.components == b.components &&
         a.system.c0 == b.system.c0 && a.system.c1 == b.system.c1;
}

SolutionTuple frozen_p5_seed() {
  SystemSpec sys{.kind = SystemKind::P5Symmetric, .n = 1, .c0 = Rat(1), .c1 = Rat(2)};
  auto s = p5_constant_seed(sys, ParamVector{{Rat(1, 4), Rat(3, 4), Rat(0), Rat(0)}});
  REQUIRE(s.has_value());
  return *s;
}

}  // namespace

TEST_CASE("word parsing and printing") {
  WeylWord w = parse_word("s0, s12 pi\tipi");
  REQUIRE(w.size() == 4);
  REQUIRE(w[0] == Letter::S(0));
  REQUIRE(w[1] == Letter::S(12));
  REQUIRE(w[2] == Letter::PI());
  REQUIRE(w[3] == Letter::PI_INV());
  REQUIRE(word_str(w) == "s0,s12,pi,ipi");
  REQUIRE(parse_word(word_str(w)) == w);
  REQUIRE(parse_word("").empty());

  REQUIRE_THROWS_AS(parse_word("x3"), ParseError);
  REQUIRE_THROWS_AS(parse_word("s"), ParseError);
  REQUIRE_THROWS_AS(parse_word("sx"), ParseError);
  REQUIRE_THROWS_AS(parse_word("pi3"), ParseError);
  REQUIRE_THROWS_AS(parse_word("s1,qq"), ParseError);

  SECTION("inverse word reverses and inverts") {
    WeylWord v = parse_word("s0,pi,s2,ipi");
    REQUIRE(word_str(inverse_word(v)) == "pi,s2,ipi,s0");
    for (int trial = 0; trial < 40; ++trial) {
      ParamVector p = testgen::rand_params(5);
      WeylWord r = testgen::rand_word(5, 6);
      REQUIRE(apply_word_params(apply_word_params(p, r), inverse_word(r)) == p);
    }
  }
}

TEST_CASE("parameter-level action") {
  ParamVector p{{Rat(1), Rat(0), Rat(0)}};
  REQUIRE(reflect_params(p, 0).a == std::vector<Rat>{Rat(-1), Rat(1), Rat(1)});
  REQUIRE(rotate_params(p).a == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  REQUIRE(rotate_params_inv(rotate_params(p)) == p);
  REQUIRE_THROWS_AS(reflect_params(p, 3), ParseError);

  SECTION("group relations on parameters, randomized") {
    for (std::size_t m : {3u, 4u, 5u, 6u}) {
      for (int trial = 0; trial < 20; ++trial) {
        ParamVector q = testgen::rand_params(m);
        // involution
        for (std::size_t i = 0; i < m; ++i)
          REQUIRE(reflect_params(reflect_params(q, i), i) == q);
        // braid on neighbours
        auto s = [&](std::size_t i, const ParamVector& v) { return reflect_params(v, i); };
        REQUIRE(s(0, s(1, s(0, q))) == s(1, s(0, s(1, q))));
        // commuting for non-adjacent indices
        if (m >= 5) REQUIRE(s(0, s(2, q)) == s(2, s(0, q)));
        // rotation conjugates the reflection index
        REQUIRE(s(0, rotate_params(q)) == rotate_params(s(1, q)));
        // full turn is the identity
        ParamVector r = q;
        for (std::size_t i = 0; i < m; ++i) r = rotate_params(r);
        REQUIRE(r == q);
        // every generator preserves the parameter sum
        REQUIRE(reflect_params(q, 1).sum() == q.sum());
        REQUIRE(rotate_params(q).sum() == q.sum());
      }
    }
  }
}

TEST_CASE("reflection on a full odd-size tuple, frozen") {
  RatFunc t = RatFunc::variable();
  SolutionTuple s = apply_reflection(p4_seed(3, 0), 0);
  REQUIRE(s.params.a == std::vector<Rat>{Rat(-1), Rat(1), Rat(1)});
  REQUIRE(s.components[0] == t);
  REQUIRE(s.components[1] == t.inverse());
  REQUIRE(s.components[2] == -t.inverse());
  REQUIRE(is_exact_solution(s));

  SECTION("the opposite neighbour convention is not a symmetry") {
    SolutionTuple wrong = p4_seed(3, 0);
    wrong.params = reflect_params(wrong.params, 0);
    RatFunc corr = RatFunc(Rat(1)) / t;
    wrong.components[1] -= corr;  // swapped roles
    wrong.components[2] += corr;
    REQUIRE_FALSE(is_exact_solution(wrong));
  }

  SECTION("zero pivot with zero weight acts trivially") {
    SolutionTuple id = apply_reflection(p4_seed(3, 0), 1);
    REQUIRE(id.components == p4_seed(3, 0).components);
    REQUIRE(id.params == p4_seed(3, 0).params);
  }

  SECTION("zero pivot with nonzero weight is refused with a precise message") {
    SolutionTuple bad = p4_seed(3, 0);
    bad.params = ParamVector{{Rat(0), Rat(1), Rat(0)}};
    REQUIRE_THROWS_MATCHES(
        apply_reflection(bad, 1), ZeroPivot,
        MessageMatches(ContainsSubstring("s1 pivots on an identically zero component with alpha = 1")));
  }
}

TEST_CASE("reflection on a full even-size tuple carries the 1/z factor") {
  RatFunc z = RatFunc::variable();
  SolutionTuple seed = frozen_p5_seed();

  SolutionTuple s = apply_reflection(seed, 0);
  REQUIRE(s.params.a == std::vector<Rat>{Rat(-1, 4), Rat(1), Rat(0), Rat(1, 4)});
  REQUIRE(s.components[1] == RatFunc(2) + (RatFunc(Rat(1, 4)) / z));
  REQUIRE(s.components[3] == -(RatFunc(Rat(1, 4)) / z));
  REQUIRE(is_exact_solution(s));

  SECTION("dropping the 1/z factor breaks exactness") {
    SolutionTuple wrong = seed;
    wrong.params = reflect_params(seed.params, 0);
    wrong.components[1] += RatFunc(Rat(1, 4));
    wrong.components[3] -= RatFunc(Rat(1, 4));
    REQUIRE_FALSE(is_exact_solution(wrong));
  }

  SECTION("the literal coupling admits no such reflection") {
    SolutionTuple lit = seed;
    lit.system.variant = CouplingVariant::LiteralF0;
    REQUIRE_THROWS_AS(apply_reflection(lit, 0), UnsupportedVariant);
  }

  SECTION("rotation swaps the two constraint constants") {
    SolutionTuple r = apply_rotation(seed);
    REQUIRE(r.system.c0 == Rat(2));
    REQUIRE(r.system.c1 == Rat(1));
    REQUIRE(r.params.a == std::vector<Rat>{Rat(3, 4), Rat(0), Rat(0), Rat(1, 4)});
    REQUIRE(r.components[0] == RatFunc(2));
    REQUIRE(r.components[3] == RatFunc(1));
    REQUIRE(is_exact_solution(r));
    REQUIRE(same_tuple(apply_rotation_inv(r), seed));
  }
}

TEST_CASE("group relations hold on full tuples") {
  SolutionTuple base = p4_seed(3, 1);  // all components nonzero

  auto s = [](const SolutionTuple& t, std::size_t i) { return apply_reflection(t, i); };

  REQUIRE(same_tuple(s(s(base, 0), 0), base));
  REQUIRE(same_tuple(s(s(s(base, 0), 1), 0), s(s(s(base, 1), 0), 1)));
  REQUIRE(same_tuple(apply_rotation_inv(apply_rotation(base)), base));
  // pi then s0 agrees with s1 then pi
  REQUIRE(same_tuple(s(apply_rotation(base), 0), apply_rotation(s(base, 1))));

  SolutionTuple five = p4_seed(5, 2);
  REQUIRE(same_tuple(s(s(five, 0), 2), s(s(five, 2), 0)));

  SECTION("three rotations of an arity-3 tuple are the identity") {
    SolutionTuple r = apply_rotation(apply_rotation(apply_rotation(base)));
    REQUIRE(same_tuple(r, base));
  }
}

TEST_CASE("word application with verification and guards") {
  SolutionTuple seed = p4_seed(3, 0);

  SECTION("frozen six-letter word") {
    BTResult r = apply_word(seed, parse_word("s0,s1,s2,pi,s0,s2"));
    REQUIRE(r.verified);
    REQUIRE(r.degree == 6);
    REQUIRE(r.params().a == std::vector<Rat>{Rat(2), Rat(2), Rat(-3)});
    REQUIRE(r.params() == apply_word_params(seed.params, r.word));
  }

  SECTION("frozen four-letter word stays small") {
    BTResult r = apply_word(seed, parse_word("s0,s1,s0,s1"));
    REQUIRE(r.verified);
    REQUIRE(r.degree == 1);
    REQUIRE(r.params().a == std::vector<Rat>{Rat(-1), Rat(1), Rat(1)});
  }

  SECTION("degree guard reports the offending prefix") {
    ApplyOptions opts;
    opts.degree_cap = 2;
    REQUIRE_THROWS_MATCHES(apply_word(seed, parse_word("s0,s1,s2,pi,s0,s2"), opts), DegreeOverflow,
                           MessageMatches(ContainsSubstring("after prefix \"s0,s1,s2\"")));
  }

  SECTION("zero pivot reports the offending prefix") {
    SolutionTuple bad = seed;
    bad.params = ParamVector{{Rat(0), Rat(1), Rat(0)}};
    REQUIRE_THROWS_MATCHES(apply_word(bad, parse_word("s2,s1")), ZeroPivot,
                           MessageMatches(ContainsSubstring("after prefix \"s2,s1\"")));
  }

  SECTION("per-letter verification rejects a non-solution input") {
    SolutionTuple bad = seed;
    bad.components[1] = RatFunc::variable();  // no longer a solution
    ApplyOptions opts;
    opts.verify_each = true;
    REQUIRE_THROWS_AS(apply_word(bad, parse_word("pi"), opts), VerificationFailed);
    BTResult quiet = apply_word(bad, parse_word("pi"));  // without the flag: reported, not thrown
    REQUIRE_FALSE(quiet.verified);
  }

  SECTION("per-letter verification passes on an exact orbit") {
    ApplyOptions opts;
    opts.verify_each = true;
    BTResult r = apply_word(seed, parse_word("s0,s1,pi,ipi,s1,s0"), opts);
    REQUIRE(r.verified);
    REQUIRE(same_tuple(r.solution, seed));
  }

  SECTION("random words are sound: verified and parameter-consistent") {
    int applied = 0;
    for (int trial = 0; trial < 60 || applied < 30; ++trial) {
      std::size_t arity = (trial % 2) ? 3 : 5;
      SolutionTuple start = (trial % 2) ? p4_seed(3, 1) : p4_seed(5, 1);
      WeylWord w = testgen::rand_word(arity, 5);
      try {
        BTResult r = apply_word(start, w);
        REQUIRE(r.verified);
        REQUIRE(r.params() == apply_word_params(start.params, w));
        REQUIRE(r.params().sum() == Rat(1));
        ++applied;
      } catch (const ZeroPivot&) {
        // a legitimately undefined step; soundness only concerns defined ones
      }
      if (trial > 400) break;
    }
    REQUIRE(applied >= 30);
  }

  SECTION("chains and the scalar equation carry no direct action") {
    SystemSpec chain{.kind = SystemKind::P4Chain, .n = 3};
    SolutionTuple g{chain, ParamVector{{Rat(1), Rat(0), Rat(0)}},
                    {RatFunc(Poly::monomial(1, Rat(1, 2))), RatFunc(Poly::monomial(1, Rat(1, 2))),
                     RatFunc(Poly::monomial(1, Rat(-1, 2)))}};
    REQUIRE_THROWS_AS(apply_reflection(g, 0), UnsupportedSystem);
    REQUIRE_THROWS_AS(apply_rotation(g), UnsupportedSystem);
  }
}
