#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "hierat/seeds.hpp"

using namespace hierat;

namespace {

// Independent oracle: length-n cyclic 0/1 patterns up to rotation, with the
// given number of ones and every maximal cyclic zero-run of even length.
std::set<std::string> necklace_patterns(std::size_t n, std::size_t ones) {
  std::set<std::string> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::string s(n, '0');
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        s[i] = '1';
        ++bits;
      }
    if (bits != ones) continue;
    std::size_t start = s.find('1');
    std::string r = s.substr(start) + s.substr(0, start);
    bool ok = true;
    std::size_t run = 0;
    for (char c : r) {
      if (c == '0') {
        ++run;
      } else {
        if (run % 2) ok = false;
        run = 0;
      }
    }
    if (run % 2) ok = false;
    if (!ok) continue;
    std::string best = r;
    for (std::size_t i = 1; i < n; ++i) {
      std::string cur = r.substr(i) + r.substr(0, i);
      if (cur < best) best = cur;
    }
    out.insert(best);
  }
  return out;
}

std::string zero_pattern(const SolutionTuple& s) {
  std::string p;
  for (const RatFunc& f : s.components) p.push_back(f.is_zero() ? '0' : '1');
  std::string best = p;
  for (std::size_t i = 1; i < p.size(); ++i) {
    std::string cur = p.substr(i) + p.substr(0, i);
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

TEST_CASE("zero-couple arrangements, frozen counts") {
  REQUIRE(p4_arrangements(3, 0).size() == 1);
  REQUIRE(p4_arrangements(3, 1).size() == 1);
  REQUIRE(p4_arrangements(5, 0).size() == 1);
  REQUIRE(p4_arrangements(5, 1).size() == 1);
  REQUIRE(p4_arrangements(5, 2).size() == 1);
  REQUIRE(p4_arrangements(7, 1).size() == 2);
  REQUIRE(p4_arrangements(7, 2).size() == 1);
  REQUIRE(p4_arrangements(9, 1).size() == 4);
  REQUIRE(p4_arrangements(9, 2).size() == 3);

  SECTION("index 0 is the printed shape: every couple in the last gap") {
    for (std::size_t n : {3u, 5u, 7u, 9u}) {
      for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
        auto arrs = p4_arrangements(n, k);
        REQUIRE_FALSE(arrs.empty());
        Arrangement first = arrs.front();
        for (std::size_t j = 0; j + 1 < first.size(); ++j) REQUIRE(first[j] == 0);
        REQUIRE(first.back() == static_cast<int>((n - 2 * k - 1) / 2));
      }
    }
  }

  SECTION("arrangements are exactly the even-zero-run necklaces") {
    for (std::size_t n : {3u, 5u, 7u, 9u}) {
      for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
        auto arrs = p4_arrangements(n, k);
        std::set<std::string> expected = necklace_patterns(n, 2 * k + 1);
        REQUIRE(arrs.size() == expected.size());
        std::set<std::string> got;
        for (const Arrangement& a : arrs) got.insert(zero_pattern(p4_seed(n, k, a)));
        REQUIRE(got == expected);
      }
    }
  }
}

TEST_CASE("odd-size table rows are exact solutions") {
  for (std::size_t n : {3u, 5u, 7u, 9u}) {
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
      for (const Arrangement& a : p4_arrangements(n, k)) {
        SolutionTuple s = p4_seed(n, k, a);
        REQUIRE(s.params.size() == n);
        REQUIRE(s.components.size() == n);
        REQUIRE(s.params.sum() == Rat(1));
        REQUIRE(is_exact_solution(s));
      }
    }
  }

  SECTION("frozen smallest rows") {
    SolutionTuple s0 = p4_seed(3, 0);
    REQUIRE(s0.params.a == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    REQUIRE(s0.components[0] == RatFunc(Poly::variable()));
    REQUIRE(s0.components[1].is_zero());
    REQUIRE(s0.components[2].is_zero());

    SolutionTuple s1 = p4_seed(3, 1);
    REQUIRE(s1.params.a == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    for (const RatFunc& f : s1.components)
      REQUIRE(f == RatFunc(Poly::monomial(1, Rat(1, 3))));
  }

  SECTION("rejections") {
    REQUIRE_THROWS_AS(p4_arrangements(4, 0), UnsupportedSystem);
    REQUIRE_THROWS_AS(p4_arrangements(1, 0), UnsupportedSystem);
    REQUIRE_THROWS_AS(p4_arrangements(3, 2), RowOutOfRange);
    REQUIRE_THROWS_AS(p4_seed(3, 2), RowOutOfRange);
    REQUIRE_THROWS_AS(p4_seed(3, 0, Arrangement{2}), InvalidArrangement);
    REQUIRE_THROWS_AS(p4_seed(3, 0, Arrangement{0, 1}), InvalidArrangement);
    REQUIRE_THROWS_AS(p4_seed(3, 0, Arrangement{-1}), InvalidArrangement);
    REQUIRE_THROWS_AS(p4_seed(3, 0, std::size_t{5}), InvalidArrangement);
    REQUIRE_THROWS_AS(enumerate_arrangements(0, 1), InvalidArrangement);
  }
}

TEST_CASE("even-size table rows") {
  SECTION("frozen counts and shapes") {
    REQUIRE(p5_arrangements(1, 0).size() == 1);
    REQUIRE(p5_arrangements(1, 1).size() == 1);
    REQUIRE(p5_arrangements(2, 0).size() == 2);
    REQUIRE(p5_arrangements(3, 1).size() == 3);
    REQUIRE(p5_arrangements(3, 1)[0] == Arrangement{0, 0, 0, 2});
    REQUIRE(p5_arrangements(3, 1)[1] == Arrangement{0, 0, 1, 1});
    REQUIRE(p5_arrangements(3, 1)[2] == Arrangement{0, 1, 0, 1});
  }

  SECTION("frozen row and its warnings") {
    SeedRow row = p5_alpha_row(1, 0, Rat(1, 4));
    REQUIRE(row.params.a == std::vector<Rat>{Rat(1, 4), Rat(3, 4), Rat(0), Rat(0)});
    REQUIRE_FALSE(row.warning.has_value());

    REQUIRE_FALSE(p5_alpha_row(1, 0, Rat(0)).warning.has_value());
    REQUIRE_FALSE(p5_alpha_row(1, 0, Rat(1)).warning.has_value());
    REQUIRE(p5_alpha_row(1, 0, Rat(9, 8)).warning.has_value());
    REQUIRE(p5_alpha_row(1, 0, Rat(-1, 8)).warning.has_value());
    REQUIRE_FALSE(p5_alpha_row(3, 1, Rat(1, 2)).warning.has_value());
    REQUIRE(p5_alpha_row(3, 1, Rat(2, 3)).warning.has_value());
  }

  SECTION("every row sums to one, in and out of the printed range") {
    for (std::size_t n : {1u, 2u, 3u}) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (const Rat& a0 : {Rat(0), Rat(1, 7), Rat(2)}) {
          for (std::size_t idx = 0; idx < p5_arrangements(n, k).size(); ++idx) {
            SeedRow row = p5_alpha_row(n, k, a0, idx);
            REQUIRE(row.params.size() == 2 * n + 2);
            REQUIRE(row.params.sum() == Rat(1));
          }
        }
      }
    }
  }

  SECTION("rejections") {
    REQUIRE_THROWS_AS(p5_arrangements(0, 0), UnsupportedSystem);
    REQUIRE_THROWS_AS(p5_arrangements(2, 3), RowOutOfRange);
    REQUIRE_THROWS_AS(p5_alpha_row(2, 3, Rat(0)), RowOutOfRange);
    REQUIRE_THROWS_AS(p5_alpha_row(1, 0, Rat(1, 4), Arrangement{1, 1}), InvalidArrangement);
    REQUIRE_THROWS_AS(p5_alpha_row(1, 0, Rat(1, 4), std::size_t{1}), InvalidArrangement);
  }
}

TEST_CASE("constant candidates for the even-size system") {
  auto spec = [](Rat c0, Rat c1) {
    return SystemSpec{.kind = SystemKind::P5Symmetric, .n = 1, .c0 = c0, .c1 = c1};
  };

  SECTION("frozen table-row candidate") {
    auto s = p5_constant_seed(spec(Rat(1), Rat(2)), ParamVector{{Rat(1, 4), Rat(3, 4), Rat(0), Rat(0)}});
    REQUIRE(s.has_value());
    REQUIRE(s->components[0] == RatFunc(1));
    REQUIRE(s->components[1] == RatFunc(2));
    REQUIRE(s->components[2].is_zero());
    REQUIRE(s->components[3].is_zero());
    REQUIRE(is_exact_solution(*s));
  }

  SECTION("all rows of small tables admit the constant candidate away from the endpoints") {
    for (std::size_t n : {1u, 2u}) {
      SystemSpec sys{.kind = SystemKind::P5Symmetric, .n = n, .c0 = Rat(1), .c1 = Rat(1)};
      for (std::size_t k = 0; k <= n; ++k) {
        Rat mid(1, static_cast<long>(2 * (k + 1)));  // midpoint of [0, 1/(k+1)]
        for (std::size_t idx = 0; idx < p5_arrangements(n, k).size(); ++idx) {
          SeedRow row = p5_alpha_row(n, k, mid, idx);
          auto s = p5_constant_seed(sys, row.params);
          REQUIRE(s.has_value());
          REQUIRE(is_exact_solution(*s));
        }
      }
    }
  }

  SECTION("vanishing parity sums are refused") {
    REQUIRE_THROWS_AS(p5_constant_seed(spec(Rat(1), Rat(1)), ParamVector{{Rat(0), Rat(1), Rat(0), Rat(0)}}),
                      ZeroA);
    REQUIRE_THROWS_AS(p5_constant_seed(spec(Rat(1), Rat(1)), ParamVector{{Rat(1), Rat(0), Rat(0), Rat(0)}}),
                      ZeroA);
    // Row k=n at either endpoint of the tabulated range hits a vanishing sum.
    REQUIRE_THROWS_AS(p5_constant_seed(spec(Rat(1), Rat(1)), p5_alpha_row(1, 1, Rat(0)).params),
                      ZeroA);
    REQUIRE_THROWS_AS(p5_constant_seed(spec(Rat(1), Rat(1)), p5_alpha_row(1, 1, Rat(1, 2)).params),
                      ZeroA);
  }

  SECTION("the formula is checked, not assumed: off-table parameters can fail") {
    auto s = p5_constant_seed(spec(Rat(1), Rat(1)), ParamVector{{Rat(1, 4), Rat(1, 2), Rat(1, 4), Rat(0)}});
    REQUIRE_FALSE(s.has_value());
  }

  SECTION("wrong system kind and bad arity are rejected") {
    SystemSpec p4{.kind = SystemKind::P4Symmetric, .n = 3};
    REQUIRE_THROWS_AS(p5_constant_seed(p4, ParamVector{{Rat(1), Rat(0), Rat(0)}}), UnsupportedSystem);
    REQUIRE_THROWS_AS(p5_constant_seed(spec(Rat(1), Rat(1)), ParamVector{{Rat(1), Rat(0)}}),
                      ArityMismatch);
  }
}
