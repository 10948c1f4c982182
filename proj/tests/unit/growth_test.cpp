#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "shirshov/growth.hpp"
#include "shirshov/morphisms.hpp"

using namespace shirshov;

namespace {

MonomialAlgebraSpec spec(std::size_t l, const std::vector<std::string>& forbidden) {
  std::vector<Word> f;
  for (const auto& s : forbidden) f.push_back(Word::parse(s, Alphabet(l)));
  return MonomialAlgebraSpec(Alphabet(l), f);
}

}  // namespace

TEST_CASE("algebra spec parsing and reduction") {
  const auto s = MonomialAlgebraSpec::parse("# two letters\n2\nba\nbab\n");
  CHECK(s.alphabet().size() == 2);
  REQUIRE(s.forbidden().size() == 1);
  CHECK(s.forbidden()[0] == Word::parse("ba", Alphabet(2)));
  CHECK(s.window() == 1);
  CHECK_FALSE(s.allowed(Word::parse("aba", Alphabet(2))));
  CHECK(s.allowed(Word::parse("aabb", Alphabet(2))));
  CHECK_THROWS_AS(MonomialAlgebraSpec::parse("x\nab\n"), std::invalid_argument);
  CHECK_THROWS_AS(MonomialAlgebraSpec::parse(""), std::invalid_argument);
}

TEST_CASE("growth function against direct enumeration") {
  const std::vector<MonomialAlgebraSpec> specs{
      spec(2, {}), spec(2, {"ba"}), spec(2, {"aa", "bb"}), spec(2, {"aa", "ab", "ba"}), spec(3, {"ab", "cc", "bcb"}),
      spec(2, {"aaa", "bab"}),
  };
  for (const auto& s : specs) {
    const auto fast = growth_function(s, 14);
    const auto slow = growth_function_direct(s, 14);
    CHECK(fast == slow);
  }
}

TEST_CASE("quadratic growth of b-before-a") {
  const auto s = spec(2, {"ba"});
  const auto v = growth_function(s, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(v[n] == BigCount((n + 1) * (n + 2) / 2));
  const auto g = classify_growth(s);
  CHECK_FALSE(g.exponential);
  CHECK(g.degree == 2);
  CHECK(std::abs(gk_dimension_estimate(s, 200) - 2.0) < 0.35);
}

TEST_CASE("growth classification") {
  CHECK(classify_growth(spec(2, {})).exponential);
  const auto lin = classify_growth(spec(2, {"aa", "ab", "ba"}));
  CHECK_FALSE(lin.exponential);
  CHECK(lin.degree == 1);
  const auto alt = spec(2, {"aa", "bb"});
  CHECK_FALSE(classify_growth(alt).exponential);
  CHECK(classify_growth(alt).degree == 1);
  CHECK(std::abs(gk_dimension_estimate(alt, 200) - 1.0) < 0.35);
  const auto fin = classify_growth(spec(2, {"a", "bb"}));
  CHECK_FALSE(fin.exponential);
  CHECK(fin.degree == 0);
  CHECK(gk_dimension_estimate(spec(2, {}), 64) > gk_dimension_estimate(spec(2, {}), 16));
}

TEST_CASE("factor complexity and balance") {
  const Word fib = fibonacci_morphism().iterate(1, 10);
  const auto p = complexity_function(fib, 15);
  REQUIRE(p.size() == 15);
  for (std::size_t n = 1; n <= 15; ++n) CHECK(p[n - 1] == n + 1);
  CHECK(is_balanced(fib.substr(0, 60)));
  CHECK_FALSE(is_balanced(Word::parse("aabb")));
}

TEST_CASE("mechanical words") {
  // Slope 2/5, intercept 0: floor(2(n+1)/5) - floor(2n/5) for n = 0..9.
  CHECK(mechanical_word(2, 5, 0, 1, 10) == Word::parse("aababaabab", Alphabet(2)));
  CHECK(is_balanced(mechanical_word(3, 7, 1, 3, 40)));
  CHECK(complexity_function(mechanical_word(2, 5, 0, 1, 40), 3) == std::vector<std::size_t>{2, 3, 4});
}
