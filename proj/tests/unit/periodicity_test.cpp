#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shirshov/bounds.hpp"
#include "shirshov/divisibility.hpp"
#include "shirshov/fragments.hpp"
#include "shirshov/height.hpp"
#include "shirshov/selective.hpp"
#include "shirshov/tail_coloring.hpp"

using namespace shirshov;

namespace {

Word W(const std::string& s, std::size_t l = 3) { return Word::parse(s, Alphabet(l)); }

Word random_word(std::mt19937_64& rng, std::size_t l, std::size_t len) {
  std::vector<Letter> v(len);
  for (auto& x : v) x = static_cast<Letter>(1 + rng() % l);
  return Word(Alphabet(l), v);
}

// Height by trying every factorisation into powers of elements of Y.
std::optional<std::size_t> naive_height(const Word& w, const std::vector<Word>& Y) {
  std::optional<std::size_t> best;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t pos, std::size_t used) {
    if (pos == w.size()) {
      if (!best || used < *best) best = used;
      return;
    }
    for (const Word& y : Y) {
      for (std::size_t k = 1; pos + k * y.size() <= w.size(); ++k) {
        if (w.substr(pos, k * y.size()) != y.power(k)) break;
        go(pos + k * y.size(), used + 1);
      }
    }
  };
  go(0, 0);
  return best;
}

}  // namespace

TEST_CASE("Dilworth coloring of tails") {
  CHECK(dilworth_tail_coloring(W("abc"), 5).colors() == 1);
  CHECK(dilworth_tail_coloring(W("cba"), 5).colors() == 3);
  CHECK_THROWS_AS(dilworth_tail_coloring(W("cba"), 2), std::length_error);
  CHECK_THROWS_AS(dilworth_tail_coloring(W("aaaa"), 5), std::invalid_argument);
  const auto loose = dilworth_tail_coloring(W("aaaa"), 5, std::nullopt, false);
  CHECK(loose.colors() == 4);
  CHECK(dilworth_tail_coloring(W("cbacba"), 6, 2).selected() == 3);
}

TEST_CASE("coloring chains increase in position and order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Word w = random_word(rng, 3, 12);
    const auto tc = dilworth_tail_coloring(w, 12, std::nullopt, false);
    for (const auto& chain : tc.chains()) {
      for (std::size_t i = 1; i < chain.size(); ++i) {
        CHECK(chain[i - 1] < chain[i]);
        CHECK(lex_less(w.substr(chain[i - 1]), w.substr(chain[i])));
      }
    }
  }
}

TEST_CASE("snapshot stability") {
  const auto inc = dilworth_tail_coloring(W("aaaab", 2), 4);
  CHECK(inc.colors() == 1);
  CHECK(snapshot_stability(inc, 2) == 3);
  CHECK(snapshot_stability(dilworth_tail_coloring(W("abcd", 4), 4), 4) == 1);
  const auto s = inc.snapshot(2, 0);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == W("aa", 2));
}

TEST_CASE("snapshot stability never grows with the snapshot length") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = random_word(rng, 2, 14);
    const auto tc = dilworth_tail_coloring(w, 14, std::nullopt, false);
    for (std::size_t p = 1; p < 8; ++p) CHECK(snapshot_stability(tc, p + 1) <= snapshot_stability(tc, p));
  }
}

TEST_CASE("periodic fragment extraction") {
  const std::size_t n = 2;
  const Word ab = W("ab", 2).power(8 * n);
  const auto one = extract_periodic_fragments(ab, n, 10);
  REQUIRE(one.fragments.size() == 1);
  CHECK(one.fragments[0].root == W("ab", 2));
  CHECK(one.tallies(10) == std::map<std::size_t, std::size_t>{{1, 1}});
  CHECK(one.residues.back().empty());
  const auto none = extract_periodic_fragments(W("abcabc"), 2, 10);
  CHECK(none.fragments.empty());
  REQUIRE(none.residues.size() == 1);
  CHECK(none.residues[0] == W("abcabc"));
}

TEST_CASE("fragment extraction reconstructs the word and tracks positions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Word w = random_word(rng, 2, 6) + W("ab", 2).power(9) + random_word(rng, 2, 3) + W("a", 2).power(10) +
             random_word(rng, 2, 4);
    const auto dec = extract_periodic_fragments(w, 2, 20);
    CHECK(dec.reconstruct() == w);
    CHECK(dec.residues.size() == dec.fragments.size() + 1);
    std::set<std::size_t> seen;
    for (const auto& f : dec.fragments) {
      CHECK(f.exponent >= 8);
      CHECK(is_primitive(f.root));
      REQUIRE(f.original_positions.size() == f.word().size());
      for (std::size_t i = 0; i < f.word().size(); ++i) {
        CHECK(w[f.original_positions[i]] == f.word()[i]);
        CHECK(seen.insert(f.original_positions[i]).second);
      }
    }
    CHECK_FALSE(find_period_power(dec.residues.back(), 8));
    CHECK_FALSE(dec.fragments.empty());
  }
}

TEST_CASE("small selective height") {
  const std::size_t k = 2;
  const Word w1 = W("ab").power(k + 1) + W("c") + W("ac").power(k + 1);
  std::vector<PeriodicFactor> chosen;
  CHECK(small_selective_height(w1, 2, k, &chosen) == 2);
  CHECK(chosen.size() == 2);
  const Word w2 = W("ab").power(k + 1) + W("c") + W("ba").power(k + 1);
  CHECK(small_selective_height(w2, 2, k) == 1);
  CHECK(small_selective_height(W("abcabc"), 2, k) == 0);
}

TEST_CASE("large selective height") {
  const std::size_t k = 2;
  CHECK(large_selective_height(W("ab").power(10 * k), 2, k, 2) == 1);
  const Word w = W("ab").power(k + 1) + W("cccc") + W("ac").power(k + 1);
  CHECK(large_selective_height(w, 2, k, 2) == 2);
  CHECK(large_selective_height(W("abcabc"), 2, k, 2) == 0);
}

TEST_CASE("lower-bound witness edges") {
  const auto e = lower_bound_witness_edges(4, 9);
  REQUIRE(e.size() == 1);
  CHECK(e[0] == std::pair<std::size_t, std::size_t>{2, 6});
  for (std::size_t n = 4; n <= 6; ++n) {
    for (std::size_t l = (std::size_t{1} << (n - 1)) + 1; l <= (std::size_t{1} << (n - 1)) + 5; ++l) {
      const auto edges = lower_bound_witness_edges(n, l);
      CHECK(BigInt(edges.size()) == alpha_lower(n, l));
      for (const auto& [a, b] : edges) {
        CHECK(a >= 1);
        CHECK(b <= l);
        CHECK(a < b);
      }
    }
  }
  CHECK_THROWS_AS(lower_bound_witness_edges(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_witness_edges(4, 8), std::invalid_argument);
}

TEST_CASE("height and essential height") {
  CHECK(word_height(W("ababab"), {W("ab")}) == 1u);
  CHECK(word_height(W("abba"), {W("ab"), W("b"), W("a")}) == 3u);
  CHECK_FALSE(word_height(W("abc"), {W("ab")}));
  CHECK(essential_height(W("abccab"), {W("c")}, 2) == 1u);
  CHECK(essential_height(W("abab"), {W("c")}, 4) == 0u);
  CHECK_FALSE(essential_height(W("abababab"), {W("c")}, 2));
  CHECK_THROWS_AS(word_height(W("ab"), {}), std::invalid_argument);
}

TEST_CASE("height agrees with exhaustive factorisation") {
  std::mt19937_64 rng(17);
  const std::vector<Word> Y{W("ab", 2), W("b", 2), W("aab", 2)};
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, 2, 1 + rng() % 10);
    CHECK(word_height(w, Y) == naive_height(w, Y));
  }
}
