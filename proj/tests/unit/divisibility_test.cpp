#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shirshov/bounds.hpp"
#include "shirshov/divisibility.hpp"

using namespace shirshov;

namespace {

Word W(const std::string& s, std::size_t l = 3) { return Word::parse(s, Alphabet(l)); }

}  // namespace

TEST_CASE("ordinary division of a decreasing word") {
  const Word w = W("cba");
  const auto d = is_n_divisible(w, 3, DivisibilitySense::ordinary);
  REQUIRE(d);
  REQUIRE(d->blocks.size() == 3);
  CHECK(w.substr(d->blocks[0].begin, 1) == W("c"));
  CHECK(w.substr(d->blocks[1].begin, 1) == W("b"));
  CHECK(w.substr(d->blocks[2].begin, 1) == W("a"));
  CHECK(validate_witness(w, *d));
  CHECK_FALSE(is_n_divisible(W("aaaa"), 2, DivisibilitySense::ordinary));
}

TEST_CASE("ordinary divisibility agrees with exhaustive splitting") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& s : oracle::all_strings(2, len)) {
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto got = is_n_divisible(W(s, 2), n, DivisibilitySense::ordinary);
        CHECK(got.has_value() == oracle::ordinary_divisible(s, n));
        if (got) CHECK(validate_witness(W(s, 2), *got));
      }
    }
  }
}

TEST_CASE("tail divisibility agrees with exhaustive position choice") {
  const auto baca = is_n_divisible(W("baca"), 2, DivisibilitySense::tail);
  REQUIRE(baca);
  CHECK(validate_witness(W("baca"), *baca));
  for (std::size_t len = 0; len <= 7; ++len) {
    for (const auto& s : oracle::all_strings(3, len)) {
      for (std::size_t n = 2; n <= 3; ++n) {
        CHECK(is_n_divisible(W(s), n, DivisibilitySense::tail).has_value() ==
              oracle::tail_divisible(s, n, s.size()));
        const auto limited = is_n_divisible(W(s), n, DivisibilitySense::tail, std::nullopt, 2);
        CHECK(limited.has_value() == oracle::tail_divisible(s, n, s.size() / 2));
      }
    }
  }
}

TEST_CASE("strong division needs distinct primitive roots") {
  const auto powers = primitive_powers(Alphabet(2), 1, 2);
  REQUIRE(powers.size() == 2);
  const Word w = W("bbaa", 2);
  const auto d = is_n_divisible(w, 2, DivisibilitySense::strong, powers);
  REQUIRE(d);
  CHECK(validate_witness(w, *d, powers));
  CHECK_FALSE(is_n_divisible(W("bbabbaa", 2), 3, DivisibilitySense::strong, powers));
  CHECK_THROWS_AS(is_n_divisible(w, 2, DivisibilitySense::strong), std::invalid_argument);
}

TEST_CASE("primitive powers") {
  const auto p = primitive_powers(Alphabet(2), 3, 2);
  CHECK(p.size() == 6);
  for (const Word& z : p) CHECK(z.size() == 6);
}

TEST_CASE("reducibility") {
  CHECK(is_nd_reducible(W("abab"), 3, 2));
  CHECK(is_nd_reducible(W("cba"), 3, 2));
  // a.b.a is a 2-division, so aba is reducible.
  CHECK(is_nd_reducible(W("aba"), 2, 2));
  CHECK(oracle::nd_reducible("aba", 2, 2));
  CHECK_FALSE(is_nd_reducible(W("ab"), 2, 2));
}

TEST_CASE("non-reducible oracle matches enumeration") {
  struct Case {
    std::size_t n, d, l, length;
    std::string witness;
  };
  const std::vector<Case> cases{
      {2, 2, 2, 2, "ab"}, {2, 3, 2, 4, "aabb"}, {3, 2, 2, 3, "aba"}, {3, 3, 2, 13, "aabaababbabba"},
      {2, 3, 1, 2, "aa"}, {3, 2, 1, 1, "a"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.d);
    CAPTURE(c.l);
    const auto r = max_nonreducible_length(c.n, c.d, c.l);
    const auto o = oracle::max_nonreducible(c.n, c.d, c.l);
    CHECK(o.length == c.length);
    CHECK(o.least == c.witness);
    CHECK(r.length == o.length);
    CHECK(r.witness.to_string() == o.least);
    CHECK(BigInt(r.length) < r.psi);
    CHECK(BigInt(r.length) < r.psi_log2);
  }
}

TEST_CASE("non-reducible oracle respects its budget") {
  CHECK_THROWS_AS(max_nonreducible_length(3, 3, 3, 100), BudgetExceeded);
}

TEST_CASE("process lemma optimum") {
  const auto a = max_process_sequence_length(2, 2);
  CHECK(a.length == 1);
  const auto b = max_process_sequence_length(2, 3);
  CHECK(b.length == 3);
  CHECK(b.as_words(3) == std::vector<std::string>{"01", "10", "01"});
  CHECK(process_condition_holds(b.ones, 2, 3));
  const auto c = max_process_sequence_length(3, 2);
  CHECK(c.length == 2);
  CHECK(max_process_sequence_length(2, 4).length == oracle::max_process(2, 4));
  CHECK_FALSE(process_condition_holds({1, 1}, 2, 3));
}

TEST_CASE("bound evaluators") {
  CHECK(upsilon_bound(3, 2) == 8748);
  CHECK(upsilon_coding_bound(2, 1) == 1024);
  // Exact exponents for n = 3 and 9; at n = 4 only the ceilings differ.
  CHECK(phi_bound(3, 2) == 2 * phi_bound(3, 1));
  CHECK(phi_bound(9, 2) == 2 * phi_bound(9, 1));
  CHECK(phi_bound(4, 2) <= 2 * phi_bound(4, 1));
  CHECK(phi_bound(4, 2) >= 2 * phi_bound(4, 1) - 1);
  CHECK(p_nd(3, 3) == 72);
  CHECK(p_nd(1, 3) == 27);
  CHECK(q_n(5) == 4);
  CHECK(beth_bound(PeriodFamily::two, 2, 3) == 3);
  CHECK(beth_bound(PeriodFamily::three, 2, 3) == 6);
  CHECK(beth_bound(PeriodFamily::degree_minus_one, 3, 4) == 3);
  CHECK(alpha_lower(4, 10) == 2);
  // nd = 27: log_3 27 = 3 and log_3 log_3 27 = 1.
  CHECK(psi_bound({3, 9, 1}) == (BigInt(1) << 27) * boost::multiprecision::pow(BigInt(27), 3 * 3 + 9 + 36));
  CHECK(psi_log2_bound({2, 2, 1}) == BigInt(256) * 4 * boost::multiprecision::pow(BigInt(4), 2 * 2 + 10));
  // nd = 9: 9^{9 log_3 2} = 2^18.
  CHECK(psi_bound({3, 3, 1}) ==
        (BigInt(1) << 27) * boost::multiprecision::pow(BigInt(9), 3 * 2 + 36) * (BigInt(1) << 18));
  CHECK_THROWS_AS(psi_bound({1, 2, 2}), std::invalid_argument);
  CHECK(exact_log(3, 27) == 3u);
  CHECK_FALSE(exact_log(3, 10));
  CHECK(ceil_log(3, 10) == 3);
}

TEST_CASE("irrational exponents round up consistently") {
  const BigInt a = psi_log2_bound({2, 3, 1});
  const BigInt b = psi_log2_bound({2, 3, 2});
  CHECK(a > 0);
  CHECK(a < b);
  CHECK(b <= 2 * a);
}
