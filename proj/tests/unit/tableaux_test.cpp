#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "shirshov/tableaux.hpp"

using namespace shirshov;

namespace {

using Rows = std::vector<std::vector<std::size_t>>;

// Row insertion written out directly: bump the leftmost entry larger than x.
Rows naive_insert(Rows rows, std::size_t x) {
  for (auto& row : rows) {
    std::size_t c = 0;
    while (c < row.size() && row[c] < x) ++c;
    if (c == row.size()) {
      row.push_back(x);
      return rows;
    }
    std::swap(row[c], x);
  }
  rows.push_back({x});
  return rows;
}

}  // namespace

TEST_CASE("Schensted insertion") {
  auto [t1, c1] = schensted_insert(Tableau(Rows{{1, 2}}), 3);
  CHECK(t1.rows() == Rows{{1, 2, 3}});
  CHECK(c1 == Cell{1, 3});
  auto [t2, c2] = schensted_insert(Tableau(Rows{{2}}), 1);
  CHECK(t2.rows() == Rows{{1}, {2}});
  CHECK(c2 == Cell{2, 1});
  auto [t3, c3] = schensted_insert(Tableau(Rows{{1, 3}, {4}}), 2);
  CHECK(t3.rows() == naive_insert(Rows{{1, 3}, {4}}, 2));
  CHECK(t3.rows() == Rows{{1, 2}, {3}, {4}});
  CHECK(c3 == Cell{3, 1});
  CHECK_THROWS_AS(Tableau(Rows{{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Tableau(Rows{{1, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("insertion matches the direct simulator on every permutation of 6") {
  for (const Permutation& pi : all_permutations(6)) {
    Rows expect;
    for (std::size_t i = 0; i < pi.size(); ++i) expect = naive_insert(expect, pi[i]);
    CHECK(rsk(pi).P.rows() == expect);
  }
}

TEST_CASE("RSK examples") {
  const auto id = rsk(Permutation::identity(3));
  CHECK(id.P.rows() == Rows{{1, 2, 3}});
  CHECK(id.Q.rows() == Rows{{1, 2, 3}});
  const auto r = rsk(Permutation::parse("2 1 3"));
  CHECK(r.P.rows() == Rows{{1, 3}, {2}});
  CHECK(r.Q.rows() == Rows{{1, 3}, {2}});
  CHECK(rsk_inverse(Tableau(Rows{{1, 2, 3}}), Tableau(Rows{{1, 2, 3}})) == Permutation::identity(3));
  CHECK(rsk_inverse(Tableau(Rows{{1, 3}, {2}}), Tableau(Rows{{1, 3}, {2}})) == Permutation::parse("2 1 3"));
  CHECK_THROWS_AS(rsk_inverse(Tableau(Rows{{1, 2}}), Tableau(Rows{{1}, {2}})), std::invalid_argument);
}

TEST_CASE("rows of P equal the longest decreasing subsequence") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Permutation& pi : all_permutations(n)) {
      const auto r = rsk(pi);
      CHECK(r.P.rows().size() == oracle::longest_decreasing(pi.values()));
      CHECK(r.P.rows()[0].size() == longest_increasing_subsequence(pi));
      CHECK(r.P.shape() == r.Q.shape());
    }
  }
}

TEST_CASE("forward insertion of words with repeats") {
  const auto [P, Q] = rsk_forward_word({2, 1, 2, 1});
  CHECK(P == Rows{{1, 1}, {2, 2}});
  CHECK(Q.rows() == Rows{{1, 3}, {2, 4}});
}

TEST_CASE("hook formula") {
  CHECK(hook_count(Shape({4})) == 1);
  CHECK(hook_count(Shape({2, 1})) == 2);
  CHECK(hook_count(Shape({3, 2})) == 5);
  CHECK(hook_count(Shape({3, 3})) == 5);
  CHECK_THROWS_AS(Shape({1, 2}), std::invalid_argument);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    for (const Shape& s : shapes_of_order(n, n)) sum += hook_count(s) * hook_count(s);
    CHECK(sum == fact);
  }
}

TEST_CASE("tableaux with few rows") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(count_tableaux_max_rows(n, 1) == 1);
  CHECK(count_tableaux_max_rows(3, 2) == 3);
  // Involutions of 5 are counted by all standard tableaux.
  CHECK(count_tableaux_max_rows(5, 5) == 26);
}

TEST_CASE("permutations with bounded decreasing subsequences") {
  const std::vector<std::uint64_t> catalan{1, 2, 5, 14, 42, 132, 429, 1430};
  const std::vector<std::uint64_t> three{1, 2, 6, 23, 103, 513, 2761, 15767};
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(xi_count(n, 2, XiMethod::tableaux) == catalan[n - 1]);
    CHECK(xi_count(n, 3, XiMethod::closed3) == three[n - 1]);
  }
  CHECK(xi_count(4, 2, XiMethod::enumerate) == 14);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const std::uint64_t o = oracle::xi(n, k);
      CHECK(xi_count(n, k, XiMethod::enumerate) == o);
      CHECK(xi_count(n, k, XiMethod::tableaux) == o);
      CHECK(xi_count(n, k, XiMethod::genfun) == o);
    }
  }
  CHECK_THROWS_AS(xi_count(4, 2, XiMethod::closed3), std::invalid_argument);
  CHECK_THROWS_AS(parse_xi_method("guess"), std::invalid_argument);
}

TEST_CASE("closed form terms for three rows") {
  const auto t = xi3_terms(2);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == boost::multiprecision::cpp_rational(-1, 6));
  CHECK(t[1] == 0);
  CHECK(t[2] == boost::multiprecision::cpp_rational(7, 6));
}

TEST_CASE("multilinear words") {
  CHECK(multilinear_word_count(4, 4, 2) == 14);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(multilinear_word_count(5, 1, k) == 5);
  CHECK(multilinear_word_count(6, 3, 3) == 20 * 6);
}
