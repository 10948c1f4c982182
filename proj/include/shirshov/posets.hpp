// Finite posets, Dilworth decompositions and the census of posets cut out by
// two linear orders.

#ifndef SHIRSHOV_POSETS_HPP
#define SHIRSHOV_POSETS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shirshov/permutation.hpp"

namespace shirshov {

// Strict order on the points 0..n-1.
class FinitePoset {
 public:
  // less[i][j] means i < j.  Throws std::invalid_argument unless the
  // relation is irreflexive, antisymmetric and transitive.
  FinitePoset(std::size_t n, std::vector<std::vector<bool>> less);

  // Transitive closure of the given pairs (a, b) meaning a < b.
  static FinitePoset from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return less_[i][j] || less_[j][i]; }

  // Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  // Line-oriented exchange text: the size, then one "a b" covering pair per
  // line, 1-based.  Blank lines and '#' comments are ignored when parsing.
  std::string to_text() const;
  static FinitePoset parse_text(const std::string& text);

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::size_t n_;
  std::vector<std::vector<bool>> less_;
};

struct Antichain {
  std::size_t size;
  std::vector<std::size_t> elements;
};

// Through the Konig vertex cover of the comparability bipartite graph.
Antichain max_antichain(const FinitePoset& p);

// Exhaustive over subsets; n <= 24.
Antichain max_antichain_bruteforce(const FinitePoset& p);

// Minimum chain partition from a maximum matching; chains are listed bottom
// up and sorted by their least element.  The size equals max_antichain.
std::vector<std::vector<std::size_t>> min_chain_cover(const FinitePoset& p);

// i < j iff i < j as positions and pi(i) < pi(j).
FinitePoset permutation_poset(const Permutation& pi);

// Intersection of two linear orders given as rank vectors (rank[i] is the
// position of point i, bottom first).
FinitePoset intersect_linear_orders(const std::vector<std::size_t>& rank1, const std::vector<std::size_t>& rank2);

// Relabeling-invariant encoding.  Points are ordered by (height, depth,
// down-degree, up-degree) and ties are broken by trying every order within
// each block; the least adjacency string wins.
std::string canonical_form(const FinitePoset& p);
bool isomorphic(const FinitePoset& a, const FinitePoset& b);

struct PermutationPosetCensus {
  std::size_t n;
  // Indexed by k = 0..n.
  std::vector<std::uint64_t> classes;       // isomorphism classes
  std::vector<std::uint64_t> permutations;  // labeled count
};

// n <= 7.
PermutationPosetCensus permutation_poset_census(std::size_t n);

// Isomorphism classes of permutation posets on n points with maximum
// antichain exactly k.  Throws std::logic_error if the count exceeds
// epsilon_bound(n, k).
std::uint64_t count_permutation_posets(std::size_t n, std::size_t k);

// min{k^{2n}/(k!)^2, (n-k+1)^{2n}/((n-k)!)^2}.
boost::multiprecision::cpp_rational epsilon_bound(std::size_t n, std::size_t k);

// Three chains of sizes 3, 5, 7 realised by two different pairs of linear
// orders.
struct NonInjectivityDemo {
  FinitePoset poset;
  // Each linear order is listed top first as point indices 0..14.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> first;
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> second;
  bool first_generates;
  bool second_generates;
  bool pairs_isomorphic;
};

NonInjectivityDemo non_injectivity_demo();

// True iff some bijection carries the orders of a onto those of b, either
// in place or swapped.
bool linear_order_pairs_isomorphic(const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>& a,
                                   const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>& b);

}  // namespace shirshov

#endif  // SHIRSHOV_POSETS_HPP
