// Selective heights: how many disjoint high powers of short primitive
// periods a word carries.

#ifndef SHIRSHOV_SELECTIVE_HPP
#define SHIRSHOV_SELECTIVE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "shirshov/words.hpp"

namespace shirshov {

// An occurrence of root^{exponent} at [begin, end).
struct PeriodicFactor {
  std::size_t begin;
  std::size_t end;
  Word root;
};

// Largest set of pairwise disjoint factors z^m, z primitive with
// |z| = period_len and m > k, whose periods are pairwise non-conjugate.
// `chosen` receives one optimal selection when non-null.
std::size_t small_selective_height(const Word& w, std::size_t period_len, std::size_t k,
                                   std::vector<PeriodicFactor>* chosen = nullptr);

// Largest left-to-right sequence of pairwise disjoint factors z^m (z
// primitive, |z| = period_len, m > k) in which each factor is followed,
// before the next one starts, by a gap of more than n letters that differs
// from the periodic continuation of the previous period.
std::size_t large_selective_height(const Word& w, std::size_t period_len, std::size_t k, std::size_t n,
                                   std::vector<PeriodicFactor>* chosen = nullptr);

// Edges over the vertices 1..l joined in the big steps i = 2..l-2^{n-1}+1:
// with v_0 = i and v_r = 2^{n-2} + ... + 2^{n-1-r} + i, row r (1 <= r <=
// n-3) joins v_0..v_{r-1} to v_r.  Throws std::invalid_argument unless
// n >= 4 and l > 2^{n-1}, and std::logic_error if an edge repeats.
std::vector<std::pair<std::size_t, std::size_t>> lower_bound_witness_edges(std::size_t n, std::size_t l);

}  // namespace shirshov

#endif  // SHIRSHOV_SELECTIVE_HPP
