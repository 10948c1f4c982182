// Iterated removal of long periodic fragments z^{4n+r1+r2}.

#ifndef SHIRSHOV_FRAGMENTS_HPP
#define SHIRSHOV_FRAGMENTS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "shirshov/words.hpp"

namespace shirshov {

struct Fragment {
  Word root;              // primitive
  std::size_t exponent;   // at least 4n
  std::size_t start;      // in the word the fragment was cut from
  // Positions of the fragment in the original word, increasing.
  std::vector<std::size_t> original_positions;
  // Number of maximal runs of consecutive original positions.
  std::size_t pieces;

  Word word() const { return root.power(exponent); }
};

struct FragmentDecomposition {
  Word original;
  std::vector<Fragment> fragments;
  // residues[0] is the original word, residues[k] the word after k cuts.
  std::vector<Word> residues;

  // Reinserts the fragments in reverse order.
  Word reconstruct() const;

  // s(k) over the first `count` fragments (all when count exceeds the
  // number of fragments), keyed by the number of pieces k.
  std::map<std::size_t, std::size_t> tallies(std::size_t count) const;
};

// Repeatedly finds a primitive z with z^{4n} in the current word (shortest
// z, leftmost), extends it by whole periods on both sides and cuts it out,
// until no such power remains or max_steps cuts were made.
FragmentDecomposition extract_periodic_fragments(const Word& w, std::size_t n, std::size_t max_steps);

}  // namespace shirshov

#endif  // SHIRSHOV_FRAGMENTS_HPP
