// Dilworth coloring of the tails of a word and the snapshot tuples of the
// most recent tail of every color.

#ifndef SHIRSHOV_TAIL_COLORING_HPP
#define SHIRSHOV_TAIL_COLORING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "shirshov/words.hpp"

namespace shirshov {

class TailColoring {
 public:
  TailColoring(Word host, std::size_t selected, std::vector<std::vector<std::size_t>> chains);

  const Word& host() const noexcept { return host_; }
  // Tails starting at 0..selected()-1 are colored.
  std::size_t selected() const noexcept { return selected_; }
  // Start positions, left to right, each chain increasing lexicographically.
  const std::vector<std::vector<std::size_t>>& chains() const noexcept { return chains_; }
  std::size_t colors() const noexcept { return chains_.size(); }
  std::size_t color_of(std::size_t start) const { return color_.at(start); }

  // For every color, in chain order, the first p letters of the latest tail
  // of that color starting at or before i; theta when there is none yet.
  std::vector<WordOrTheta> snapshot(std::size_t p, std::size_t i) const;

 private:
  Word host_;
  std::size_t selected_;
  std::vector<std::vector<std::size_t>> chains_;
  std::vector<std::size_t> color_;
};

// Minimum chain cover of the tails starting in the first floor(|w|/d)
// positions (all positions without d), ordered by u < v iff u starts left of
// v and u is lexicographically less.  Throws std::invalid_argument when two
// selected tails are incomparable and require_comparable is set, and
// std::length_error when more than cap chains are needed.
TailColoring dilworth_tail_coloring(const Word& w, std::size_t cap, std::optional<std::size_t> d = std::nullopt,
                                    bool require_comparable = true);

// Longest run of consecutive positions over which snapshot(p, .) is constant.
std::size_t snapshot_stability(const TailColoring& tc, std::size_t p);

}  // namespace shirshov

#endif  // SHIRSHOV_TAIL_COLORING_HPP
