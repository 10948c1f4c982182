// Classes X(t, l) of word-cycles and the letter recodings that move between
// period lengths and alphabet sizes.

#ifndef SHIRSHOV_CODING_HPP
#define SHIRSHOV_CODING_HPP

#include <cstddef>
#include <vector>

#include "shirshov/words.hpp"

namespace shirshov {

// Numbered, pairwise non-conjugate primitive word-cycles of one length t.
// Each cycle is stored as the word whose first letter is position 1.
class CodingClass {
 public:
  // Throws std::invalid_argument on mixed lengths or alphabets, a
  // non-primitive cycle, or two conjugate cycles.
  CodingClass(Alphabet alphabet, std::size_t t, std::vector<Word> cycles);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return t_; }
  const std::vector<Word>& cycles() const noexcept { return cycles_; }

  // The length-t word starting at position j (0-based) of cycle i.
  Word word(std::size_t i, std::size_t j) const { return cycles_[i].rotated(j); }

 private:
  Alphabet alphabet_;
  std::size_t t_;
  std::vector<Word> cycles_;
};

// Largest antichain of the order u < v iff u is lexicographically less and
// its cycle has the smaller number.
std::size_t max_coding_antichain(const CodingClass& c);

// No antichain of size n.
bool is_n_light(const CodingClass& c, std::size_t n);

// Replaces the letter pairs at positions (2q + offset, 2q + 1 + offset),
// cyclically, by b_{i,j} = (i-1) l + j over l^2 letters.  Throws
// std::invalid_argument on odd length.
Word recode_word_pairs(const Word& w, std::size_t offset = 0);
CodingClass recode_pairs(const CodingClass& c, std::size_t offset = 0);

// Shifts every letter up by one, making 1 the new least letter, and pads
// each cycle with it to length 2^s.  Throws std::invalid_argument when
// 2^s < t.
CodingClass pad_to_power_of_two(const CodingClass& c, std::size_t s);

// All classes with cycles of length t over l letters: every ordered
// selection of distinct conjugacy classes, each in every rotation.
std::vector<CodingClass> all_coding_classes(std::size_t t, std::size_t l, std::size_t max_cycles);

}  // namespace shirshov

#endif  // SHIRSHOV_CODING_HPP
