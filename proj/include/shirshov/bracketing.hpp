// Shirshov bracketing of regular words (words strictly greater than all of
// their proper rotations).

#ifndef SHIRSHOV_BRACKETING_HPP
#define SHIRSHOV_BRACKETING_HPP

#include <memory>
#include <string>
#include <vector>

#include "shirshov/words.hpp"

namespace shirshov {

// Immutable binary tree whose leaves are letters; the frontier is word().
class BracketedWord {
 public:
  static BracketedWord leaf(const Word& letter);
  static BracketedWord join(const BracketedWord& left, const BracketedWord& right);

  const Word& word() const noexcept { return word_; }
  bool is_leaf() const noexcept { return left_ == nullptr; }
  const BracketedWord& left() const { return *left_; }
  const BracketedWord& right() const { return *right_; }

  // "[b]" for a leaf, "[" + left + right + "]" otherwise.
  std::string to_string() const;

  friend bool operator==(const BracketedWord& a, const BracketedWord& b);

 private:
  BracketedWord(Word word, std::shared_ptr<const BracketedWord> left, std::shared_ptr<const BracketedWord> right);

  Word word_;
  std::shared_ptr<const BracketedWord> left_;
  std::shared_ptr<const BracketedWord> right_;
};

// Splits recursively at the longest proper regular suffix.  Throws
// std::invalid_argument when w is not regular.
BracketedWord shirshov_bracketing(const Word& w);

// The order used by the second bracketing condition: v <= w iff v is less at
// the first difference, or w is a prefix of v.
bool bracket_order_leq(const Word& v, const Word& w);

// Checks both conditions at every node: children of a node are regular, and
// for [[v1][v2]][w] we have v2 <= w.
bool satisfies_bracketing_conditions(const BracketedWord& b);

}  // namespace shirshov

#endif  // SHIRSHOV_BRACKETING_HPP
