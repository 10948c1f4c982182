#include "shirshov/bracketing.hpp"

#include <stdexcept>

namespace shirshov {

BracketedWord::BracketedWord(Word word, std::shared_ptr<const BracketedWord> left,
                             std::shared_ptr<const BracketedWord> right)
    : word_(std::move(word)), left_(std::move(left)), right_(std::move(right)) {}

BracketedWord BracketedWord::leaf(const Word& letter) {
  if (letter.size() != 1) throw std::invalid_argument("bracket leaf must be a single letter");
  return BracketedWord(letter, nullptr, nullptr);
}

BracketedWord BracketedWord::join(const BracketedWord& left, const BracketedWord& right) {
  return BracketedWord(left.word() + right.word(), std::make_shared<const BracketedWord>(left),
                       std::make_shared<const BracketedWord>(right));
}

std::string BracketedWord::to_string() const {
  if (is_leaf()) return "[" + word_.to_string() + "]";
  return "[" + left_->to_string() + right_->to_string() + "]";
}

bool operator==(const BracketedWord& a, const BracketedWord& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.word() == b.word();
  return a.left() == b.left() && a.right() == b.right();
}

BracketedWord shirshov_bracketing(const Word& w) {
  if (w.empty() || !is_regular(w)) throw std::invalid_argument("word is not regular: " + w.to_string());
  if (w.size() == 1) return BracketedWord::leaf(w);
  for (std::size_t split = 1; split < w.size(); ++split) {
    Word suffix = w.substr(split);
    if (is_regular(suffix)) {
      return BracketedWord::join(shirshov_bracketing(w.substr(0, split)), shirshov_bracketing(suffix));
    }
  }
  // The last letter is always a regular suffix.
  throw std::logic_error("unreachable");
}

bool bracket_order_leq(const Word& v, const Word& w) {
  switch (lex_compare(v, w)) {
    case Ordering::less: return true;
    case Ordering::greater: return false;
    case Ordering::incomparable: return v.starts_with(w);
  }
  return false;
}

bool satisfies_bracketing_conditions(const BracketedWord& b) {
  if (b.is_leaf()) return true;
  const BracketedWord& l = b.left();
  const BracketedWord& r = b.right();
  if (!is_regular(l.word()) || !is_regular(r.word())) return false;
  if (!l.is_leaf() && !bracket_order_leq(l.right().word(), r.word())) return false;
  return satisfies_bracketing_conditions(l) && satisfies_bracketing_conditions(r);
}

}  // namespace shirshov
