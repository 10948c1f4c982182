// Finite words over an ordered alphabet, lexicographic comparison in the
// prefix-incomparable convention, periodicity and rotation machinery.
//
// Letters are the integers 1..l with 1 < 2 < ... < l.  Text form uses
// 'a', 'b', ... when l <= 26 and "i:1,2,3" otherwise.  Positions are
// 0-based throughout the library.

#ifndef SHIRSHOV_WORDS_HPP
#define SHIRSHOV_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shirshov {

using Letter = std::uint32_t;

class Alphabet {
 public:
  explicit Alphabet(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool contains(Letter x) const noexcept { return x >= 1 && x <= size_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  std::size_t size_;
};

class Word {
 public:
  explicit Word(Alphabet alphabet, std::vector<Letter> letters = {});

  // Parses the text form.  Without an explicit alphabet the size is the
  // largest letter present (at least 1).
  static Word parse(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);

  std::string to_string() const;

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  // Factor [pos, pos + len), clamped to the end of the word.
  Word substr(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
  Word rotated(std::size_t shift) const;
  Word power(std::size_t k) const;
  Word with_alphabet(Alphabet alphabet) const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  bool starts_with(const Word& prefix) const;

  // Total order (alphabet size, then standard lexicographic with the
  // prefix first).  Used for containers; not the paper-style comparison,
  // which is lex_compare.
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.alphabet_.size() <=> b.alphabet_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

std::string letter_name(Letter x, Alphabet alphabet);

enum class Ordering { less, greater, incomparable };

std::string to_string(Ordering o);

// LESS/GREATER decided at the first differing position; INCOMPARABLE when
// one word is a prefix of the other (equal words included).
// Throws std::invalid_argument on alphabet mismatch.
Ordering lex_compare(const Word& u, const Word& v);

inline bool lex_less(const Word& u, const Word& v) { return lex_compare(u, v) == Ordering::less; }
inline bool lex_greater(const Word& u, const Word& v) { return lex_compare(u, v) == Ordering::greater; }
inline bool comparable(const Word& u, const Word& v) { return lex_compare(u, v) != Ordering::incomparable; }

// The distinguished bottom element: below every word, the empty word included.
struct Theta {};

// A word or theta.  std::nullopt plays theta.
using WordOrTheta = std::optional<Word>;

Ordering lex_compare(const WordOrTheta& u, const WordOrTheta& v);

std::vector<Word> tails(const Word& w);

// First k letters of the tail starting at `start`; the whole tail when it is
// shorter than k.
Word k_tail(const Word& w, std::size_t start, std::size_t k);

struct PeriodOccurrence {
  Word root;
  std::size_t start;
};

// Some factor root^d with root nonempty and primitive: shortest root first,
// then leftmost start.
std::optional<PeriodOccurrence> find_period_power(const Word& w, std::size_t d);

// Same search restricted to roots of length at most max_root.
std::optional<PeriodOccurrence> find_period_power(const Word& w, std::size_t d, std::size_t max_root);

std::size_t distinct_factor_count(const Word& w, std::size_t len);

// True iff w (|w| = k*t) has at most k distinct factors of length k.  When
// true, also confirms that w contains z^t with |z| <= k and throws
// std::logic_error if it does not.
bool subword_count_period(const Word& w, std::size_t k, std::size_t t);

bool is_primitive(const Word& w);

// Shortest u with w = u^j.
Word primitive_root(const Word& w);

std::vector<Word> rotations(const Word& w);
Word least_rotation(const Word& w);
bool conjugate(const Word& u, const Word& v);

// Every rotation of u is comparable with every rotation of v.
bool strongly_comparable(const Word& u, const Word& v);

// A word together with all of its rotations.  The representative is the
// lexicographically least rotation; period_length is the length of the
// primitive root.
class WordCycle {
 public:
  explicit WordCycle(const Word& w);

  const Word& representative() const noexcept { return representative_; }
  std::size_t length() const noexcept { return representative_.size(); }
  std::size_t period_length() const noexcept { return period_length_; }
  bool primitive() const noexcept { return period_length_ == representative_.size(); }
  bool contains(const Word& w) const;

  friend bool operator==(const WordCycle&, const WordCycle&) = default;
  friend auto operator<=>(const WordCycle& a, const WordCycle& b) {
    return a.representative_ <=> b.representative_;
  }

 private:
  Word representative_;
  std::size_t period_length_;
};

struct ConjugacyClass {
  WordCycle cycle;
  std::vector<Word> members;
};

// Groups primitive equal-length words by rotation; classes appear in order of
// first occurrence.  Throws std::invalid_argument otherwise.
std::vector<ConjugacyClass> conjugate_classes(std::span<const Word> words);

// Strictly greater than each of its proper rotations.
bool is_regular(const Word& w);

// First letters of the Zimin word: Z_1 = x_1, Z_{k+1} = Z_k x_{k+1} Z_k.
Word zimin_word(std::size_t n, std::optional<Alphabet> alphabet = std::nullopt);

// True iff some substitution of nonempty words for the letters of pattern
// gives a factor of host.
bool pattern_occurs(const Word& pattern, const Word& host);

// All words of the given length over the alphabet, in lexicographic order.
std::vector<Word> all_words(Alphabet alphabet, std::size_t length);

}  // namespace shirshov

#endif  // SHIRSHOV_WORDS_HPP
