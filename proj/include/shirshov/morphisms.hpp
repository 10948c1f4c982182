// Morphisms of free monoids, square and cube detection, and the Crochemore
// test for square-free morphisms.

#ifndef SHIRSHOV_MORPHISMS_HPP
#define SHIRSHOV_MORPHISMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shirshov/words.hpp"

namespace shirshov {

class Morphism {
 public:
  // images[x-1] is the image of letter x.  Throws std::invalid_argument on
  // an empty image or an image outside the target alphabet.
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  // Lines "a -> abcab", one per source letter in order; '#' starts a
  // comment.  The target alphabet is the largest letter used.
  static Morphism parse(const std::string& text);
  std::string to_text() const;

  Alphabet source() const noexcept { return source_; }
  Alphabet target() const noexcept { return target_; }
  const Word& image(Letter x) const;
  const std::vector<Word>& images() const noexcept { return images_; }
  std::size_t max_image_length() const;
  std::size_t min_image_length() const;

  // Throws std::invalid_argument when w is not over the source alphabet.
  Word apply(const Word& w) const;
  // k applications starting from a single letter; needs source == target.
  // Throws std::length_error past max_length letters.
  Word iterate(Letter x, std::size_t k, std::size_t max_length = 1'000'000) const;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

Morphism thue_morse_morphism();
// a -> abcab, b -> acabcb, c -> acbcacb.
Morphism thue_ternary_morphism();
Morphism fibonacci_morphism();

// Image lengths capped at one million letters.
Word thue_morse(std::size_t k);
Word thue_ternary(std::size_t k);

struct RepetitionOccurrence {
  std::size_t start;
  Word root;
};

// Leftmost start first, then the shortest root.
std::optional<RepetitionOccurrence> has_square(const Word& w);
std::optional<RepetitionOccurrence> has_cube(const Word& w);

struct CrochemoreReport {
  bool square_free;
  std::size_t k_used;          // max{3, 1 + floor((M - 3)/m)}
  std::size_t max_len;         // M
  std::size_t min_len;         // m
  std::size_t words_checked;   // square-free source words of length <= k
  std::optional<Word> counterexample;
  // Sufficient conditions: images of square-free words of length <= 3 are
  // square-free, and no image is a factor of another image.
  bool thue2_images_square_free;
  bool thue2_images_not_nested;
};

CrochemoreReport crochemore_test(const Morphism& m);

// Square-free words over the alphabet of every length up to max_length.
std::vector<Word> square_free_words(Alphabet a, std::size_t max_length);

}  // namespace shirshov

#endif  // SHIRSHOV_MORPHISMS_HPP
