#include "shirshov/morphisms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shirshov {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (images_.size() != source_.size()) throw std::invalid_argument("every source letter needs an image");
  for (const Word& w : images_) {
    if (w.empty()) throw std::invalid_argument("morphism images must be nonempty");
    if (w.alphabet() != target_) throw std::invalid_argument("image outside the target alphabet");
  }
}

Morphism Morphism::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> images;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto arrow = line.find("->");
    std::istringstream probe(line);
    std::string tok;
    if (!(probe >> tok)) continue;
    if (arrow == std::string::npos) throw std::invalid_argument("morphism line without '->': " + line);
    std::istringstream lhs(line.substr(0, arrow));
    std::istringstream rhs(line.substr(arrow + 2));
    std::string letter, image, extra;
    if (!(lhs >> letter) || (lhs >> extra) || !(rhs >> image) || (rhs >> extra)) {
      throw std::invalid_argument("malformed morphism line: " + line);
    }
    const Word x = Word::parse(letter);
    if (x.size() != 1 || x[0] != images.size() + 1) {
      throw std::invalid_argument("morphism letters must be listed in order: " + line);
    }
    images.push_back(image);
  }
  if (images.empty()) throw std::invalid_argument("empty morphism");
  std::size_t target = 1;
  std::vector<Word> parsed;
  for (const auto& s : images) {
    parsed.push_back(Word::parse(s));
    target = std::max(target, parsed.back().alphabet().size());
  }
  for (auto& w : parsed) w = w.with_alphabet(Alphabet(target));
  return Morphism(Alphabet(images.size()), Alphabet(target), std::move(parsed));
}

std::string Morphism::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out += letter_name(static_cast<Letter>(i + 1), source_) + " -> " + images_[i].to_string() + "\n";
  }
  return out;
}

const Word& Morphism::image(Letter x) const {
  if (!source_.contains(x)) throw std::invalid_argument("letter outside the source alphabet");
  return images_[x - 1];
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const Word& w : images_) m = std::max(m, w.size());
  return m;
}

std::size_t Morphism::min_image_length() const {
  std::size_t m = images_.front().size();
  for (const Word& w : images_) m = std::min(m, w.size());
  return m;
}

Word Morphism::apply(const Word& w) const {
  if (w.alphabet() != source_) throw std::invalid_argument("word is not over the source alphabet");
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const auto img = images_[x - 1].letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(target_, std::move(out));
}

Word Morphism::iterate(Letter x, std::size_t k, std::size_t max_length) const {
  if (source_ != target_) throw std::invalid_argument("iteration needs equal source and target");
  Word w(source_, {x});
  if (!source_.contains(x)) throw std::invalid_argument("letter outside the source alphabet");
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t len = 0;
    for (Letter y : w.letters()) len += images_[y - 1].size();
    if (len > max_length) throw std::length_error("iterate exceeds the size cap");
    w = apply(w);
  }
  return w;
}

Morphism thue_morse_morphism() {
  const Alphabet a(2);
  return Morphism(a, a, {Word::parse("ab", a), Word::parse("ba", a)});
}

Morphism thue_ternary_morphism() {
  const Alphabet a(3);
  return Morphism(a, a, {Word::parse("abcab", a), Word::parse("acabcb", a), Word::parse("acbcacb", a)});
}

Morphism fibonacci_morphism() {
  const Alphabet a(2);
  return Morphism(a, a, {Word::parse("ab", a), Word::parse("a", a)});
}

Word thue_morse(std::size_t k) { return thue_morse_morphism().iterate(1, k); }
Word thue_ternary(std::size_t k) { return thue_ternary_morphism().iterate(1, k); }

namespace {

std::optional<RepetitionOccurrence> find_repetition(const Word& w, std::size_t copies) {
  const std::size_t n = w.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t p = 1; s + copies * p <= n; ++p) {
      bool ok = true;
      for (std::size_t i = s + p; i < s + copies * p && ok; ++i) ok = w[i] == w[i - p];
      if (ok) return RepetitionOccurrence{s, w.substr(s, p)};
    }
  }
  return std::nullopt;
}

bool is_factor(const Word& small, const Word& big) {
  if (small.size() > big.size()) return false;
  const auto a = small.letters();
  const auto b = big.letters();
  return std::search(b.begin(), b.end(), a.begin(), a.end()) != b.end();
}

}  // namespace

std::optional<RepetitionOccurrence> has_square(const Word& w) { return find_repetition(w, 2); }
std::optional<RepetitionOccurrence> has_cube(const Word& w) { return find_repetition(w, 3); }

std::vector<Word> square_free_words(Alphabet a, std::size_t max_length) {
  std::vector<Word> out{Word(a)};
  // Extending at the right only creates squares that end at the new letter.
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_length) continue;
    for (Letter x = 1; x <= a.size(); ++x) {
      Word next = out[i] + Word(a, {x});
      bool square = false;
      const std::size_t n = next.size();
      for (std::size_t p = 1; 2 * p <= n && !square; ++p) {
        bool eq = true;
        for (std::size_t j = n - p; j < n && eq; ++j) eq = next[j] == next[j - p];
        square = eq;
      }
      if (!square) out.push_back(std::move(next));
    }
  }
  return out;
}

CrochemoreReport crochemore_test(const Morphism& m) {
  CrochemoreReport r{};
  r.max_len = m.max_image_length();
  r.min_len = m.min_image_length();
  const std::size_t tail = r.max_len >= 3 ? (r.max_len - 3) / r.min_len : 0;
  r.k_used = std::max<std::size_t>(3, 1 + tail);
  r.square_free = true;
  for (const Word& w : square_free_words(m.source(), r.k_used)) {
    if (w.empty()) continue;
    ++r.words_checked;
    if (r.square_free && has_square(m.apply(w))) {
      r.square_free = false;
      r.counterexample = w;
    }
  }
  r.thue2_images_square_free = true;
  for (const Word& w : square_free_words(m.source(), 3)) {
    if (!w.empty() && has_square(m.apply(w))) r.thue2_images_square_free = false;
  }
  r.thue2_images_not_nested = true;
  for (std::size_t a = 0; a < m.images().size(); ++a) {
    for (std::size_t b = 0; b < m.images().size(); ++b) {
      if (a != b && is_factor(m.images()[a], m.images()[b])) r.thue2_images_not_nested = false;
    }
  }
  return r;
}

}  // namespace shirshov
