#include "shirshov/coding.hpp"

#include <set>
#include <stdexcept>

#include "shirshov/posets.hpp"

namespace shirshov {

CodingClass::CodingClass(Alphabet alphabet, std::size_t t, std::vector<Word> cycles)
    : alphabet_(alphabet), t_(t), cycles_(std::move(cycles)) {
  if (t_ == 0) throw std::invalid_argument("cycle length must be positive");
  std::set<Word> reps;
  for (const Word& w : cycles_) {
    if (w.size() != t_ || w.alphabet() != alphabet_) throw std::invalid_argument("cycle of the wrong shape");
    if (!is_primitive(w)) throw std::invalid_argument("cycle is not primitive: " + w.to_string());
    if (!reps.insert(least_rotation(w)).second) throw std::invalid_argument("conjugate cycles in one class");
  }
}

std::size_t max_coding_antichain(const CodingClass& c) {
  const std::size_t t = c.length();
  const std::size_t m = c.cycles().size() * t;
  std::vector<Word> words;
  for (std::size_t i = 0; i < c.cycles().size(); ++i) {
    for (std::size_t j = 0; j < t; ++j) words.push_back(c.word(i, j));
  }
  std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) less[a][b] = a / t < b / t && lex_less(words[a], words[b]);
  }
  return max_antichain(FinitePoset(m, std::move(less))).size;
}

bool is_n_light(const CodingClass& c, std::size_t n) { return max_coding_antichain(c) < n; }

Word recode_word_pairs(const Word& w, std::size_t offset) {
  if (w.size() % 2 != 0) throw std::invalid_argument("pair recoding needs even length");
  const std::size_t l = w.alphabet().size();
  const Word r = w.rotated(offset % (w.size() == 0 ? 1 : w.size()));
  std::vector<Letter> out;
  for (std::size_t q = 0; q + 1 < r.size(); q += 2) {
    out.push_back(static_cast<Letter>((r[q] - 1) * l + r[q + 1]));
  }
  return Word(Alphabet(l * l), std::move(out));
}

CodingClass recode_pairs(const CodingClass& c, std::size_t offset) {
  if (c.length() % 2 != 0) throw std::invalid_argument("pair recoding needs even length");
  std::vector<Word> cycles;
  for (const Word& w : c.cycles()) cycles.push_back(recode_word_pairs(w, offset));
  const std::size_t l = c.alphabet().size();
  return CodingClass(Alphabet(l * l), c.length() / 2, std::move(cycles));
}

CodingClass pad_to_power_of_two(const CodingClass& c, std::size_t s) {
  if (s >= 32) throw std::invalid_argument("padding exponent too large");
  const std::size_t target = std::size_t{1} << s;
  if (target < c.length()) throw std::invalid_argument("2^s is shorter than the cycles");
  const Alphabet a(c.alphabet().size() + 1);
  std::vector<Word> cycles;
  for (const Word& w : c.cycles()) {
    std::vector<Letter> v;
    for (Letter x : w.letters()) v.push_back(x + 1);
    v.resize(target, 1);
    cycles.emplace_back(a, std::move(v));
  }
  return CodingClass(a, target, std::move(cycles));
}

namespace {

void extend_classes(const std::vector<Word>& reps, std::vector<bool>& used, std::vector<Word>& cur, std::size_t left,
                    Alphabet a, std::size_t t, std::vector<CodingClass>& out) {
  out.emplace_back(a, t, cur);
  if (left == 0) return;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    if (used[r]) continue;
    used[r] = true;
    for (std::size_t j = 0; j < t; ++j) {
      cur.push_back(reps[r].rotated(j));
      extend_classes(reps, used, cur, left - 1, a, t, out);
      cur.pop_back();
    }
    used[r] = false;
  }
}

}  // namespace

std::vector<CodingClass> all_coding_classes(std::size_t t, std::size_t l, std::size_t max_cycles) {
  const Alphabet a(l);
  std::vector<Word> reps;
  for (const Word& w : all_words(a, t)) {
    if (is_primitive(w) && least_rotation(w) == w) reps.push_back(w);
  }
  std::vector<CodingClass> out;
  std::vector<bool> used(reps.size(), false);
  std::vector<Word> cur;
  extend_classes(reps, used, cur, max_cycles, a, t, out);
  return out;
}

}  // namespace shirshov
