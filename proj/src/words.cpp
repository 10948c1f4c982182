#include "shirshov/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace shirshov {

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size == 0) throw std::invalid_argument("alphabet must have at least one letter");
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (!alphabet_.contains(x)) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside alphabet of size " +
                                  std::to_string(alphabet_.size()));
    }
  }
}

Word Word::parse(std::string_view text, std::optional<Alphabet> alphabet) {
  std::vector<Letter> letters;
  if (text.starts_with("i:")) {
    text.remove_prefix(2);
    while (!text.empty()) {
      auto comma = text.find(',');
      auto item = text.substr(0, comma);
      Letter x = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
      if (ec != std::errc{} || ptr != item.data() + item.size() || x == 0) {
        throw std::invalid_argument("malformed integer letter '" + std::string(item) + "'");
      }
      letters.push_back(x);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
      if (text.empty()) throw std::invalid_argument("trailing comma in word");
    }
  } else {
    for (char c : text) {
      if (c < 'a' || c > 'z') throw std::invalid_argument(std::string("malformed letter '") + c + "'");
      letters.push_back(static_cast<Letter>(c - 'a' + 1));
    }
  }
  if (!alphabet) {
    Letter top = 1;
    for (Letter x : letters) top = std::max(top, x);
    alphabet = Alphabet(top);
  }
  return Word(*alphabet, std::move(letters));
}

std::string letter_name(Letter x, Alphabet alphabet) {
  if (alphabet.size() <= 26) return std::string(1, static_cast<char>('a' + x - 1));
  return std::to_string(x);
}

std::string Word::to_string() const {
  std::string out;
  if (alphabet_.size() <= 26) {
    for (Letter x : letters_) out.push_back(static_cast<char>('a' + x - 1));
    return out;
  }
  out = "i:";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters_[i]);
  }
  return out;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw std::out_of_range("substr start past end of word");
  len = std::min(len, letters_.size() - pos);
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  shift %= letters_.size();
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(shift), letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(shift));
  return Word(alphabet_, std::move(out));
}

Word Word::power(std::size_t k) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(alphabet_, std::move(out));
}

Word Word::with_alphabet(Alphabet alphabet) const { return Word(alphabet, letters_); }

Word& Word::operator+=(const Word& rhs) {
  if (alphabet_ != rhs.alphabet_) throw std::invalid_argument("concatenation across alphabets");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

bool Word::starts_with(const Word& prefix) const {
  return prefix.size() <= size() && std::equal(prefix.letters_.begin(), prefix.letters_.end(), letters_.begin());
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "LESS";
    case Ordering::greater: return "GREATER";
    case Ordering::incomparable: return "INCOMPARABLE";
  }
  return "?";
}

Ordering lex_compare(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) throw std::invalid_argument("comparing words over different alphabets");
  auto a = u.letters();
  auto b = v.letters();
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  if (ia == a.end() || ib == b.end()) return Ordering::incomparable;
  return *ia < *ib ? Ordering::less : Ordering::greater;
}

Ordering lex_compare(const WordOrTheta& u, const WordOrTheta& v) {
  if (!u && !v) return Ordering::incomparable;
  if (!u) return Ordering::less;
  if (!v) return Ordering::greater;
  return lex_compare(*u, *v);
}

std::vector<Word> tails(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.substr(i));
  return out;
}

Word k_tail(const Word& w, std::size_t start, std::size_t k) { return w.substr(start, k); }

namespace {

bool is_power_at(std::span<const Letter> w, std::size_t start, std::size_t period, std::size_t reps) {
  const std::size_t len = period * reps;
  if (start + len > w.size()) return false;
  for (std::size_t i = period; i < len; ++i) {
    if (w[start + i] != w[start + i - period]) return false;
  }
  return true;
}

}  // namespace

std::optional<PeriodOccurrence> find_period_power(const Word& w, std::size_t d, std::size_t max_root) {
  if (d < 2) throw std::invalid_argument("power exponent must be at least 2");
  auto letters = w.letters();
  for (std::size_t p = 1; p <= max_root && p * d <= w.size(); ++p) {
    for (std::size_t s = 0; s + p * d <= w.size(); ++s) {
      if (!is_power_at(letters, s, p, d)) continue;
      Word root = w.substr(s, p);
      // A non-primitive root of length p would have been found at a shorter length.
      if (is_primitive(root)) return PeriodOccurrence{std::move(root), s};
    }
  }
  return std::nullopt;
}

std::optional<PeriodOccurrence> find_period_power(const Word& w, std::size_t d) {
  return find_period_power(w, d, w.size());
}

std::size_t distinct_factor_count(const Word& w, std::size_t len) {
  if (len > w.size()) return 0;
  std::vector<Word> factors;
  for (std::size_t i = 0; i + len <= w.size(); ++i) factors.push_back(w.substr(i, len));
  std::sort(factors.begin(), factors.end());
  return static_cast<std::size_t>(std::unique(factors.begin(), factors.end()) - factors.begin());
}

bool subword_count_period(const Word& w, std::size_t k, std::size_t t) {
  if (k == 0 || t == 0) throw std::invalid_argument("k and t must be positive");
  if (w.size() != k * t) throw std::invalid_argument("word length must equal k*t");
  const bool few = distinct_factor_count(w, k) <= k;
  if (few && t >= 2 && !find_period_power(w, t, k)) {
    throw std::logic_error("few length-k factors but no period of length t in " + w.to_string());
  }
  return few;
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && is_power_at(w.letters(), 0, p, n / p)) return w.substr(0, p);
  }
  return w;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitivity of the empty word is undefined");
  return primitive_root(w).size() == w.size();
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < std::max<std::size_t>(w.size(), 1); ++i) out.push_back(w.rotated(i));
  return out;
}

Word least_rotation(const Word& w) {
  auto rs = rotations(w);
  return *std::min_element(rs.begin(), rs.end());
}

bool conjugate(const Word& u, const Word& v) {
  return u.size() == v.size() && u.alphabet() == v.alphabet() && least_rotation(u) == least_rotation(v);
}

bool strongly_comparable(const Word& u, const Word& v) {
  for (const Word& ru : rotations(u)) {
    for (const Word& rv : rotations(v)) {
      if (!comparable(ru, rv)) return false;
    }
  }
  return true;
}

WordCycle::WordCycle(const Word& w)
    : representative_(least_rotation(w)), period_length_(primitive_root(w).size()) {}

bool WordCycle::contains(const Word& w) const {
  return w.size() == length() && least_rotation(w) == representative_;
}

std::vector<ConjugacyClass> conjugate_classes(std::span<const Word> words) {
  std::vector<ConjugacyClass> out;
  for (const Word& w : words) {
    if (w.empty() || !is_primitive(w)) throw std::invalid_argument("non-primitive word " + w.to_string());
    if (w.size() != words.front().size()) throw std::invalid_argument("words of different lengths");
    WordCycle c(w);
    auto it = std::find_if(out.begin(), out.end(), [&](const ConjugacyClass& k) { return k.cycle == c; });
    if (it == out.end()) {
      out.push_back({c, {w}});
    } else if (std::find(it->members.begin(), it->members.end(), w) == it->members.end()) {
      it->members.push_back(w);
    }
  }
  return out;
}

bool is_regular(const Word& w) {
  if (w.empty()) throw std::invalid_argument("regularity of the empty word is undefined");
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!lex_greater(w, w.rotated(i))) return false;
  }
  return true;
}

Word zimin_word(std::size_t n, std::optional<Alphabet> alphabet) {
  if (n == 0) throw std::invalid_argument("Zimin index must be positive");
  Alphabet a = alphabet.value_or(Alphabet(n));
  if (a.size() < n) throw std::invalid_argument("alphabet too small for Zimin word");
  Word z(a, {1});
  for (std::size_t k = 2; k <= n; ++k) {
    Word next = z;
    next += Word(a, {static_cast<Letter>(k)});
    next += z;
    z = std::move(next);
  }
  return z;
}

std::vector<Word> all_words(Alphabet alphabet, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> cur(length, 1);
  while (true) {
    out.emplace_back(alphabet, cur);
    std::size_t i = length;
    while (i > 0 && cur[i - 1] == alphabet.size()) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace shirshov
