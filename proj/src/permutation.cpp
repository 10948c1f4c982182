#include "shirshov/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shirshov {

Permutation::Permutation(std::vector<std::size_t> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (std::size_t v : values_) {
    if (v < 1 || v > values_.size() || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::size_t> v;
  long long x = 0;
  while (in >> x) {
    if (x < 1) throw std::invalid_argument("permutation values must be positive");
    v.push_back(static_cast<std::size_t>(x));
  }
  if (!in.eof()) throw std::invalid_argument("malformed permutation: " + std::string(text));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t longest_increasing_subsequence(const Permutation& pi) {
  std::vector<std::size_t> piles;
  for (std::size_t v : pi.values()) {
    auto it = std::lower_bound(piles.begin(), piles.end(), v);
    if (it == piles.end()) {
      piles.push_back(v);
    } else {
      *it = v;
    }
  }
  return piles.size();
}

std::size_t longest_decreasing_subsequence(const Permutation& pi) {
  std::vector<std::size_t> rev(pi.values().rbegin(), pi.values().rend());
  return longest_increasing_subsequence(Permutation(std::move(rev)));
}

}  // namespace shirshov
