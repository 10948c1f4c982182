// Permutations of 1..n in one-line notation.

#ifndef SHIRSHOV_PERMUTATION_HPP
#define SHIRSHOV_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace shirshov {

class Permutation {
 public:
  // Throws std::invalid_argument unless values is a rearrangement of 1..n.
  explicit Permutation(std::vector<std::size_t> values);

  static Permutation identity(std::size_t n);
  // Space or comma separated values, e.g. "2 1 3".
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  // Value at 0-based position i, in 1..n.
  std::size_t operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> values_;
};

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

// Patience sorting; strictly monotone subsequences.
std::size_t longest_increasing_subsequence(const Permutation& pi);
std::size_t longest_decreasing_subsequence(const Permutation& pi);

}  // namespace shirshov

#endif  // SHIRSHOV_PERMUTATION_HPP
