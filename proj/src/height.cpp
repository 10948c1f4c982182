#include "shirshov/height.hpp"

#include <stdexcept>

namespace shirshov {

namespace {

void check_base(const std::vector<Word>& Y) {
  if (Y.empty()) throw std::invalid_argument("height needs a nonempty base set");
  for (const Word& y : Y) {
    if (y.empty()) throw std::invalid_argument("base set contains the empty word");
  }
}

bool occurs_at(const Word& w, std::size_t pos, const Word& y) {
  if (pos + y.size() > w.size()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (w[pos + i] != y[i]) return false;
  }
  return true;
}

// Calls f(end) for every end of a power y^k, k >= min_k, starting at pos.
template <class F>
void for_each_power_end(const Word& w, std::size_t pos, const Word& y, std::size_t min_k, F&& f) {
  std::size_t end = pos;
  for (std::size_t k = 1; occurs_at(w, end, y); ++k) {
    end += y.size();
    if (k >= min_k) f(end);
  }
}

}  // namespace

std::optional<std::size_t> word_height(const Word& w, const std::vector<Word>& Y) {
  check_base(Y);
  std::vector<std::optional<std::size_t>> dp(w.size() + 1);
  dp[0] = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!dp[i]) continue;
    for (const Word& y : Y) {
      for_each_power_end(w, i, y, 1, [&](std::size_t e) {
        if (!dp[e] || *dp[e] > *dp[i] + 1) dp[e] = *dp[i] + 1;
      });
    }
  }
  return dp[w.size()];
}

std::optional<std::size_t> essential_height(const Word& w, const std::vector<Word>& Y, std::size_t pad,
                                            std::size_t min_exponent) {
  check_base(Y);
  if (min_exponent == 0) throw std::invalid_argument("minimal exponent must be positive");
  // after[i]: fewest powers in a prefix of length i that ends a power (or
  // i == 0); the padding c_j follows.
  std::vector<std::optional<std::size_t>> after(w.size() + 1);
  after[0] = 0;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (!after[i]) continue;
    if (w.size() - i <= pad && (!best || *after[i] < *best)) best = after[i];
    for (std::size_t g = 0; g <= pad && i + g < w.size(); ++g) {
      for (const Word& y : Y) {
        for_each_power_end(w, i + g, y, min_exponent, [&](std::size_t e) {
          if (!after[e] || *after[e] > *after[i] + 1) after[e] = *after[i] + 1;
        });
      }
    }
  }
  return best;
}

}  // namespace shirshov
