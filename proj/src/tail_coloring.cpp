#include "shirshov/tail_coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "shirshov/posets.hpp"

namespace shirshov {

TailColoring::TailColoring(Word host, std::size_t selected, std::vector<std::vector<std::size_t>> chains)
    : host_(std::move(host)), selected_(selected), chains_(std::move(chains)), color_(selected, selected) {
  if (selected_ > host_.size()) throw std::invalid_argument("more tails selected than the host has");
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    for (std::size_t k = 0; k < chains_[c].size(); ++k) {
      const std::size_t s = chains_[c][k];
      if (s >= selected_ || color_[s] != selected_) throw std::invalid_argument("chains do not partition the tails");
      color_[s] = c;
      if (k > 0 && (chains_[c][k - 1] >= s || !lex_less(host_.substr(chains_[c][k - 1]), host_.substr(s)))) {
        throw std::invalid_argument("chain is not increasing");
      }
    }
  }
  if (std::find(color_.begin(), color_.end(), selected_) != color_.end()) {
    throw std::invalid_argument("chains do not cover every tail");
  }
}

std::vector<WordOrTheta> TailColoring::snapshot(std::size_t p, std::size_t i) const {
  std::vector<WordOrTheta> out;
  for (const auto& chain : chains_) {
    auto it = std::upper_bound(chain.begin(), chain.end(), i);
    if (it == chain.begin()) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(k_tail(host_, *std::prev(it), p));
    }
  }
  return out;
}

TailColoring dilworth_tail_coloring(const Word& w, std::size_t cap, std::optional<std::size_t> d,
                                    bool require_comparable) {
  std::size_t m = w.size();
  if (d) {
    if (*d == 0) throw std::invalid_argument("d must be positive");
    m = w.size() / *d;
  }
  std::vector<Word> suf(m, Word(w.alphabet()));
  for (std::size_t i = 0; i < m; ++i) suf[i] = w.substr(i);
  std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Ordering o = lex_compare(suf[i], suf[j]);
      if (o == Ordering::incomparable && require_comparable) {
        throw std::invalid_argument("tails " + std::to_string(i) + " and " + std::to_string(j) + " are incomparable");
      }
      less[i][j] = o == Ordering::less;
    }
  }
  auto chains = min_chain_cover(FinitePoset(m, std::move(less)));
  if (chains.size() > cap) throw std::length_error("tail coloring needs more colors than allowed");
  return TailColoring(w, m, std::move(chains));
}

std::size_t snapshot_stability(const TailColoring& tc, std::size_t p) {
  std::size_t best = 0;
  std::size_t run = 0;
  std::vector<WordOrTheta> prev;
  for (std::size_t i = 0; i < tc.selected(); ++i) {
    auto cur = tc.snapshot(p, i);
    run = (i > 0 && cur == prev) ? run + 1 : 1;
    best = std::max(best, run);
    prev = std::move(cur);
  }
  return best;
}

}  // namespace shirshov
