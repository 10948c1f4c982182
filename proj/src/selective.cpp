#include "shirshov/selective.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace shirshov {

namespace {

// Every occurrence of z^{k+1} with z primitive of the given length.  Any
// factor z^m with m > k contains one, so these are enough for selection.
std::vector<PeriodicFactor> shortest_candidates(const Word& w, std::size_t period_len, std::size_t k) {
  if (period_len == 0) throw std::invalid_argument("period length must be positive");
  std::vector<PeriodicFactor> out;
  const std::size_t len = (k + 1) * period_len;
  for (std::size_t s = 0; s + len <= w.size(); ++s) {
    bool periodic = true;
    for (std::size_t i = s + period_len; i < s + len && periodic; ++i) periodic = w[i] == w[i - period_len];
    if (!periodic) continue;
    Word z = w.substr(s, period_len);
    if (!is_primitive(z)) continue;
    out.push_back({s, s + len, std::move(z)});
  }
  return out;
}

class SmallSelection {
 public:
  SmallSelection(std::vector<PeriodicFactor> cands) : cands_(std::move(cands)) {
    std::map<Word, std::size_t> ids;
    for (const auto& c : cands_) {
      auto [it, fresh] = ids.emplace(least_rotation(c.root), ids.size());
      (void)fresh;
      cls_.push_back(it->second);
    }
    if (ids.size() > 64) throw std::invalid_argument("too many period classes for exhaustive selection");
  }

  std::size_t best(std::size_t from, std::uint64_t used) {
    auto key = std::make_pair(from, used);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.first;
    std::size_t value = 0;
    std::size_t pick = cands_.size();
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      if (cands_[c].begin < from || (used >> cls_[c] & 1u)) continue;
      const std::size_t v = 1 + best(cands_[c].end, used | (std::uint64_t{1} << cls_[c]));
      if (v > value) {
        value = v;
        pick = c;
      }
    }
    memo_[key] = {value, pick};
    return value;
  }

  std::vector<PeriodicFactor> path() const {
    std::vector<PeriodicFactor> out;
    std::size_t from = 0;
    std::uint64_t used = 0;
    for (;;) {
      const std::size_t c = memo_.at({from, used}).second;
      if (c == cands_.size()) return out;
      out.push_back(cands_[c]);
      from = cands_[c].end;
      used |= std::uint64_t{1} << cls_[c];
    }
  }

 private:
  std::vector<PeriodicFactor> cands_;
  std::vector<std::size_t> cls_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::pair<std::size_t, std::size_t>> memo_;
};

bool separated(const Word& w, const PeriodicFactor& prev, const PeriodicFactor& next, std::size_t n) {
  if (next.begin <= prev.end || next.begin - prev.end <= n) return false;
  const std::size_t p = prev.root.size();
  for (std::size_t i = prev.end; i < next.begin; ++i) {
    if (w[i] != prev.root[(i - prev.begin) % p]) return true;
  }
  return false;
}

}  // namespace

std::size_t small_selective_height(const Word& w, std::size_t period_len, std::size_t k,
                                   std::vector<PeriodicFactor>* chosen) {
  SmallSelection sel(shortest_candidates(w, period_len, k));
  const std::size_t h = sel.best(0, 0);
  if (chosen) *chosen = sel.path();
  return h;
}

std::size_t large_selective_height(const Word& w, std::size_t period_len, std::size_t k, std::size_t n,
                                   std::vector<PeriodicFactor>* chosen) {
  const auto cands = shortest_candidates(w, period_len, k);
  // best[c]: longest valid sequence ending with candidate c.
  std::vector<std::size_t> best(cands.size(), 1);
  std::vector<std::size_t> from(cands.size(), cands.size());
  for (std::size_t c = 0; c < cands.size(); ++c) {
    for (std::size_t b = 0; b < c; ++b) {
      if (best[b] + 1 > best[c] && separated(w, cands[b], cands[c], n)) {
        best[c] = best[b] + 1;
        from[c] = b;
      }
    }
  }
  std::size_t h = 0;
  std::size_t last = cands.size();
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (best[c] > h) {
      h = best[c];
      last = c;
    }
  }
  if (chosen) {
    chosen->clear();
    for (std::size_t c = last; c != cands.size(); c = from[c]) chosen->push_back(cands[c]);
    std::reverse(chosen->begin(), chosen->end());
  }
  return h;
}

std::vector<std::pair<std::size_t, std::size_t>> lower_bound_witness_edges(std::size_t n, std::size_t l) {
  if (n < 4) throw std::invalid_argument("witness edges need n >= 4");
  if (n > 40) throw std::invalid_argument("witness edges limited to n <= 40");
  const std::size_t half = std::size_t{1} << (n - 1);
  if (l <= half) throw std::invalid_argument("witness edges need l > 2^{n-1}");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 2; i <= l - half + 1; ++i) {
    std::vector<std::size_t> v{i};
    for (std::size_t r = 1; r + 3 <= n; ++r) {
      v.push_back(v.back() + (std::size_t{1} << (n - 1 - r)));
      for (std::size_t j = 0; j < r; ++j) {
        const auto e = std::make_pair(v[j], v[r]);
        if (e.second > l) throw std::logic_error("witness edge leaves the vertex range");
        if (!seen.insert(e).second) throw std::logic_error("witness edge repeats");
        edges.push_back(e);
      }
    }
  }
  return edges;
}

}  // namespace shirshov
