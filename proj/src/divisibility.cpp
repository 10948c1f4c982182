#include "shirshov/divisibility.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace shirshov {

std::string to_string(DivisibilitySense s) {
  switch (s) {
    case DivisibilitySense::ordinary: return "ordinary";
    case DivisibilitySense::tail: return "tail";
    case DivisibilitySense::strong: return "strong";
  }
  return "?";
}

DivisibilitySense parse_sense(const std::string& s) {
  if (s == "ordinary") return DivisibilitySense::ordinary;
  if (s == "tail") return DivisibilitySense::tail;
  if (s == "strong") return DivisibilitySense::strong;
  throw std::invalid_argument("unknown divisibility sense: " + s);
}

namespace {

Word block_word(const Word& w, const Block& b) { return w.substr(b.begin, b.end - b.begin); }

bool starts_with_at(const Word& host, std::size_t pos, const Word& prefix) {
  if (pos + prefix.size() > host.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (host[pos + i] != prefix[i]) return false;
  }
  return true;
}

// Consecutive blocks ending at |w|, each strictly below the previous one.
class TilingSearch {
 public:
  TilingSearch(const Word& w, std::size_t n, const std::vector<Word>* powers) : w_(w), n_(n), powers_(powers) {}

  std::optional<DivisibilityWitness> run(DivisibilitySense kind) {
    if (n_ == 0) return DivisibilityWitness{kind, {}, {}};
    for (std::size_t s = 0; s + n_ <= w_.size(); ++s) {
      if (extend(s, std::nullopt)) {
        return DivisibilityWitness{kind, blocks_, used_};
      }
    }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t pos, const std::optional<Word>& prev) {
    const std::size_t placed = blocks_.size();
    if (placed == n_) return pos == w_.size();
    const std::size_t left = n_ - placed;
    if (w_.size() - pos < left) return false;
    const std::size_t max_len = w_.size() - pos - (left - 1);
    const std::size_t min_len = left == 1 ? max_len : 1;
    for (std::size_t len = min_len; len <= max_len; ++len) {
      Word u = w_.substr(pos, len);
      if (prev && !lex_less(u, *prev)) continue;
      if (powers_ == nullptr) {
        blocks_.push_back({pos, pos + len});
        if (extend(pos + len, u)) return true;
        blocks_.pop_back();
        continue;
      }
      for (std::size_t j = 0; j < powers_->size(); ++j) {
        const Word& z = (*powers_)[j];
        if (z.size() > len || !starts_with_at(w_, pos, z)) continue;
        Word root = primitive_root(z);
        if (roots_.count(root)) continue;
        blocks_.push_back({pos, pos + len});
        used_.push_back(j);
        roots_.insert(root);
        if (extend(pos + len, u)) return true;
        roots_.erase(root);
        used_.pop_back();
        blocks_.pop_back();
      }
    }
    return false;
  }

  const Word& w_;
  std::size_t n_;
  const std::vector<Word>* powers_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> used_;
  std::set<Word> roots_;
};

std::optional<DivisibilityWitness> tail_search(const Word& w, std::size_t n, std::size_t limit) {
  if (n == 0) return DivisibilityWitness{DivisibilitySense::tail, {}, {}};
  std::vector<Word> suf;
  suf.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) suf.push_back(w.substr(i));
  // best[i]: longest strictly decreasing chain of tails starting at i.
  std::vector<std::size_t> best(limit, 1);
  for (std::size_t i = limit; i-- > 0;) {
    for (std::size_t j = i + 1; j < limit; ++j) {
      if (lex_greater(suf[i], suf[j])) best[i] = std::max(best[i], best[j] + 1);
    }
  }
  for (std::size_t i = 0; i < limit; ++i) {
    if (best[i] < n) continue;
    // Greedy: smallest next index that still leaves a long enough chain.
    std::vector<Block> blocks{{i, w.size()}};
    std::size_t cur = i;
    while (blocks.size() < n) {
      const std::size_t need = n - blocks.size();
      for (std::size_t j = cur + 1; j < limit; ++j) {
        if (best[j] >= need && lex_greater(suf[cur], suf[j])) {
          blocks.push_back({j, w.size()});
          cur = j;
          break;
        }
      }
    }
    return DivisibilityWitness{DivisibilitySense::tail, blocks, {}};
  }
  return std::nullopt;
}

}  // namespace

bool validate_witness(const Word& host, const DivisibilityWitness& witness,
                      const std::optional<std::vector<Word>>& powers) {
  const auto& b = witness.blocks;
  for (const Block& x : b) {
    if (x.begin >= x.end || x.end > host.size()) return false;
  }
  switch (witness.kind) {
    case DivisibilitySense::ordinary:
    case DivisibilitySense::strong: {
      if (!b.empty() && b.back().end != host.size()) return false;
      for (std::size_t i = 1; i < b.size(); ++i) {
        if (b[i].begin != b[i - 1].end) return false;
        if (!lex_greater(block_word(host, b[i - 1]), block_word(host, b[i]))) return false;
      }
      if (witness.kind == DivisibilitySense::ordinary) return witness.powers_used.empty();
      if (!powers || witness.powers_used.size() != b.size()) return false;
      std::set<Word> roots;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::size_t j = witness.powers_used[i];
        if (j >= powers->size()) return false;
        const Word& z = (*powers)[j];
        if (z.size() > b[i].end - b[i].begin || !starts_with_at(host, b[i].begin, z)) return false;
        if (!roots.insert(primitive_root(z)).second) return false;
      }
      return true;
    }
    case DivisibilitySense::tail: {
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].end != host.size()) return false;
        if (i > 0) {
          if (b[i].begin <= b[i - 1].begin) return false;
          if (!lex_greater(host.substr(b[i - 1].begin), host.substr(b[i].begin))) return false;
        }
      }
      return witness.powers_used.empty();
    }
  }
  return false;
}

std::optional<DivisibilityWitness> is_n_divisible(const Word& w, std::size_t n, DivisibilitySense sense,
                                                  const std::optional<std::vector<Word>>& powers,
                                                  std::optional<std::size_t> d) {
  switch (sense) {
    case DivisibilitySense::ordinary: return TilingSearch(w, n, nullptr).run(sense);
    case DivisibilitySense::tail: {
      std::size_t limit = w.size();
      if (d) {
        if (*d == 0) throw std::invalid_argument("d must be positive");
        limit = w.size() / *d;
      }
      return tail_search(w, n, limit);
    }
    case DivisibilitySense::strong:
      if (!powers) throw std::invalid_argument("strong divisibility needs a power set");
      for (const Word& z : *powers) {
        if (z.empty()) throw std::invalid_argument("power set contains the empty word");
      }
      return TilingSearch(w, n, &*powers).run(sense);
  }
  return std::nullopt;
}

bool is_nd_reducible(const Word& w, std::size_t n, std::size_t d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (find_period_power(w, d)) return true;
  return is_n_divisible(w, n, DivisibilitySense::ordinary).has_value();
}

std::vector<Word> primitive_powers(Alphabet alphabet, std::size_t root_length, std::size_t k) {
  std::vector<Word> out;
  for (const Word& z : all_words(alphabet, root_length)) {
    if (is_primitive(z)) out.push_back(z.power(k));
  }
  return out;
}

namespace {

class NonReducibleSearch {
 public:
  NonReducibleSearch(std::size_t n, std::size_t d, std::size_t l, std::uint64_t budget)
      : n_(n), d_(d), alphabet_(l), budget_(budget), best_(alphabet_) {}

  void run() { visit(Word(alphabet_)); }

  std::size_t best_length() const { return best_.size(); }
  const Word& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void visit(const Word& w) {
    if (++nodes_ > budget_) throw BudgetExceeded("non-reducible search exceeded its node budget", nodes_);
    if (w.size() > best_.size()) best_ = w;
    for (Letter x = 1; x <= alphabet_.size(); ++x) {
      Word next = w + Word(alphabet_, {x});
      if (!is_nd_reducible(next, n_, d_)) visit(next);
    }
  }

  std::size_t n_;
  std::size_t d_;
  Alphabet alphabet_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Word best_;
};

}  // namespace

NonReducibleResult max_nonreducible_length(std::size_t n, std::size_t d, std::size_t l, std::uint64_t budget) {
  BoundParams params{n, d, l};
  params.validate();
  // Reducibility is inherited by extensions on both sides, so the
  // non-reducible words form a prefix-closed tree.
  NonReducibleSearch search(n, d, l, budget);
  search.run();
  NonReducibleResult r{params, search.best_length(), search.best(), search.nodes(), psi_bound(params),
                       psi_log2_bound(params)};
  if (BigInt(r.length) >= r.psi || BigInt(r.length) >= r.psi_log2) {
    throw std::logic_error("non-reducible length reaches a psi bound");
  }
  return r;
}

std::vector<std::string> ProcessSequence::as_words(std::size_t k) const {
  std::vector<std::string> out;
  for (std::size_t s : ones) {
    std::string w(k - 1, '0');
    w[s] = '1';
    out.push_back(w);
  }
  return out;
}

bool process_condition_holds(const std::vector<std::size_t>& ones, std::size_t p, std::size_t k) {
  if (p < 2 || k < 2) throw std::invalid_argument("process condition needs p, k >= 2");
  for (std::size_t s : ones) {
    if (s >= k - 1) return false;
  }
  for (std::size_t s = 0; s + 1 < k; ++s) {
    // Occurrences of s since the last word with its 1 left of s.
    std::size_t run = 0;
    for (std::size_t x : ones) {
      if (x < s) {
        run = 0;
      } else if (x == s && ++run >= p) {
        return false;
      }
    }
  }
  return true;
}

namespace {

class ProcessSearch {
 public:
  ProcessSearch(std::size_t p, std::size_t k, std::uint64_t budget) : p_(p), m_(k - 1), budget_(budget) {}

  std::size_t longest(const std::vector<std::size_t>& state) {
    if (auto it = memo_.find(state); it != memo_.end()) return it->second.first;
    if (++states_ > budget_) throw BudgetExceeded("process search exceeded its state budget", states_);
    std::size_t best = 0;
    std::size_t choice = m_;
    for (std::size_t s = 0; s < m_; ++s) {
      if (state[s] + 1 >= p_) continue;
      std::vector<std::size_t> next = state;
      ++next[s];
      std::fill(next.begin() + static_cast<std::ptrdiff_t>(s) + 1, next.end(), 0);
      const std::size_t v = 1 + longest(next);
      if (v > best) {
        best = v;
        choice = s;
      }
    }
    memo_[state] = {best, choice};
    return best;
  }

  std::vector<std::size_t> path(std::vector<std::size_t> state) {
    std::vector<std::size_t> out;
    for (;;) {
      const std::size_t s = memo_.at(state).second;
      if (s == m_) return out;
      out.push_back(s);
      ++state[s];
      std::fill(state.begin() + static_cast<std::ptrdiff_t>(s) + 1, state.end(), 0);
    }
  }

  std::uint64_t states() const { return states_; }

 private:
  std::size_t p_;
  std::size_t m_;
  std::uint64_t budget_;
  std::uint64_t states_ = 0;
  std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> memo_;
};

}  // namespace

ProcessSequence max_process_sequence_length(std::size_t p, std::size_t k, std::uint64_t budget) {
  if (p < 2 || k < 2) throw std::invalid_argument("process search needs p, k >= 2");
  ProcessSearch search(p, k, budget);
  const std::vector<std::size_t> start(k - 1, 0);
  ProcessSequence r{search.longest(start), {}, 0};
  r.ones = search.path(start);
  r.states_explored = search.states();
  if (BigInt(r.length) > boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k - 1)) - 1) {
    throw std::logic_error("process sequence longer than p^{k-1} - 1");
  }
  if (!process_condition_holds(r.ones, p, k)) throw std::logic_error("process witness fails its condition");
  return r;
}

}  // namespace shirshov
