#include "shirshov/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace shirshov {

FinitePoset::FinitePoset(std::size_t n, std::vector<std::vector<bool>> less) : n_(n), less_(std::move(less)) {
  if (less_.size() != n_) throw std::invalid_argument("relation matrix has the wrong size");
  for (const auto& row : less_) {
    if (row.size() != n_) throw std::invalid_argument("relation matrix has the wrong size");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (less_[i][i]) throw std::invalid_argument("relation is not irreflexive");
    for (std::size_t j = 0; j < n_; ++j) {
      if (!less_[i][j]) continue;
      if (less_[j][i]) throw std::invalid_argument("relation is not antisymmetric");
      for (std::size_t k = 0; k < n_; ++k) {
        if (less_[j][k] && !less_[i][k]) throw std::invalid_argument("relation is not transitive");
      }
    }
  }
}

FinitePoset FinitePoset::from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw std::invalid_argument("relation pair out of range");
    r[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return FinitePoset(n, std::move(r));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) r[i][j] = true;
  }
  return FinitePoset(n, std::move(r));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  return FinitePoset(n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!less_[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n_ && !between; ++k) between = less_[i][k] && less_[k][j];
      if (!between) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string FinitePoset::to_text() const {
  std::ostringstream out;
  out << n_ << '\n';
  for (auto [a, b] : covers()) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

FinitePoset FinitePoset::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x = 0;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw std::invalid_argument("malformed poset line: " + line);
    if (nums.empty()) continue;
    if (!n) {
      if (nums.size() != 1 || nums[0] < 0) throw std::invalid_argument("poset text must start with its size");
      n = static_cast<std::size_t>(nums[0]);
      continue;
    }
    if (nums.size() != 2 || nums[0] < 1 || nums[1] < 1 || static_cast<std::size_t>(nums[0]) > *n ||
        static_cast<std::size_t>(nums[1]) > *n) {
      throw std::invalid_argument("malformed covering pair: " + line);
    }
    pairs.emplace_back(static_cast<std::size_t>(nums[0] - 1), static_cast<std::size_t>(nums[1] - 1));
  }
  if (!n) throw std::invalid_argument("empty poset text");
  return from_relations(*n, pairs);
}

namespace {

// Maximum matching between left copies and right copies, i -> j iff i < j.
struct Matching {
  std::vector<std::optional<std::size_t>> right_of;  // left i matched to right j
  std::vector<std::optional<std::size_t>> left_of;   // right j matched to left i
  std::size_t size = 0;
};

bool augment(const FinitePoset& p, std::size_t i, std::vector<bool>& seen, Matching& m) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!p.less(i, j) || seen[j]) continue;
    seen[j] = true;
    if (!m.left_of[j] || augment(p, *m.left_of[j], seen, m)) {
      m.right_of[i] = j;
      m.left_of[j] = i;
      return true;
    }
  }
  return false;
}

Matching maximum_matching(const FinitePoset& p) {
  Matching m{std::vector<std::optional<std::size_t>>(p.size()), std::vector<std::optional<std::size_t>>(p.size()), 0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<bool> seen(p.size(), false);
    if (augment(p, i, seen, m)) ++m.size;
  }
  return m;
}

}  // namespace

Antichain max_antichain(const FinitePoset& p) {
  const std::size_t n = p.size();
  const Matching m = maximum_matching(p);
  // Alternating reachability from unmatched left vertices.
  std::vector<bool> zl(n, false), zr(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.right_of[i]) {
      zl[i] = true;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.less(i, j) || zr[j] || m.right_of[i] == j) continue;
      zr[j] = true;
      if (m.left_of[j] && !zl[*m.left_of[j]]) {
        zl[*m.left_of[j]] = true;
        stack.push_back(*m.left_of[j]);
      }
    }
  }
  // Konig cover is (L \ Z) + (R & Z); the antichain avoids it on both sides.
  Antichain a{0, {}};
  for (std::size_t x = 0; x < n; ++x) {
    if (zl[x] && !zr[x]) a.elements.push_back(x);
  }
  a.size = a.elements.size();
  if (a.size != n - m.size) throw std::logic_error("antichain and matching sizes disagree");
  for (std::size_t i = 0; i < a.size; ++i) {
    for (std::size_t j = i + 1; j < a.size; ++j) {
      if (p.comparable(a.elements[i], a.elements[j])) throw std::logic_error("Konig antichain is not an antichain");
    }
  }
  return a;
}

Antichain max_antichain_bruteforce(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 24) throw std::invalid_argument("brute-force antichain limited to 24 points");
  std::vector<std::uint32_t> comp(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.comparable(i, j)) comp[i] |= 1u << j;
    }
  }
  std::uint32_t best = 0;
  std::size_t best_size = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best_size) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if ((mask >> i & 1u) && (comp[i] & mask)) ok = false;
    }
    if (ok) {
      best = mask;
      best_size = size;
    }
  }
  Antichain a{best_size, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (best >> i & 1u) a.elements.push_back(i);
  }
  return a;
}

std::vector<std::vector<std::size_t>> min_chain_cover(const FinitePoset& p) {
  const Matching m = maximum_matching(p);
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (m.left_of[x]) continue;
    std::vector<std::size_t> c{x};
    while (m.right_of[c.back()]) c.push_back(*m.right_of[c.back()]);
    chains.push_back(std::move(c));
  }
  if (chains.size() != p.size() - m.size) throw std::logic_error("chain cover size mismatch");
  return chains;
}

FinitePoset permutation_poset(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) r[i][j] = pi[i] < pi[j];
  }
  return FinitePoset(n, std::move(r));
}

FinitePoset intersect_linear_orders(const std::vector<std::size_t>& rank1, const std::vector<std::size_t>& rank2) {
  const std::size_t n = rank1.size();
  if (rank2.size() != n) throw std::invalid_argument("linear orders on different sets");
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i][j] = rank1[i] < rank1[j] && rank2[i] < rank2[j];
  }
  return FinitePoset(n, std::move(r));
}

std::string canonical_form(const FinitePoset& p) {
  const std::size_t n = p.size();
  // height: longest chain ending at x; depth: longest chain starting at x.
  std::vector<std::size_t> height(n, 0), depth(n, 0), down(n, 0), up(n, 0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.less(j, i)) ++below[i];
    }
  }
  // Sorting by the number of elements below gives a linear extension.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  for (std::size_t x : order) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.less(y, x)) height[x] = std::max(height[x], height[y] + 1);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.less(*it, y)) depth[*it] = std::max(depth[*it], depth[y] + 1);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    down[i] = below[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (p.less(i, j)) ++up[i];
    }
  }
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  std::vector<Key> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = {height[i], depth[i], down[i], up[i]};
  std::vector<std::size_t> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::sort(pts.begin(), pts.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[pts[j]] == key[pts[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::string prefix;
  for (std::size_t i = 0; i < n; ++i) {
    const Key& k = key[pts[i]];
    prefix += std::to_string(std::get<0>(k)) + "." + std::to_string(std::get<1>(k)) + "." +
              std::to_string(std::get<2>(k)) + "." + std::to_string(std::get<3>(k)) + ";";
  }
  std::string best;
  bool have = false;
  auto encode = [&]() {
    std::string s(n * n, '0');
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (p.less(pts[a], pts[b])) s[a * n + b] = '1';
      }
    }
    if (!have || s < best) {
      best = s;
      have = true;
    }
  };
  // Odometer over the orderings of every block.
  for (auto [b, e] : blocks) std::sort(pts.begin() + static_cast<std::ptrdiff_t>(b), pts.begin() + static_cast<std::ptrdiff_t>(e));
  for (;;) {
    encode();
    std::size_t bi = 0;
    for (; bi < blocks.size(); ++bi) {
      auto [b, e] = blocks[bi];
      if (std::next_permutation(pts.begin() + static_cast<std::ptrdiff_t>(b), pts.begin() + static_cast<std::ptrdiff_t>(e))) break;
    }
    if (bi == blocks.size()) break;
  }
  return std::to_string(n) + ":" + prefix + best;
}

bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

PermutationPosetCensus permutation_poset_census(std::size_t n) {
  if (n > 7) throw std::invalid_argument("permutation poset census limited to n <= 7");
  std::vector<std::set<std::string>> seen(n + 1);
  PermutationPosetCensus c{n, std::vector<std::uint64_t>(n + 1, 0), std::vector<std::uint64_t>(n + 1, 0)};
  for (const Permutation& pi : all_permutations(n)) {
    FinitePoset p = permutation_poset(pi);
    const std::size_t k = max_antichain(p).size;
    ++c.permutations[k];
    seen[k].insert(canonical_form(p));
  }
  for (std::size_t k = 0; k <= n; ++k) c.classes[k] = seen[k].size();
  return c;
}

boost::multiprecision::cpp_rational epsilon_bound(std::size_t n, std::size_t k) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  if (k > n) throw std::invalid_argument("epsilon bound needs k <= n");
  auto fact = [](std::size_t m) {
    cpp_int f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= i;
    return f;
  };
  const auto e = static_cast<unsigned>(2 * n);
  const cpp_int fk = fact(k);
  const cpp_int fnk = fact(n - k);
  cpp_rational a(boost::multiprecision::pow(cpp_int(k), e), fk * fk);
  cpp_rational b(boost::multiprecision::pow(cpp_int(n - k + 1), e), fnk * fnk);
  return a < b ? a : b;
}

std::uint64_t count_permutation_posets(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  const std::uint64_t v = permutation_poset_census(n).classes[k];
  if (boost::multiprecision::cpp_rational(v) > epsilon_bound(n, k)) {
    throw std::logic_error("permutation poset count exceeds its bound");
  }
  return v;
}

namespace {

std::vector<std::size_t> ranks_from_top_first(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = order.size() - 1 - i;
  return rank;
}

bool maps_onto(const std::vector<std::size_t>& a1, const std::vector<std::size_t>& a2,
               const std::vector<std::size_t>& b1, const std::vector<std::size_t>& b2) {
  // An isomorphism of linear orders is unique, so a1 -> b1 fixes the map.
  std::vector<std::size_t> sigma(a1.size());
  for (std::size_t i = 0; i < a1.size(); ++i) sigma[a1[i]] = b1[i];
  for (std::size_t i = 0; i < a2.size(); ++i) {
    if (sigma[a2[i]] != b2[i]) return false;
  }
  return true;
}

}  // namespace

bool linear_order_pairs_isomorphic(const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>& a,
                                   const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>& b) {
  const std::size_t n = a.first.size();
  if (a.second.size() != n || b.first.size() != n || b.second.size() != n) return false;
  return maps_onto(a.first, a.second, b.first, b.second) || maps_onto(a.first, a.second, b.second, b.first);
}

NonInjectivityDemo non_injectivity_demo() {
  // Points 0..2 form the chain p1 > p2 > p3, 3..7 the chain p4 > ... > p8 and
  // 8..14 the chain p9 > ... > p15.
  auto chain_points = [](std::size_t from, std::size_t len) {
    std::vector<std::size_t> v(len);
    std::iota(v.begin(), v.end(), from);
    return v;
  };
  const auto a = chain_points(0, 3);
  const auto b = chain_points(3, 5);
  const auto c = chain_points(8, 7);
  auto cat = [](std::initializer_list<std::vector<std::size_t>> parts) {
    std::vector<std::size_t> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (const auto& ch : {a, b, c}) {
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) rel.emplace_back(ch[i + 1], ch[i]);
  }
  NonInjectivityDemo demo{FinitePoset::from_relations(15, rel),
                          {cat({a, b, c}), cat({c, b, a})},
                          {cat({a, c, b}), cat({b, c, a})},
                          false,
                          false,
                          false};
  auto generates = [&](const auto& pr) {
    return intersect_linear_orders(ranks_from_top_first(pr.first), ranks_from_top_first(pr.second)) == demo.poset;
  };
  demo.first_generates = generates(demo.first);
  demo.second_generates = generates(demo.second);
  demo.pairs_isomorphic = linear_order_pairs_isomorphic(demo.first, demo.second);
  return demo;
}

}  // namespace shirshov
