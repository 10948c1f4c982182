#include "shirshov/growth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shirshov {

namespace {

bool contains_factor(const Word& host, const Word& f) {
  if (f.size() > host.size()) return false;
  const auto h = host.letters();
  const auto x = f.letters();
  return std::search(h.begin(), h.end(), x.begin(), x.end()) != h.end();
}

}  // namespace

MonomialAlgebraSpec::MonomialAlgebraSpec(Alphabet alphabet, std::vector<Word> forbidden) : alphabet_(alphabet) {
  std::set<Word> uniq;
  for (Word& w : forbidden) {
    if (w.empty()) throw std::invalid_argument("forbidden words must be nonempty");
    if (w.alphabet() != alphabet_) throw std::invalid_argument("forbidden word over another alphabet");
    uniq.insert(std::move(w));
  }
  for (const Word& w : uniq) {
    bool redundant = false;
    for (const Word& v : uniq) {
      if (!(v == w) && contains_factor(w, v)) redundant = true;
    }
    if (!redundant) forbidden_.push_back(w);
  }
}

MonomialAlgebraSpec MonomialAlgebraSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Alphabet> alphabet;
  std::vector<Word> forbidden;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok, extra;
    if (!(ls >> tok)) continue;
    if (ls >> extra) throw std::invalid_argument("one entry per line expected: " + line);
    if (!alphabet) {
      std::size_t pos = 0;
      long long l = 0;
      try {
        l = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || l < 1) throw std::invalid_argument("spec must start with the alphabet size");
      alphabet = Alphabet(static_cast<std::size_t>(l));
      continue;
    }
    forbidden.push_back(Word::parse(tok, *alphabet));
  }
  if (!alphabet) throw std::invalid_argument("empty algebra spec");
  return MonomialAlgebraSpec(*alphabet, std::move(forbidden));
}

bool MonomialAlgebraSpec::allowed(const Word& w) const {
  for (const Word& f : forbidden_) {
    if (contains_factor(w, f)) return false;
  }
  return true;
}

std::size_t MonomialAlgebraSpec::window() const {
  std::size_t m = 1;
  for (const Word& f : forbidden_) m = std::max(m, f.size() - (f.size() > 0 ? 1 : 0));
  return std::max<std::size_t>(m, 1);
}

SubwordGraph SubwordGraph::build(const MonomialAlgebraSpec& spec, std::size_t max_vertices) {
  SubwordGraph g{spec.window(), {}, {}};
  const double candidates = std::pow(static_cast<double>(spec.alphabet().size()), static_cast<double>(g.m));
  if (candidates > static_cast<double>(max_vertices)) throw std::length_error("subword graph too large");
  for (Word& w : all_words(spec.alphabet(), g.m)) {
    if (spec.allowed(w)) g.vertices.push_back(std::move(w));
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (Letter x = 1; x <= spec.alphabet().size(); ++x) {
      Word merge = g.vertices[i] + Word(spec.alphabet(), {x});
      if (!spec.allowed(merge)) continue;
      auto it = index.find(merge.substr(1));
      if (it != index.end()) g.edges.emplace_back(i, it->second);
    }
  }
  return g;
}

std::vector<BigCount> growth_function(const MonomialAlgebraSpec& spec, std::size_t n, std::size_t cap) {
  if (n > cap) throw std::length_error("growth function length exceeds the cap");
  const SubwordGraph g = SubwordGraph::build(spec);
  std::vector<BigCount> per_length(n + 1, 0);
  // Lengths below the window by enumeration.
  for (std::size_t len = 0; len < g.m && len <= n; ++len) {
    for (const Word& w : all_words(spec.alphabet(), len)) {
      if (spec.allowed(w)) ++per_length[len];
    }
  }
  if (g.m <= n) {
    std::vector<BigCount> cur(g.vertices.size(), 1);
    for (std::size_t len = g.m;; ++len) {
      for (const auto& c : cur) per_length[len] += c;
      if (len == n) break;
      std::vector<BigCount> next(g.vertices.size(), 0);
      for (auto [u, v] : g.edges) next[v] += cur[u];
      cur = std::move(next);
    }
  }
  std::vector<BigCount> V(n + 1, 0);
  BigCount acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    acc += per_length[k];
    V[k] = acc;
  }
  return V;
}

std::vector<BigCount> growth_function_direct(const MonomialAlgebraSpec& spec, std::size_t n) {
  if (n > 24) throw std::length_error("direct enumeration limited to length 24");
  std::vector<BigCount> V(n + 1, 0);
  // Allowed words are factor-closed, so extend allowed words only.
  std::vector<Word> layer{Word(spec.alphabet())};
  BigCount acc = 0;
  for (std::size_t len = 0; len <= n; ++len) {
    acc += layer.size();
    V[len] = acc;
    if (len == n) break;
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Letter x = 1; x <= spec.alphabet().size(); ++x) {
        Word e = w + Word(spec.alphabet(), {x});
        if (spec.allowed(e)) next.push_back(std::move(e));
      }
    }
    layer = std::move(next);
  }
  return V;
}

GrowthClass classify_growth(const MonomialAlgebraSpec& spec) {
  const SubwordGraph g = SubwordGraph::build(spec);
  const std::size_t nv = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (auto [u, v] : g.edges) adj[u].push_back(v);

  // Tarjan, iterative.
  std::vector<std::size_t> comp(nv, nv), low(nv, 0), num(nv, 0);
  std::vector<bool> on_stack(nv, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, ncomp = 0;
  for (std::size_t root = 0; root < nv; ++root) {
    if (num[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    num[root] = low[root] = ++counter;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei < adj[v].size()) {
        const std::size_t w = adj[v][ei++];
        if (!num[w]) {
          num[w] = low[w] = ++counter;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
        continue;
      }
      if (low[v] == num[v]) {
        std::size_t w = nv;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  std::vector<std::size_t> vcount(ncomp, 0), ecount(ncomp, 0);
  std::vector<std::size_t> internal_out(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) ++vcount[comp[v]];
  for (auto [u, v] : g.edges) {
    if (comp[u] == comp[v]) {
      ++ecount[comp[u]];
      ++internal_out[u];
    }
  }
  bool by_edges = false;
  bool by_vertex = false;
  for (std::size_t c = 0; c < ncomp; ++c) by_edges = by_edges || ecount[c] > vcount[c];
  for (std::size_t v = 0; v < nv; ++v) by_vertex = by_vertex || internal_out[v] >= 2;
  if (by_edges != by_vertex) throw std::logic_error("doubly cyclic tests disagree");

  GrowthClass out{by_edges, 0, 0};
  std::vector<bool> cyclic(ncomp, false);
  for (std::size_t c = 0; c < ncomp; ++c) {
    cyclic[c] = ecount[c] > 0;
    if (cyclic[c]) ++out.cyclic_components;
  }
  if (out.exponential) return out;
  // Tarjan numbers components in reverse topological order: edges go from
  // higher to lower component ids.
  std::vector<std::vector<std::size_t>> dag(ncomp);
  for (auto [u, v] : g.edges) {
    if (comp[u] != comp[v]) dag[comp[u]].push_back(comp[v]);
  }
  std::vector<std::size_t> best(ncomp, 0);
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::size_t down = 0;
    for (std::size_t d : dag[c]) down = std::max(down, best[d]);
    best[c] = down + (cyclic[c] ? 1 : 0);
    out.degree = std::max(out.degree, best[c]);
  }
  return out;
}

std::string to_string(const GrowthClass& g) {
  if (g.exponential) return "exponential";
  return "polynomial degree " + std::to_string(g.degree);
}

double gk_dimension_estimate(const MonomialAlgebraSpec& spec, std::size_t n) {
  if (n < 8) throw std::invalid_argument("growth estimate needs n >= 8");
  const BigCount v = growth_function(spec, n).back();
  if (v == 0) return 0.0;
  // Through the bit length so exponential counts stay finite.
  const std::size_t bits = boost::multiprecision::msb(v);
  const double mant = (v >> (bits > 52 ? bits - 52 : 0)).convert_to<double>();
  const double log_v = std::log(mant) + static_cast<double>(bits > 52 ? bits - 52 : 0) * std::log(2.0);
  return log_v / std::log(static_cast<double>(n));
}

std::vector<std::size_t> complexity_function(const Word& w, std::size_t n) {
  std::vector<std::size_t> p;
  for (std::size_t len = 1; len <= n; ++len) p.push_back(distinct_factor_count(w, len));
  return p;
}

bool is_balanced(const Word& w) {
  const std::size_t l = w.alphabet().size();
  for (std::size_t len = 1; len <= w.size(); ++len) {
    for (Letter x = 1; x <= l; ++x) {
      std::size_t lo = len, hi = 0;
      std::size_t count = 0;
      for (std::size_t i = 0; i < len; ++i) count += w[i] == x;
      for (std::size_t s = 0;; ++s) {
        lo = std::min(lo, count);
        hi = std::max(hi, count);
        if (s + len == w.size()) break;
        count += (w[s + len] == x) - (w[s] == x);
      }
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

Word mechanical_word(long long alpha_num, long long alpha_den, long long rho_num, long long rho_den, std::size_t length) {
  if (alpha_den <= 0 || rho_den <= 0) throw std::invalid_argument("denominators must be positive");
  if (alpha_num < 0 || alpha_num > alpha_den) throw std::invalid_argument("slope must lie in [0, 1]");
  using boost::multiprecision::cpp_int;
  const cpp_int den = cpp_int(alpha_den) * rho_den;
  auto fl = [&](std::size_t i) {
    const cpp_int num = cpp_int(alpha_num) * rho_den * i + cpp_int(rho_num) * alpha_den;
    cpp_int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
  };
  std::vector<Letter> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(fl(i + 1) - fl(i) == 0 ? 1 : 2);
  return Word(Alphabet(2), std::move(out));
}

}  // namespace shirshov
