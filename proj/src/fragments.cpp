#include "shirshov/fragments.hpp"

#include <numeric>
#include <stdexcept>

namespace shirshov {

Word FragmentDecomposition::reconstruct() const {
  Word cur = residues.back();
  for (auto it = fragments.rbegin(); it != fragments.rend(); ++it) {
    cur = cur.substr(0, it->start) + it->word() + cur.substr(it->start);
  }
  return cur;
}

std::map<std::size_t, std::size_t> FragmentDecomposition::tallies(std::size_t count) const {
  std::map<std::size_t, std::size_t> s;
  for (std::size_t i = 0; i < fragments.size() && i < count; ++i) ++s[fragments[i].pieces];
  return s;
}

namespace {

bool period_matches(const Word& w, std::size_t pos, const Word& z) {
  if (pos + z.size() > w.size()) return false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (w[pos + i] != z[i]) return false;
  }
  return true;
}

}  // namespace

FragmentDecomposition extract_periodic_fragments(const Word& w, std::size_t n, std::size_t max_steps) {
  if (n < 2) throw std::invalid_argument("fragment extraction needs n >= 2");
  FragmentDecomposition out{w, {}, {w}};
  Word cur = w;
  std::vector<std::size_t> origin(w.size());
  std::iota(origin.begin(), origin.end(), 0);
  while (out.fragments.size() < max_steps) {
    auto occ = find_period_power(cur, 4 * n);
    if (!occ) break;
    const Word& z = occ->root;
    const std::size_t p = z.size();
    std::size_t begin = occ->start;
    std::size_t end = begin + 4 * n * p;
    while (begin >= p && period_matches(cur, begin - p, z)) begin -= p;
    while (period_matches(cur, end, z)) end += p;
    Fragment f{z, (end - begin) / p, begin, {}, 0};
    for (std::size_t i = begin; i < end; ++i) {
      f.original_positions.push_back(origin[i]);
      if (i == begin || origin[i] != origin[i - 1] + 1) ++f.pieces;
    }
    origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(begin), origin.begin() + static_cast<std::ptrdiff_t>(end));
    cur = cur.substr(0, begin) + cur.substr(end);
    out.fragments.push_back(std::move(f));
    out.residues.push_back(cur);
  }
  return out;
}

}  // namespace shirshov
