#include "shirshov/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shirshov {

Shape::Shape(std::vector<std::size_t> rows) : rows_(std::move(rows)), order_(0) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == 0) throw std::invalid_argument("shape rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("shape rows must weakly decrease");
    order_ += rows_[i];
  }
}

std::size_t Shape::column_length(std::size_t c) const {
  std::size_t len = 0;
  while (len < rows_.size() && rows_[len] > c) ++len;
  return len;
}

namespace {

void partitions(std::size_t left, std::size_t max_part, std::size_t rows_left, std::vector<std::size_t>& cur,
                std::vector<Shape>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(left - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Shape> shapes_of_order(std::size_t n, std::size_t max_rows) {
  std::vector<Shape> out;
  std::vector<std::size_t> cur;
  partitions(n, n, max_rows, cur, out);
  return out;
}

Tableau::Tableau(std::vector<std::vector<std::size_t>> rows) : rows_(std::move(rows)) {
  std::set<std::size_t> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) throw std::invalid_argument("tableau rows must weakly shorten");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const std::size_t x = rows_[r][c];
      if (x == 0 || !seen.insert(x).second) throw std::invalid_argument("tableau entries must be distinct and positive");
      if (c > 0 && rows_[r][c - 1] >= x) throw std::invalid_argument("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= x) throw std::invalid_argument("tableau columns must increase");
    }
  }
}

Shape Tableau::shape() const {
  std::vector<std::size_t> s;
  for (const auto& row : rows_) s.push_back(row.size());
  return Shape(std::move(s));
}

std::size_t Tableau::size() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool Tableau::contains(std::size_t x) const {
  for (const auto& row : rows_) {
    if (std::find(row.begin(), row.end(), x) != row.end()) return true;
  }
  return false;
}

bool Tableau::is_standard() const {
  const std::size_t n = size();
  for (const auto& row : rows_) {
    for (std::size_t x : row) {
      if (x > n) return false;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::size_t width = 1;
  for (const auto& row : rows_) {
    for (std::size_t x : row) width = std::max(width, std::to_string(x).size());
  }
  std::ostringstream out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string s = std::to_string(row[c]);
      if (c) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::pair<Tableau, Cell> schensted_insert(const Tableau& t, std::size_t x) {
  if (x == 0) throw std::invalid_argument("tableau entries must be positive");
  if (t.contains(x)) throw std::invalid_argument("value already in the tableau: " + std::to_string(x));
  auto rows = t.rows();
  std::size_t r = 0;
  for (;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      break;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      break;
    }
    std::swap(*it, x);
  }
  const Cell landing{r + 1, rows[r].size()};
  return {Tableau(std::move(rows)), landing};
}

RskPair rsk(const Permutation& pi) {
  Tableau P;
  std::vector<std::vector<std::size_t>> q;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    auto [next, cell] = schensted_insert(P, pi[i]);
    P = std::move(next);
    if (cell.row > q.size()) q.emplace_back();
    q[cell.row - 1].push_back(i + 1);
  }
  return {std::move(P), Tableau(std::move(q))};
}

Permutation rsk_inverse(const Tableau& P, const Tableau& Q) {
  if (!(P.shape() == Q.shape())) throw std::invalid_argument("P and Q have different shapes");
  if (!P.is_standard() || !Q.is_standard()) throw std::invalid_argument("P and Q must be standard");
  const std::size_t n = P.size();
  auto p = P.rows();
  auto q = Q.rows();
  std::vector<std::size_t> values(n);
  for (std::size_t i = n; i >= 1; --i) {
    // The largest Q entry sits at the end of some row.
    std::size_t r = 0;
    while (q[r].back() != i) ++r;
    q[r].pop_back();
    std::size_t y = p[r].back();
    p[r].pop_back();
    if (p[r].empty()) {
      p.pop_back();
      q.pop_back();
    }
    while (r-- > 0) {
      auto& row = p[r];
      auto it = std::lower_bound(row.begin(), row.end(), y);
      --it;  // largest entry below y
      std::swap(*it, y);
    }
    values[i - 1] = y;
  }
  return Permutation(std::move(values));
}

std::pair<std::vector<std::vector<std::size_t>>, Tableau> rsk_forward_word(const std::vector<std::size_t>& values) {
  std::vector<std::vector<std::size_t>> p;
  std::vector<std::vector<std::size_t>> q;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t x = values[i];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        break;
      }
      std::swap(*it, x);
    }
    if (r == q.size()) q.emplace_back();
    q[r].push_back(i + 1);
  }
  return {std::move(p), Tableau(std::move(q))};
}

std::uint64_t hook_count(const Shape& s) {
  const std::size_t n = s.order();
  if (n > 20) throw std::invalid_argument("hook count limited to order 20");
  // n!/prod(h) stays exact by multiplying in the factors and dividing
  // through a big integer.
  boost::multiprecision::cpp_int num = 1;
  for (std::size_t i = 2; i <= n; ++i) num *= i;
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t r = 0; r < s.row_count(); ++r) {
    for (std::size_t c = 0; c < s.rows()[r]; ++c) {
      den *= (s.rows()[r] - c - 1) + (s.column_length(c) - r - 1) + 1;
    }
  }
  if (num % den != 0) throw std::logic_error("hook quotient is not an integer");
  return static_cast<std::uint64_t>(num / den);
}

std::uint64_t count_tableaux_max_rows(std::size_t n, std::size_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (const Shape& s : shapes_of_order(n, k)) total += hook_count(s);
  boost::multiprecision::cpp_int fact = 1;
  for (std::size_t i = 2; i < k; ++i) fact *= i;
  if (boost::multiprecision::cpp_int(total) * fact > boost::multiprecision::pow(boost::multiprecision::cpp_int(k), static_cast<unsigned>(n))) {
    throw std::logic_error("tableau count exceeds k^n/(k-1)!");
  }
  return total;
}

}  // namespace shirshov
