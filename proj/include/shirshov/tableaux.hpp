// Young diagrams, Schensted insertion, the RSK correspondence and counts of
// permutations without long decreasing subsequences.

#ifndef SHIRSHOV_TABLEAUX_HPP
#define SHIRSHOV_TABLEAUX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shirshov/permutation.hpp"

namespace shirshov {

class Shape {
 public:
  // Throws std::invalid_argument unless rows are positive and weakly
  // decreasing.
  explicit Shape(std::vector<std::size_t> rows);

  const std::vector<std::size_t>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t order() const noexcept { return order_; }
  // Length of column c (0-based).
  std::size_t column_length(std::size_t c) const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<std::size_t> rows_;
  std::size_t order_;
};

// Partitions of n with at most max_rows parts, in reverse lexicographic
// order ((n) first).
std::vector<Shape> shapes_of_order(std::size_t n, std::size_t max_rows);

// 1-based (row, column).
struct Cell {
  std::size_t row;
  std::size_t column;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Distinct positive integers in a Young diagram, strictly increasing along
// rows and down columns.
class Tableau {
 public:
  Tableau() = default;
  // Throws std::invalid_argument when the filling breaks the rules above.
  explicit Tableau(std::vector<std::vector<std::size_t>> rows);

  const std::vector<std::vector<std::size_t>>& rows() const noexcept { return rows_; }
  Shape shape() const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  bool contains(std::size_t x) const;
  // Entries are exactly 1..size().
  bool is_standard() const;
  std::size_t at(Cell c) const { return rows_.at(c.row - 1).at(c.column - 1); }

  // One row per line, entries right-aligned to a common width.
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  friend std::pair<Tableau, Cell> schensted_insert(const Tableau& t, std::size_t x);
  std::vector<std::vector<std::size_t>> rows_;
};

// Row insertion: x goes to the end of the row when it exceeds every entry,
// otherwise it replaces the least larger entry, which moves to the next row.
// Throws std::invalid_argument when x is already present or zero.
std::pair<Tableau, Cell> schensted_insert(const Tableau& t, std::size_t x);

struct RskPair {
  Tableau P;
  Tableau Q;
};

RskPair rsk(const Permutation& pi);

// Throws std::invalid_argument on a shape mismatch or non-standard input.
Permutation rsk_inverse(const Tableau& P, const Tableau& Q);

// Forward insertion for a sequence with repeated values: bumps the least
// strictly larger entry.  P is semistandard, Q standard.
std::pair<std::vector<std::vector<std::size_t>>, Tableau> rsk_forward_word(const std::vector<std::size_t>& values);

// n! / product of hook lengths.
std::uint64_t hook_count(const Shape& s);

// Sum of hook_count over shapes of order n with at most k rows; n <= 20.
// Throws std::logic_error if it exceeds k^n/(k-1)!.
std::uint64_t count_tableaux_max_rows(std::size_t n, std::size_t k);

enum class XiMethod { enumerate, tableaux, closed3, genfun };

std::string to_string(XiMethod m);
XiMethod parse_xi_method(const std::string& s);

// Permutations of n with no decreasing subsequence of length k+1.
//  enumerate: over S_n, n <= 10.
//  tableaux:  sum of hook_count^2 over shapes with <= k rows, n <= 20.
//  closed3:   the exact rational formula for k = 3.
//  genfun:    coefficient of x^{2n}/(n!)^2 in det(b_{|i-j|})_{k x k},
//             b_i = sum_m x^{2m+i}/(m!(m+i)!), series cut at degree 2n+2;
//             k <= 6, n <= 12.
// Throws std::invalid_argument outside a method's domain.
std::uint64_t xi_count(std::size_t n, std::size_t k, XiMethod method);

// The closed3 sum before doubling, each term exact.
std::vector<boost::multiprecision::cpp_rational> xi3_terms(std::size_t n);

// C(l, n) xi_k(n); checks it against l! k^{2n} / (n! (l-n)! ((k-1)!)^2).
// Throws std::invalid_argument when n > l.
std::uint64_t multilinear_word_count(std::size_t l, std::size_t n, std::size_t k);

// k^{2n} / ((k-1)!)^2.
boost::multiprecision::cpp_rational xi_bound(std::size_t n, std::size_t k);

}  // namespace shirshov

#endif  // SHIRSHOV_TABLEAUX_HPP
