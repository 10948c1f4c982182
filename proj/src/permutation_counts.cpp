#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "shirshov/tableaux.hpp"

namespace shirshov {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::string to_string(XiMethod m) {
  switch (m) {
    case XiMethod::enumerate: return "enumerate";
    case XiMethod::tableaux: return "tableaux";
    case XiMethod::closed3: return "closed3";
    case XiMethod::genfun: return "genfun";
  }
  return "?";
}

XiMethod parse_xi_method(const std::string& s) {
  if (s == "enumerate") return XiMethod::enumerate;
  if (s == "tableaux") return XiMethod::tableaux;
  if (s == "closed3") return XiMethod::closed3;
  if (s == "genfun") return XiMethod::genfun;
  throw std::invalid_argument("unknown counting method: " + s);
}

namespace {

cpp_int factorial(std::size_t n) {
  cpp_int f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

cpp_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

std::uint64_t xi_enumerate(std::size_t n, std::size_t k) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::uint64_t count = 0;
  std::vector<std::size_t> piles;
  do {
    // Longest strictly decreasing run via patience on negated values.
    piles.clear();
    for (std::size_t x : v) {
      auto it = std::lower_bound(piles.begin(), piles.end(), n + 1 - x);
      if (it == piles.end()) {
        piles.push_back(n + 1 - x);
      } else {
        *it = n + 1 - x;
      }
    }
    if (piles.size() <= k) ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

std::uint64_t xi_tableaux(std::size_t n, std::size_t k) {
  std::uint64_t total = 0;
  for (const Shape& s : shapes_of_order(n, k)) {
    const std::uint64_t f = hook_count(s);
    total += f * f;
  }
  return total;
}

using Series = std::vector<cpp_rational>;

Series multiply(const Series& a, const Series& b) {
  Series c(a.size(), cpp_rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Laplace expansion along the first row.
Series determinant(const std::vector<std::vector<Series>>& m, std::size_t degree) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Series det(degree + 1, cpp_rational(0));
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<std::vector<Series>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Series> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Series term = multiply(m[0][col], determinant(minor, degree));
    for (std::size_t d = 0; d <= degree; ++d) det[d] += (col % 2 == 0) ? term[d] : -term[d];
  }
  return det;
}

std::uint64_t xi_genfun(std::size_t n, std::size_t k) {
  const std::size_t degree = 2 * n + 2;
  std::vector<Series> b(k, Series(degree + 1, cpp_rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t m = 0; 2 * m + i <= degree; ++m) {
      b[i][2 * m + i] = cpp_rational(cpp_int(1), factorial(m) * factorial(m + i));
    }
  }
  std::vector<std::vector<Series>> mat(k, std::vector<Series>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) mat[i][j] = b[i > j ? i - j : j - i];
  }
  const cpp_rational v = determinant(mat, degree)[2 * n] * factorial(n) * factorial(n);
  if (boost::multiprecision::denominator(v) != 1) throw std::logic_error("series coefficient is not an integer");
  return static_cast<std::uint64_t>(boost::multiprecision::numerator(v));
}

}  // namespace

std::vector<cpp_rational> xi3_terms(std::size_t n) {
  std::vector<cpp_rational> terms;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto K = static_cast<long long>(k);
    const auto N = static_cast<long long>(n);
    const cpp_int num = binomial(2 * k, k) * binomial(n, k) * binomial(n, k) * (3 * K * K + 2 * K + 1 - N - 2 * K * N);
    const cpp_int den = cpp_int(K + 1) * (K + 1) * (K + 2) * (N - K + 1);
    terms.emplace_back(num, den);
  }
  return terms;
}

std::uint64_t xi_count(std::size_t n, std::size_t k, XiMethod method) {
  switch (method) {
    case XiMethod::enumerate:
      if (n > 10) throw std::invalid_argument("enumeration limited to n <= 10");
      return xi_enumerate(n, k);
    case XiMethod::tableaux:
      if (n > 20) throw std::invalid_argument("tableau count limited to n <= 20");
      return xi_tableaux(n, k);
    case XiMethod::closed3: {
      if (k != 3) throw std::invalid_argument("closed formula exists for k = 3 only");
      cpp_rational sum = 0;
      for (const auto& t : xi3_terms(n)) sum += t;
      sum *= 2;
      if (boost::multiprecision::denominator(sum) != 1) throw std::logic_error("closed formula is not an integer");
      return static_cast<std::uint64_t>(boost::multiprecision::numerator(sum));
    }
    case XiMethod::genfun:
      if (k == 0 || k > 6 || n > 12) throw std::invalid_argument("series method limited to 1 <= k <= 6, n <= 12");
      return xi_genfun(n, k);
  }
  throw std::invalid_argument("unknown counting method");
}

cpp_rational xi_bound(std::size_t n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("xi bound needs k >= 1");
  const cpp_int f = factorial(k - 1);
  return cpp_rational(boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(2 * n)), f * f);
}

std::uint64_t multilinear_word_count(std::size_t l, std::size_t n, std::size_t k) {
  if (n > l) throw std::invalid_argument("multilinear words need n <= l");
  if (k == 0) throw std::invalid_argument("multilinear count needs k >= 1");
  const cpp_int count = binomial(l, n) * xi_count(n, k, XiMethod::tableaux);
  const cpp_int fk = factorial(k - 1);
  const cpp_rational bound(factorial(l) * boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(2 * n)),
                           factorial(n) * factorial(l - n) * fk * fk);
  if (cpp_rational(count) > bound) throw std::logic_error("multilinear count exceeds its bound");
  return static_cast<std::uint64_t>(count);
}

}  // namespace shirshov
