// Monomial algebras given by finitely many forbidden words: growth
// functions, the subword graph and its cycle structure, and subword
// complexity of finite words.

#ifndef SHIRSHOV_GROWTH_HPP
#define SHIRSHOV_GROWTH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shirshov/words.hpp"

namespace shirshov {

class MonomialAlgebraSpec {
 public:
  // Drops duplicates and every forbidden word that contains another one.
  // Throws std::invalid_argument on an empty forbidden word or an alphabet
  // mismatch.
  MonomialAlgebraSpec(Alphabet alphabet, std::vector<Word> forbidden);

  // First non-blank line: the alphabet size; then one forbidden word per
  // line.  '#' starts a comment.
  static MonomialAlgebraSpec parse(const std::string& text);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& forbidden() const noexcept { return forbidden_; }
  // No forbidden factor.
  bool allowed(const Word& w) const;
  // max forbidden length - 1, at least 1.
  std::size_t window() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> forbidden_;
};

struct SubwordGraph {
  std::size_t m;
  std::vector<Word> vertices;
  // Edges (u, v): the merge of u and v along m-1 letters is allowed.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Throws std::length_error beyond max_vertices candidate windows.
  static SubwordGraph build(const MonomialAlgebraSpec& spec, std::size_t max_vertices = 1'000'000);
};

using BigCount = boost::multiprecision::cpp_int;

// V(0..n): the number of allowed words of length at most k.  Transfer over
// the subword graph; throws std::length_error when n exceeds cap.
std::vector<BigCount> growth_function(const MonomialAlgebraSpec& spec, std::size_t n, std::size_t cap = 100'000);

// The same by enumerating allowed words; n <= 24.
std::vector<BigCount> growth_function_direct(const MonomialAlgebraSpec& spec, std::size_t n);

struct GrowthClass {
  bool exponential;
  // Polynomial degree (GK dimension) when not exponential.
  std::size_t degree;
  // Strongly connected components carrying at least one cycle.
  std::size_t cyclic_components;
};

// Exponential iff some component has more internal edges than vertices;
// that test and the test for a vertex with two internal out-edges must agree
// (std::logic_error otherwise).  Otherwise the degree is the largest number
// of cyclic components on one path of the condensation.
GrowthClass classify_growth(const MonomialAlgebraSpec& spec);

std::string to_string(const GrowthClass& g);

// log V(n) / log n; n >= 8.
double gk_dimension_estimate(const MonomialAlgebraSpec& spec, std::size_t n);

// p_w(1..n): distinct factors of each length.
std::vector<std::size_t> complexity_function(const Word& w, std::size_t n);

// Equal-length factors differ by at most one in the count of every letter.
bool is_balanced(const Word& w);

// Letters floor(alpha (i+1) + rho) - floor(alpha i + rho), i = 0..length-1,
// with 0 -> a and 1 -> b.  alpha = alpha_num/alpha_den in [0, 1],
// rho = rho_num/rho_den.
Word mechanical_word(long long alpha_num, long long alpha_den, long long rho_num, long long rho_den, std::size_t length);

}  // namespace shirshov

#endif  // SHIRSHOV_GROWTH_HPP
