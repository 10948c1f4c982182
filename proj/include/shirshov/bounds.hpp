// Closed-form bounds on heights and nilpotency-type lengths, evaluated as
// exact integers.
//
// Square brackets in the source formulas are floors and the corner brackets
// are ceilings.  Logarithms are resolved with integer power comparisons
// whenever the argument is an exact power of the base, which makes the whole
// expression an integer.  Otherwise the value is irrational and its ceiling
// is taken from an MPFR evaluation whose precision scales with the magnitude;
// two precisions must agree or the evaluator throws.

#ifndef SHIRSHOV_BOUNDS_HPP
#define SHIRSHOV_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace shirshov {

using BigInt = boost::multiprecision::cpp_int;

struct BoundParams {
  std::size_t n;  // degree
  std::size_t d;  // power threshold
  std::size_t l;  // alphabet size

  // Throws std::invalid_argument unless n >= 2, d >= 2, l >= 1.
  void validate() const;
};

// Exponent j with base^j == x, if any.
std::optional<std::size_t> exact_log(std::uint64_t base, std::uint64_t x);

// Smallest j with base^j >= x (x >= 1).
std::size_t ceil_log(std::uint64_t base, std::uint64_t x);

// 2^27 l (nd)^{3 log_3(nd) + 9 log_3 log_3(nd) + 36};  nd >= 3.
BigInt psi_bound(const BoundParams& p);

// 256 l (nd)^{2 log_2(nd) + 10} d^2.
BigInt psi_log2_bound(const BoundParams& p);

// 2^96 l n^{12 log_3 n + 36 log_3 log_3 n + 91};  n >= 3.
BigInt phi_bound(std::size_t n, std::size_t l);

// 2 n^{3 ceil(log_3 n) + 4} l.
BigInt upsilon_bound(std::size_t n, std::size_t l);

// 8 (l+1)^n n^5 (n-1).
BigInt upsilon_coding_bound(std::size_t n, std::size_t l);

// floor(3/2 (n+1) d (log_3(nd) + 2)).
BigInt p_nd(std::size_t n, std::size_t d);

// n - 1.
std::size_t q_n(std::size_t n);

enum class PeriodFamily { two, three, degree_minus_one };

// Upper bounds on the small selective height of non-strongly-n-divisible
// words over periods of length 2, 3 and n-1:
//   (2l-1)(n-1)(n-2)/2,  (2l-1)(n-1)(n-2),  (l-2)(n-1).
// Requires n >= 3.
BigInt beth_bound(PeriodFamily family, std::size_t l, std::size_t n);

// (l - 2^{n-1})(n-2)(n-3)/2; negative when l is small.  Requires n >= 3.
BigInt alpha_lower(std::size_t n, std::size_t l);

}  // namespace shirshov

#endif  // SHIRSHOV_BOUNDS_HPP
