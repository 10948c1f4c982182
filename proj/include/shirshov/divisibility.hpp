// n-divisibility in the ordinary, tail and strong senses, (n,d)-reducibility
// and the exhaustive oracles built on them.

#ifndef SHIRSHOV_DIVISIBILITY_HPP
#define SHIRSHOV_DIVISIBILITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shirshov/bounds.hpp"
#include "shirshov/words.hpp"

namespace shirshov {

// Raised when an exhaustive search exceeds its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes) : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

enum class DivisibilitySense { ordinary, tail, strong };

std::string to_string(DivisibilitySense s);
DivisibilitySense parse_sense(const std::string& s);

// Half-open range [begin, end) of host positions.
struct Block {
  std::size_t begin;
  std::size_t end;
  friend bool operator==(const Block&, const Block&) = default;
};

struct DivisibilityWitness {
  DivisibilitySense kind;
  std::vector<Block> blocks;
  // Strong sense only: index into the power set used by each block.
  std::vector<std::size_t> powers_used;
};

// Checks a witness against the invariants of its kind.  `powers` is required
// for the strong kind.
bool validate_witness(const Word& host, const DivisibilityWitness& witness,
                      const std::optional<std::vector<Word>>& powers = std::nullopt);

// Searches for an n-division.
//  ordinary: host = v u_1 ... u_n with u_1 > ... > u_n.
//  tail:     tails u_1 > ... > u_n with strictly increasing starts; with d
//            given, only tails starting in the first floor(|host|/d)
//            positions are used.
//  strong:   host = W_0 W_1 ... W_n with W_1 > ... > W_n, each W_i starting
//            with an element of `powers`, the primitive roots of the chosen
//            elements pairwise distinct.
// Witness choice is deterministic (leftmost first block, shortest blocks).
// Throws std::invalid_argument when powers is missing for the strong sense.
std::optional<DivisibilityWitness> is_n_divisible(const Word& w, std::size_t n, DivisibilitySense sense,
                                                  const std::optional<std::vector<Word>>& powers = std::nullopt,
                                                  std::optional<std::size_t> d = std::nullopt);

// Ordinary n-divisible or containing some u^d.
bool is_nd_reducible(const Word& w, std::size_t n, std::size_t d);

// {z^k : z primitive, |z| = root_length} over the alphabet.
std::vector<Word> primitive_powers(Alphabet alphabet, std::size_t root_length, std::size_t k);

struct NonReducibleResult {
  BoundParams params;
  std::size_t length;
  Word witness;  // lexicographically least word of maximal length
  std::uint64_t nodes_explored;
  BigInt psi;
  BigInt psi_log2;
};

// Exact maximum length of a word over l letters that is not
// (n,d)-reducible, by depth-first search over the word tree.  Asserts the
// result is below both psi bounds (std::logic_error otherwise).
// Throws BudgetExceeded when more than `budget` nodes are visited.
NonReducibleResult max_nonreducible_length(std::size_t n, std::size_t d, std::size_t l,
                                           std::uint64_t budget = 10'000'000);

// Sequences of 0/1 words of length k-1 with a single 1, such that among any
// p words with the 1 at position s there is, between the first and the
// p-th, a word with the 1 strictly left of s.
struct ProcessSequence {
  std::size_t length;
  // Position (0-based) of the 1 in each word of one longest sequence.
  std::vector<std::size_t> ones;
  std::uint64_t states_explored;

  std::vector<std::string> as_words(std::size_t k) const;
};

// Checks the condition above on an explicit sequence.
bool process_condition_holds(const std::vector<std::size_t>& ones, std::size_t p, std::size_t k);

// Longest such sequence.  Asserts length <= p^{k-1} - 1.
ProcessSequence max_process_sequence_length(std::size_t p, std::size_t k, std::uint64_t budget = 10'000'000);

}  // namespace shirshov

#endif  // SHIRSHOV_DIVISIBILITY_HPP
