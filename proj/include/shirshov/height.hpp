// Height and essential height of a word over a finite set of words.

#ifndef SHIRSHOV_HEIGHT_HPP
#define SHIRSHOV_HEIGHT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "shirshov/words.hpp"

namespace shirshov {

// Least r with w = y_1^{k_1} ... y_r^{k_r}, y_i in Y, k_i >= 1; nullopt when
// no such product exists.  Throws std::invalid_argument on an empty Y or an
// empty element.
std::optional<std::size_t> word_height(const Word& w, const std::vector<Word>& Y);

// Least h with w = c_0 y_1^{k_1} c_1 ... y_h^{k_h} c_h, y_i in Y,
// k_i >= min_exponent and |c_j| <= pad; nullopt when impossible.
std::optional<std::size_t> essential_height(const Word& w, const std::vector<Word>& Y, std::size_t pad,
                                            std::size_t min_exponent = 2);

}  // namespace shirshov

#endif  // SHIRSHOV_HEIGHT_HPP
