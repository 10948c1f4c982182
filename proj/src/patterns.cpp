#include <algorithm>
#include <stdexcept>

#include "shirshov/words.hpp"

namespace shirshov {

namespace {

struct Binding {
  std::size_t start = 0;
  std::size_t length = 0;  // 0 = unbound
};

class PatternMatcher {
 public:
  PatternMatcher(const Word& pattern, const Word& host)
      : pattern_(pattern.letters()), host_(host.letters()), bindings_(pattern.alphabet().size() + 1) {}

  bool occurs() {
    for (std::size_t s = 0; s < host_.size(); ++s) {
      if (match(0, s)) return true;
    }
    return false;
  }

 private:
  // Remaining pattern letters each need at least one host letter.
  bool match(std::size_t pi, std::size_t hi) {
    if (pi == pattern_.size()) return true;
    if (host_.size() - hi < pattern_.size() - pi) return false;
    Binding& b = bindings_[pattern_[pi]];
    if (b.length != 0) {
      if (hi + b.length > host_.size()) return false;
      if (!std::equal(host_.begin() + static_cast<std::ptrdiff_t>(b.start),
                      host_.begin() + static_cast<std::ptrdiff_t>(b.start + b.length),
                      host_.begin() + static_cast<std::ptrdiff_t>(hi))) {
        return false;
      }
      return match(pi + 1, hi + b.length);
    }
    const std::size_t room = host_.size() - hi - (pattern_.size() - pi - 1);
    for (std::size_t len = 1; len <= room; ++len) {
      b = {hi, len};
      if (match(pi + 1, hi + len)) return true;
    }
    b = {};
    return false;
  }

  std::span<const Letter> pattern_;
  std::span<const Letter> host_;
  std::vector<Binding> bindings_;
};

}  // namespace

bool pattern_occurs(const Word& pattern, const Word& host) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  if (host.size() < pattern.size()) return false;
  return PatternMatcher(pattern, host).occurs();
}

}  // namespace shirshov
