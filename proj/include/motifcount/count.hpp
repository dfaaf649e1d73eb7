#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace motifcount {

// Exact pattern counts. 5-vertex counts on desk-scale graphs already pass
// 2^63, and the disconnected polynomials reach n^5.
using Count = __int128;

std::string to_string(Count value);

// Parses an optionally signed decimal string. Throws std::invalid_argument.
Count parse_count(std::string_view text);

// Binomial coefficient C(x, k) for k <= 5; zero when x < k.
constexpr Count choose(Count x, int k) {
  if (x < k || k < 0) return 0;
  Count r = 1;
  for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
  return r;
}

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

// Raised when a derived induced count is negative or two counting routes
// disagree. Carries the offending pattern id when known.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a requested computation would exceed a configured budget
// (triangle-list memory, oracle subset count).
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace motifcount
