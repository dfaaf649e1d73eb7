#include "motifcount/count.hpp"

#include <algorithm>

namespace motifcount {

std::string to_string(Count value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the negative range so the minimum value is representable.
  if (!negative) value = -value;
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(value % 10)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count parse_count(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty count");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("count has no digits");
  Count value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("non-digit in count: " + std::string(text));
    Count next;
    if (__builtin_mul_overflow(value, Count{10}, &next) ||
        __builtin_sub_overflow(next, Count{c - '0'}, &next)) {
      throw std::invalid_argument("count out of range: " + std::string(text));
    }
    value = next;
  }
  if (!negative) {
    if (value == -value && value != 0) throw std::invalid_argument("count out of range: " + std::string(text));
    value = -value;
  }
  return value;
}

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit count overflow in addition");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit count overflow in multiplication");
  return r;
}

}  // namespace motifcount
