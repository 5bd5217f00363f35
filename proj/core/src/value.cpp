#include "collatz/value.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "collatz/errors.hpp"

namespace collatz {

std::string to_string(Value v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Value parse_value(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  Value v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal integer: " + std::string(text));
    }
    const auto digit = static_cast<Value>(c - '0');
    if (v > (kValueMax - digit) / 10) {
      throw std::out_of_range("integer exceeds 128 bits: " + std::string(text));
    }
    v = v * 10 + digit;
  }
  return v;
}

std::ostream& operator<<(std::ostream& os, Value v) { return os << to_string(v); }

NonConvergenceError::NonConvergenceError(std::string start, std::uint64_t cap,
                                         std::uint64_t steps_needed)
    : std::runtime_error("n=" + start + " did not reach 1 within " +
                         std::to_string(cap) + " steps" +
                         (steps_needed ? " (needs " + std::to_string(steps_needed) + ")" : "")),
      start_(std::move(start)),
      cap_(cap),
      steps_needed_(steps_needed) {}

}  // namespace collatz
