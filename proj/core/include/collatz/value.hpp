#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace collatz {

// Vertex labels and orbit values. Every arithmetic step on Value goes through
// the checked helpers below; wraparound is never silent.
using Value = unsigned __int128;

// Arbitrary-precision alternative for trajectory queries that outgrow 128 bits.
using BigValue = boost::multiprecision::cpp_int;

inline constexpr Value kValueMax = std::numeric_limits<Value>::max();

std::string to_string(Value v);

// Parses a decimal string. Throws std::invalid_argument on malformed input
// and std::out_of_range when the value does not fit in 128 bits.
Value parse_value(std::string_view text);

std::ostream& operator<<(std::ostream& os, Value v);

struct ValueHash {
  std::size_t operator()(Value v) const noexcept {
    auto lo = static_cast<std::uint64_t>(v);
    auto hi = static_cast<std::uint64_t>(v >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

// Narrowing that refuses to lose bits.
inline bool fits_u64(Value v) { return v <= std::numeric_limits<std::uint64_t>::max(); }

}  // namespace collatz
