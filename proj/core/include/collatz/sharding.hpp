#pragma once

#include <cstdint>
#include <vector>

#include "collatz/value.hpp"

namespace collatz {

// Closed vertex range [lo, hi].
struct RangeShard {
  Value lo;
  Value hi;

  bool contains(Value v) const { return lo <= v && v <= hi; }
  Value size() const { return hi - lo + 1; }

  friend bool operator==(const RangeShard&, const RangeShard&) = default;
};

// Splits [1, n] into min(count, n) contiguous shards whose sizes differ by at
// most one. Empty for n == 0.
std::vector<RangeShard> make_shards(Value n, unsigned count);

}  // namespace collatz
