#pragma once

// Level-by-level construction of the tree rooted at 1: level k+1 is the
// concatenation of the inverse successors of level k, doubling child first.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "collatz/core_maps.hpp"
#include "collatz/errors.hpp"
#include "collatz/value.hpp"

namespace collatz {

struct TreeLocation {
  std::uint32_t level;
  std::size_t index;

  friend bool operator==(const TreeLocation&, const TreeLocation&) = default;
};

// A vertex was generated a second time. In the inverse-map tree this would
// be a circuit through the root's component.
class DuplicateVertexError : public StructuralViolation {
 public:
  DuplicateVertexError(Value vertex, TreeLocation first, TreeLocation second);

  Value vertex() const { return vertex_; }
  TreeLocation first() const { return first_; }
  TreeLocation second() const { return second_; }

 private:
  Value vertex_;
  TreeLocation first_;
  TreeLocation second_;
};

class TreeSlice {
 public:
  // Level 0 only: [1].
  TreeSlice();

  // Appends the next level. parents[i] must be the vertex of the current top
  // level that generated vertices[i]. Throws DuplicateVertexError if any
  // vertex is already present in the slice; the slice is left unchanged.
  void append_level(std::vector<Value> vertices, std::vector<Value> parents);

  std::uint32_t height() const { return static_cast<std::uint32_t>(levels_.size() - 1); }
  const std::vector<std::vector<Value>>& levels() const { return levels_; }
  const std::vector<Value>& level(std::uint32_t k) const { return levels_.at(k); }
  // Generator of each vertex of level k (level 0 has an empty entry).
  const std::vector<Value>& parents(std::uint32_t k) const { return parents_.at(k); }

  std::optional<TreeLocation> locate(Value v) const;
  std::optional<Value> parent_of(Value v) const;

  std::size_t vertex_count() const { return index_.size(); }
  Value max_vertex() const { return max_vertex_; }

 private:
  std::vector<std::vector<Value>> levels_;
  std::vector<std::vector<Value>> parents_;
  std::unordered_map<Value, TreeLocation, ValueHash> index_;
  Value max_vertex_ = 1;
};

// Builds levels 0..height using `successors(v)` (anything returning a
// Successors) for the expansion. Each level is expanded in up to `threads`
// contiguous chunks and concatenated in order, so the result does not depend
// on the thread count.
template <class SuccessorFn>
TreeSlice expand_levels(std::uint32_t height, SuccessorFn&& successors, unsigned threads = 1) {
  TreeSlice slice;
  using Chunk = std::pair<std::vector<Value>, std::vector<Value>>;
  for (std::uint32_t k = 0; k < height; ++k) {
    const std::vector<Value>& top = slice.level(k);
    const std::size_t chunks = std::clamp<std::size_t>(threads, 1, top.size());
    const std::size_t per = (top.size() + chunks - 1) / chunks;

    auto expand = [&](std::size_t lo, std::size_t hi) {
      Chunk c;
      for (std::size_t i = lo; i < hi; ++i) {
        const Successors s = successors(top[i]);
        c.first.push_back(s.doubling);
        c.second.push_back(top[i]);
        if (s.branch) {
          c.first.push_back(*s.branch);
          c.second.push_back(top[i]);
        }
      }
      return c;
    };

    std::vector<std::future<Chunk>> jobs;
    for (std::size_t lo = 0; lo < top.size(); lo += per) {
      const std::size_t hi = std::min(top.size(), lo + per);
      jobs.push_back(std::async(chunks > 1 ? std::launch::async : std::launch::deferred, expand, lo, hi));
    }
    Chunk next;
    for (auto& j : jobs) {
      Chunk c = j.get();
      next.first.insert(next.first.end(), c.first.begin(), c.first.end());
      next.second.insert(next.second.end(), c.second.begin(), c.second.end());
    }
    slice.append_level(std::move(next.first), std::move(next.second));
  }
  return slice;
}

// The tree of the inverse map with 4 excluded from the branch values.
TreeSlice build_levels(std::uint32_t height, unsigned threads = 1);

// Distance of n from the root, i.e. its total step count.
std::uint64_t level_of(Value n, std::uint64_t step_cap = kDefaultStepCap);

struct LevelPopulation {
  std::uint32_t level;
  std::vector<Value> vertices;  // ascending
  // False when the scan bound is below the largest possible level member
  // (2^level); the list may then be missing vertices.
  bool complete;
  Value required_bound;
};

// All n <= search_bound whose orbit reaches 1 in exactly k steps, by direct
// forward iteration (no inverse map involved).
LevelPopulation level_population_oracle(std::uint32_t k, Value search_bound);

// Same for every level 0..max_level in one scan.
std::vector<LevelPopulation> level_populations_oracle(std::uint32_t max_level, Value search_bound);

struct LayoutPoint {
  Value vertex;
  std::uint32_t level;
  std::size_t horizontal_index;

  friend bool operator==(const LayoutPoint&, const LayoutPoint&) = default;
};

// One point per vertex: its level and build-order position within the level.
std::vector<LayoutPoint> layout(const TreeSlice& slice);

}  // namespace collatz
