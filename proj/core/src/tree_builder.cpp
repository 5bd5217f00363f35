#include "collatz/tree_builder.hpp"

#include <stdexcept>
#include <string>

namespace collatz {

namespace {

std::string describe(TreeLocation l) {
  return "level " + std::to_string(l.level) + " position " + std::to_string(l.index);
}

}  // namespace

DuplicateVertexError::DuplicateVertexError(Value vertex, TreeLocation first, TreeLocation second)
    : StructuralViolation("vertex " + to_string(vertex) + " generated twice: " + describe(first) +
                          " and " + describe(second)),
      vertex_(vertex),
      first_(first),
      second_(second) {}

TreeSlice::TreeSlice() : levels_{{1}}, parents_{{}} { index_.emplace(1, TreeLocation{0, 0}); }

void TreeSlice::append_level(std::vector<Value> vertices, std::vector<Value> parents) {
  if (vertices.size() != parents.size()) {
    throw std::invalid_argument("append_level: vertices and parents differ in length");
  }
  const auto k = static_cast<std::uint32_t>(levels_.size());
  std::vector<std::pair<Value, TreeLocation>> added;
  added.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const TreeLocation here{k, i};
    auto [it, inserted] = index_.emplace(vertices[i], here);
    if (!inserted) {
      const TreeLocation first = it->second;
      for (const auto& a : added) index_.erase(a.first);
      throw DuplicateVertexError(vertices[i], first, here);
    }
    added.emplace_back(vertices[i], here);
  }
  for (Value v : vertices) max_vertex_ = std::max(max_vertex_, v);
  levels_.push_back(std::move(vertices));
  parents_.push_back(std::move(parents));
}

std::optional<TreeLocation> TreeSlice::locate(Value v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Value> TreeSlice::parent_of(Value v) const {
  auto loc = locate(v);
  if (!loc || loc->level == 0) return std::nullopt;
  return parents_[loc->level][loc->index];
}

TreeSlice build_levels(std::uint32_t height, unsigned threads) {
  return expand_levels(height, [](Value v) { return inverse_successors(v); }, threads);
}

std::uint64_t level_of(Value n, std::uint64_t step_cap) { return trajectory(n, step_cap).steps; }

std::vector<LevelPopulation> level_populations_oracle(std::uint32_t max_level, Value search_bound) {
  if (max_level >= 127) throw std::out_of_range("level_populations_oracle: level too large");
  std::vector<LevelPopulation> out;
  for (std::uint32_t k = 0; k <= max_level; ++k) {
    const Value required = Value{1} << k;
    out.push_back({k, {}, search_bound >= required, required});
  }
  for (Value n = 1; n <= search_bound; ++n) {
    Value x = n;
    std::uint32_t steps = 0;
    while (x != 1 && steps <= max_level) {
      x = forward_step(x);
      ++steps;
    }
    if (x == 1 && steps <= max_level) out[steps].vertices.push_back(n);
  }
  return out;
}

LevelPopulation level_population_oracle(std::uint32_t k, Value search_bound) {
  auto all = level_populations_oracle(k, search_bound);
  return std::move(all.back());
}

std::vector<LayoutPoint> layout(const TreeSlice& slice) {
  std::vector<LayoutPoint> out;
  out.reserve(slice.vertex_count());
  for (std::uint32_t k = 0; k <= slice.height(); ++k) {
    const auto& lv = slice.level(k);
    for (std::size_t i = 0; i < lv.size(); ++i) out.push_back({lv[i], k, i});
  }
  return out;
}

}  // namespace collatz
