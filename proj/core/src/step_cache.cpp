#include "collatz/step_cache.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace collatz {

namespace {

// Slots are indexed directly by value; keep the table addressable.
constexpr Value kMaxCacheBound = Value{1} << 40;

}  // namespace

StepCache::StepCache(Value bound) : bound_(bound) {
  if (bound_ > kMaxCacheBound) throw std::length_error("StepCache bound too large");
  const auto slots = static_cast<std::size_t>(bound_);
  steps_plus_one_ = std::make_unique<std::atomic<std::uint64_t>[]>(slots);
  peak_ = std::make_unique<std::atomic<std::uint64_t>[]>(slots);
  for (std::size_t i = 0; i < slots; ++i) {
    steps_plus_one_[i].store(0, std::memory_order_relaxed);
    peak_[i].store(0, std::memory_order_relaxed);
  }
  store(1, OrbitSummary{0, 1});
}

std::optional<OrbitSummary> StepCache::find(Value n) const {
  if (n >= bound_) return std::nullopt;
  const auto i = static_cast<std::size_t>(n);
  const std::uint64_t s = steps_plus_one_[i].load(std::memory_order_acquire);
  if (s == 0) return std::nullopt;
  return OrbitSummary{s - 1, peak_[i].load(std::memory_order_relaxed)};
}

void StepCache::store(Value n, OrbitSummary summary) {
  if (n >= bound_ || !fits_u64(summary.peak)) return;
  if (summary.steps == std::numeric_limits<std::uint64_t>::max()) return;
  const auto i = static_cast<std::size_t>(n);
  peak_[i].store(static_cast<std::uint64_t>(summary.peak), std::memory_order_relaxed);
  steps_plus_one_[i].store(summary.steps + 1, std::memory_order_release);
}

OrbitSummary orbit_summary(Value n, StepCache& cache, std::uint64_t step_cap) {
  if (n < 1) throw std::domain_error("orbit_summary: argument must be >= 1");

  std::vector<Value> path;
  OrbitSummary tail{0, 1};
  Value x = n;
  while (x != 1) {
    if (auto hit = cache.find(x)) {
      tail = *hit;
      break;
    }
    if (path.size() == step_cap) throw NonConvergenceError(to_string(n), step_cap);
    path.push_back(x);
    x = forward_step(x);
  }

  const std::uint64_t total = path.size() + tail.steps;
  if (total > step_cap) throw NonConvergenceError(to_string(n), step_cap, total);

  OrbitSummary acc = tail;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    ++acc.steps;
    acc.peak = std::max(acc.peak, *it);
    cache.store(*it, acc);
  }
  return acc;
}

std::uint64_t total_steps(Value n, StepCache& cache, std::uint64_t step_cap) {
  return orbit_summary(n, cache, step_cap).steps;
}

std::uint64_t total_steps(Value n, std::uint64_t step_cap) {
  return trajectory(n, step_cap).steps;
}

}  // namespace collatz
