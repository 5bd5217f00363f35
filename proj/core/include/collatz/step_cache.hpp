#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>

#include "collatz/core_maps.hpp"
#include "collatz/value.hpp"

namespace collatz {

struct OrbitSummary {
  std::uint64_t steps;
  Value peak;

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

// Step counts (and orbit peaks) for values below a fixed bound, shareable
// across worker threads.
//
// Writes are idempotent: a key always maps to the same summary, so racing
// writers store identical bits and last-writer-wins is correct. A slot is
// published by its step word (release); the peak word is written first.
class StepCache {
 public:
  explicit StepCache(Value bound);

  StepCache(const StepCache&) = delete;
  StepCache& operator=(const StepCache&) = delete;

  // Values strictly below bound() are cacheable.
  Value bound() const { return bound_; }

  std::optional<OrbitSummary> find(Value n) const;
  void store(Value n, OrbitSummary summary);

 private:
  Value bound_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> steps_plus_one_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> peak_;
};

// Steps and peak of the orbit of n, filling `cache` along the way. Throws
// NonConvergenceError when more than step_cap steps are needed and
// OverflowError when an orbit leaves the 128-bit range.
OrbitSummary orbit_summary(Value n, StepCache& cache, std::uint64_t step_cap = kDefaultStepCap);

// Memoized equivalent of trajectory(n, step_cap).steps.
std::uint64_t total_steps(Value n, StepCache& cache, std::uint64_t step_cap = kDefaultStepCap);

// Uncached equivalent.
std::uint64_t total_steps(Value n, std::uint64_t step_cap = kDefaultStepCap);

}  // namespace collatz
