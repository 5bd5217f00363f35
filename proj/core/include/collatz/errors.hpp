#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "collatz/value.hpp"

namespace collatz {

// Arithmetic left the configured integer width.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// The orbit did not reach 1 within the step cap. Either the cap is too small
// or `start` is a counterexample candidate.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(std::string start, std::uint64_t cap, std::uint64_t steps_needed = 0);

  // Decimal text of the starting value (it may not fit in Value).
  const std::string& start() const { return start_; }
  std::uint64_t cap() const { return cap_; }
  // Exact step count when it is known to exceed the cap, 0 otherwise.
  std::uint64_t steps_needed() const { return steps_needed_; }

 private:
  std::string start_;
  std::uint64_t cap_;
  std::uint64_t steps_needed_;
};

// A structural invariant of a generated object failed (e.g. a vertex was
// emitted twice while building the level tree).
class StructuralViolation : public std::logic_error {
 public:
  explicit StructuralViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace collatz
