#pragma once

// Batch invariant checks over [1, N] and over tree slices. Violations are
// collected, never thrown: a non-convergent orbit is reported like any other
// finding.

#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/core_maps.hpp"
#include "collatz/sharding.hpp"
#include "collatz/step_cache.hpp"
#include "collatz/value.hpp"

namespace collatz {

struct Violation {
  Value vertex;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct CheckReport {
  std::string check;
  Value bound = 0;  // N for range checks, H for the tree check
  std::vector<Violation> violations;  // sorted
  std::map<std::string, Value> counts;
  double elapsed_ms = 0.0;

  bool passed() const { return violations.empty(); }
};

// Equal check, bound, violations and counts. Elapsed time is ignored.
bool same_outcome(const CheckReport& a, const CheckReport& b);

// Report as a single-line JSON object with keys in the order
// check, bound, passed, violations, counts, elapsed_ms. Integers that do not
// fit in 64 bits are written as decimal strings.
std::string to_json(const CheckReport& report, bool include_elapsed = true);

namespace checks {
inline constexpr std::string_view kConvergence = "convergence";
inline constexpr std::string_view kDegree = "degree";
inline constexpr std::string_view kDisjoint = "disjoint";
inline constexpr std::string_view kCoverage = "coverage";
inline constexpr std::string_view kTreeNoCycle = "tree_no_cycle";

inline constexpr std::string_view kAll[] = {kConvergence, kDegree, kDisjoint, kCoverage,
                                            kTreeNoCycle};
}  // namespace checks

// Every n <= max_n reaches 1 within step_cap steps. Counts: vertices,
// max_steps(_at), max_peak(_at). Uses `cache` when given, otherwise a private
// cache over [1, max_n].
CheckReport check_convergence(Value max_n, std::uint64_t step_cap, unsigned shards = 1,
                              StepCache* cache = nullptr);

// degree(v) equals |incident_edges(v)| for all v <= max_n, and the histogram
// matches its closed form.
CheckReport check_degree(Value max_n, unsigned shards = 1);

// The doubling and branch edge sets over the window share no pair.
CheckReport check_disjoint(Value max_n, unsigned shards = 1);

// Every n <= max_n lies on exactly one doubling chain and decomposes/composes
// back to itself.
CheckReport check_coverage(Value max_n, unsigned shards = 1);

// build_levels(height) emits no vertex twice, every non-root vertex maps to
// its parent one level down, and levels 0..min(height, oracle_levels) equal
// the forward-iteration scan.
CheckReport check_tree_no_cycle(std::uint32_t height, std::uint32_t oracle_levels = 20,
                                unsigned threads = 1);

struct VerifyOptions {
  Value max_n = 1'000'000;
  std::uint32_t levels = 40;
  std::uint64_t step_cap = kDefaultStepCap;
  unsigned shards = 1;
  std::uint32_t oracle_levels = 20;
  std::vector<std::string> checks =
      std::vector<std::string>(std::begin(collatz::checks::kAll), std::end(collatz::checks::kAll));
};

// Runs the selected checks in the fixed order of checks::kAll. Throws
// std::invalid_argument for unknown check names or max_n == 0.
std::vector<CheckReport> run_all(const VerifyOptions& options);

}  // namespace collatz
