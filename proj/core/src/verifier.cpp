#include "collatz/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <memory>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "collatz/forests.hpp"
#include "collatz/tree_builder.hpp"

namespace collatz {

namespace {

using Clock = std::chrono::steady_clock;

// Partial results of one shard. Sums merge additively, maxima keep the larger
// value (smaller vertex on ties), so merged shards equal an unsharded run.
struct Tally {
  std::vector<Violation> violations;
  std::map<std::string, Value> sums;
  std::map<std::string, std::pair<Value, Value>> maxima;

  void add(const std::string& key, Value v = 1) { sums[key] += v; }

  void max(const std::string& key, Value v, Value at) {
    auto [it, inserted] = maxima.try_emplace(key, v, at);
    if (inserted) return;
    auto& [best, best_at] = it->second;
    if (v > best || (v == best && at < best_at)) it->second = {v, at};
  }

  void flag(Value vertex, std::string detail) { violations.push_back({vertex, std::move(detail)}); }

  void merge(Tally&& other) {
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
    for (auto& [k, v] : other.sums) sums[k] += v;
    for (auto& [k, v] : other.maxima) max(k, v.first, v.second);
  }

  CheckReport finish(std::string_view name, Value bound, Clock::time_point started) && {
    CheckReport r;
    r.check = std::string(name);
    r.bound = bound;
    r.violations = std::move(violations);
    std::sort(r.violations.begin(), r.violations.end());
    r.counts = std::move(sums);
    for (auto& [k, v] : maxima) {
      r.counts[k] = v.first;
      r.counts[k + "_at"] = v.second;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return r;
  }
};

template <class Scan>
Tally run_sharded(Value max_n, unsigned shards, Scan scan) {
  std::vector<std::future<Tally>> jobs;
  for (const RangeShard& s : make_shards(max_n, std::max(shards, 1u))) {
    jobs.push_back(std::async(shards > 1 ? std::launch::async : std::launch::deferred, scan, s));
  }
  Tally total;
  for (auto& j : jobs) total.merge(j.get());
  return total;
}

std::string pad2(std::uint32_t k) { return (k < 10 ? "0" : "") + std::to_string(k); }

nlohmann::ordered_json json_value(Value v) {
  if (fits_u64(v)) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

}  // namespace

bool same_outcome(const CheckReport& a, const CheckReport& b) {
  return a.check == b.check && a.bound == b.bound && a.violations == b.violations &&
         a.counts == b.counts;
}

std::string to_json(const CheckReport& report, bool include_elapsed) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["bound"] = json_value(report.bound);
  j["passed"] = report.passed();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json item;
    item["vertex"] = json_value(v.vertex);
    item["detail"] = v.detail;
    j["violations"].push_back(std::move(item));
  }
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.counts) j["counts"][k] = json_value(v);
  if (include_elapsed) j["elapsed_ms"] = report.elapsed_ms;
  return j.dump();
}

CheckReport check_convergence(Value max_n, std::uint64_t step_cap, unsigned shards,
                              StepCache* cache) {
  const auto started = Clock::now();
  std::unique_ptr<StepCache> owned;
  if (cache == nullptr) {
    owned = std::make_unique<StepCache>(max_n + 1);
    cache = owned.get();
  }
  Tally t = run_sharded(max_n, shards, [&](RangeShard s) {
    Tally part;
    for (Value n = s.lo; n <= s.hi; ++n) {
      part.add("vertices");
      try {
        const OrbitSummary o = orbit_summary(n, *cache, step_cap);
        part.max("max_steps", o.steps, n);
        part.max("max_peak", o.peak, n);
      } catch (const NonConvergenceError& e) {
        part.flag(n, "did not reach 1 within " + std::to_string(e.cap()) + " steps");
      } catch (const OverflowError& e) {
        part.flag(n, std::string("orbit leaves 128-bit range: ") + e.what());
      }
    }
    return part;
  });
  return std::move(t).finish(checks::kConvergence, max_n, started);
}

CheckReport check_degree(Value max_n, unsigned shards) {
  const auto started = Clock::now();
  Tally t = run_sharded(max_n, shards, [](RangeShard s) {
    Tally part;
    for (Value v = s.lo; v <= s.hi; ++v) {
      const int d = degree(v);
      const std::vector<Edge> inc = incident_edges(v);
      part.add("degree_" + std::to_string(d));
      if (inc.size() != static_cast<std::size_t>(d)) {
        part.flag(v, "degree " + std::to_string(d) + " but " + std::to_string(inc.size()) +
                         " incident edges");
      }
      for (std::size_t i = 0; i < inc.size(); ++i) {
        if (!inc[i].touches(v) || !inc[i].well_formed()) part.flag(v, "malformed incident edge");
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          if (inc[i].lo() == inc[j].lo() && inc[i].hi() == inc[j].hi()) {
            part.flag(v, "incident edge listed twice");
          }
        }
      }
    }
    return part;
  });

  // Closed form: one root, floor((N-4)/6) branch values, the rest degree 2.
  const Value branch = max_n >= 4 ? (max_n - 4) / 6 : 0;
  const Value roots = max_n >= 1 ? 1 : 0;
  const Value twos = max_n - branch - roots;
  auto count = [&](const char* key) {
    auto it = t.sums.find(key);
    return it == t.sums.end() ? Value{0} : it->second;
  };
  if (count("degree_1") != roots || count("degree_3") != branch || count("degree_2") != twos) {
    t.flag(max_n, "degree histogram differs from closed form (1:" + to_string(roots) +
                      ", 2:" + to_string(twos) + ", 3:" + to_string(branch) + ")");
  }
  return std::move(t).finish(checks::kDegree, max_n, started);
}

CheckReport check_disjoint(Value max_n, unsigned shards) {
  const auto started = Clock::now();
  Tally t;

  struct Sets {
    std::vector<Edge> fh, fb;
  };
  std::vector<std::future<Sets>> jobs;
  for (const RangeShard& s : make_shards(max_n, std::max(shards, 1u))) {
    jobs.push_back(std::async(shards > 1 ? std::launch::async : std::launch::deferred,
                              [=] { return Sets{fh_edges(max_n, s), fb_edges(max_n, s)}; }));
  }
  Sets all;
  for (auto& j : jobs) {
    Sets p = j.get();
    all.fh.insert(all.fh.end(), p.fh.begin(), p.fh.end());
    all.fb.insert(all.fb.end(), p.fb.begin(), p.fb.end());
  }

  using Pair = std::pair<Value, Value>;
  auto pairs_of = [&](const std::vector<Edge>& edges, EdgeKind expected) {
    std::vector<Pair> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.kind() != expected || !e.well_formed() || e.hi() > max_n) {
        t.flag(e.lo(), "malformed " + std::string(to_string(expected)) + " edge (" +
                           to_string(e.lo()) + "," + to_string(e.hi()) + ")");
      }
      out.emplace_back(e.lo(), e.hi());
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      t.flag(max_n, "duplicate " + std::string(to_string(expected)) + " edge");
    }
    return out;
  };
  const std::vector<Pair> fh = pairs_of(all.fh, EdgeKind::Doubling);
  const std::vector<Pair> fb = pairs_of(all.fb, EdgeKind::Branch);

  std::vector<Pair> shared;
  std::set_intersection(fh.begin(), fh.end(), fb.begin(), fb.end(), std::back_inserter(shared));
  for (const Pair& p : shared) {
    t.flag(p.first, "pair (" + to_string(p.first) + "," + to_string(p.second) +
                        ") is both a doubling and a branch edge");
  }

  const GraphWindow u = union_graph(max_n, shards);
  if (u.edges.size() != fh.size() + fb.size()) {
    t.flag(max_n, "union has " + std::to_string(u.edges.size()) + " edges, expected " +
                      std::to_string(fh.size() + fb.size()));
  }
  t.add("fh_edges", fh.size());
  t.add("fb_edges", fb.size());
  t.add("union_edges", u.edges.size());
  t.add("shared_pairs", shared.size());
  return std::move(t).finish(checks::kDisjoint, max_n, started);
}

CheckReport check_coverage(Value max_n, unsigned shards) {
  const auto started = Clock::now();
  Tally t = run_sharded(max_n, shards, [](RangeShard s) {
    Tally part;
    for (Value n = s.lo; n <= s.hi; ++n) {
      part.add("vertices");
      const Decomposition dec = decompose(n);
      if (dec.odd_part % 2 == 0) part.flag(n, "odd part is even");
      if (compose(dec.odd_part, dec.depth) != n) part.flag(n, "compose(decompose(n)) != n");

      // Chains through n found by trial division by powers of two.
      int chains = 0;
      Value root = 0;
      std::uint64_t depth = 0;
      for (std::uint64_t d = 0; d < 128 && (Value{1} << d) <= n; ++d) {
        const Value p = Value{1} << d;
        if (n % p == 0 && (n / p) % 2 == 1) {
          ++chains;
          root = n / p;
          depth = d;
        }
      }
      if (chains != 1) {
        part.flag(n, "lies on " + std::to_string(chains) + " doubling chains");
      } else if (root != dec.odd_part || depth != dec.depth) {
        part.flag(n, "chain root disagrees with decomposition");
      }
      if (n % 2 == 1) part.add("chains");
      part.max("max_depth", dec.depth, n);
    }
    return part;
  });
  return std::move(t).finish(checks::kCoverage, max_n, started);
}

CheckReport check_tree_no_cycle(std::uint32_t height, std::uint32_t oracle_levels,
                                unsigned threads) {
  const auto started = Clock::now();
  Tally t;
  TreeSlice slice;
  try {
    slice = build_levels(height, threads);
  } catch (const DuplicateVertexError& e) {
    t.flag(e.vertex(), e.what());
    return std::move(t).finish(checks::kTreeNoCycle, height, started);
  } catch (const OverflowError& e) {
    t.flag(0, std::string("tree construction overflow: ") + e.what());
    return std::move(t).finish(checks::kTreeNoCycle, height, started);
  }

  if (slice.level(0) != std::vector<Value>{1}) t.flag(1, "level 0 is not [1]");
  Value branch_values = 0;
  for (std::uint32_t k = 0; k <= slice.height(); ++k) {
    const auto& lv = slice.level(k);
    t.add("population_" + pad2(k), lv.size());
    Value branches_here = 0;
    for (std::size_t i = 0; i < lv.size(); ++i) {
      const Value v = lv[i];
      if (is_branch_value(v)) ++branches_here;
      if (k == 0) continue;
      const Value parent = slice.parents(k)[i];
      if (forward_step(v) != parent) t.flag(v, "forward step does not return to its parent");
      const auto ploc = slice.locate(parent);
      if (!ploc || ploc->level != k - 1) t.flag(v, "parent is not one level down");
    }
    branch_values += branches_here;
    if (k < slice.height() && slice.level(k + 1).size() != lv.size() + branches_here) {
      t.flag(lv.front(), "level " + std::to_string(k + 1) + " size breaks branch-count growth");
    }
  }

  const std::uint32_t compared = std::min(height, oracle_levels);
  const auto oracle = level_populations_oracle(compared, Value{1} << compared);
  for (std::uint32_t k = 0; k <= compared; ++k) {
    std::vector<Value> sorted = slice.level(k);
    std::sort(sorted.begin(), sorted.end());
    if (!oracle[k].complete || sorted != oracle[k].vertices) {
      t.flag(sorted.front(), "level " + std::to_string(k) + " differs from forward-scan oracle");
    }
  }

  t.add("vertices", slice.vertex_count());
  t.add("max_vertex", slice.max_vertex());
  t.add("branch_values", branch_values);
  t.add("oracle_levels_compared", compared + 1);
  return std::move(t).finish(checks::kTreeNoCycle, height, started);
}

std::vector<CheckReport> run_all(const VerifyOptions& options) {
  if (options.max_n == 0) throw std::invalid_argument("max_n must be >= 1");
  for (const std::string& name : options.checks) {
    if (std::find(std::begin(checks::kAll), std::end(checks::kAll), name) == std::end(checks::kAll)) {
      throw std::invalid_argument("unknown check: " + name);
    }
  }
  auto selected = [&](std::string_view name) {
    return std::find(options.checks.begin(), options.checks.end(), name) != options.checks.end();
  };

  std::vector<CheckReport> out;
  if (selected(checks::kConvergence)) {
    out.push_back(check_convergence(options.max_n, options.step_cap, options.shards));
  }
  if (selected(checks::kDegree)) out.push_back(check_degree(options.max_n, options.shards));
  if (selected(checks::kDisjoint)) out.push_back(check_disjoint(options.max_n, options.shards));
  if (selected(checks::kCoverage)) out.push_back(check_coverage(options.max_n, options.shards));
  if (selected(checks::kTreeNoCycle)) {
    out.push_back(check_tree_no_cycle(options.levels, options.oracle_levels, options.shards));
  }
  return out;
}

}  // namespace collatz
