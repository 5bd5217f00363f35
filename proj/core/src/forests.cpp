#include "collatz/forests.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "collatz/core_maps.hpp"

namespace collatz {

std::vector<RangeShard> make_shards(Value n, unsigned count) {
  std::vector<RangeShard> out;
  if (n == 0) return out;
  if (count == 0) throw std::invalid_argument("make_shards: count must be >= 1");
  const Value k = std::min<Value>(count, n);
  const Value base = n / k;
  const Value extra = n % k;
  Value lo = 1;
  for (Value i = 0; i < k; ++i) {
    const Value len = base + (i < extra ? 1 : 0);
    out.push_back({lo, lo + len - 1});
    lo += len;
  }
  return out;
}

std::string_view to_string(EdgeKind k) {
  return k == EdgeKind::Doubling ? "doubling" : "branch";
}

Edge Edge::doubling(Value v) { return Edge(v, inverse_successors(v).doubling, EdgeKind::Doubling); }

Edge Edge::branch(Value y) { return Edge(branch_parent(y), y, EdgeKind::Branch); }

bool Edge::well_formed() const {
  if (lo_ < 1 || lo_ >= hi_) return false;
  if (kind_ == EdgeKind::Doubling) return hi_ / 2 == lo_ && hi_ % 2 == 0;
  return (hi_ - 1) % 3 == 0 && (hi_ - 1) / 3 == lo_ && hi_ > 4 && hi_ % 6 == 4;
}

std::vector<Edge> fh_edges(Value max_vertex, RangeShard shard) {
  std::vector<Edge> out;
  const Value last = std::min(shard.hi, max_vertex / 2);
  for (Value v = shard.lo; v <= last; ++v) out.push_back(Edge::doubling(v));
  return out;
}

std::vector<Edge> fh_edges(Value max_vertex) {
  if (max_vertex < 1) return {};
  return fh_edges(max_vertex, {1, max_vertex});
}

std::vector<Edge> fb_edges(Value max_vertex, RangeShard shard) {
  std::vector<Edge> out;
  const Value last = std::min(shard.hi, max_vertex);
  // First branch value >= max(lo, 10).
  Value y = std::max<Value>(shard.lo, 10);
  y += (4 + 6 - y % 6) % 6;
  for (; y <= last; y += 6) out.push_back(Edge::branch(y));
  return out;
}

std::vector<Edge> fb_edges(Value max_vertex) {
  if (max_vertex < 1) return {};
  return fb_edges(max_vertex, {1, max_vertex});
}

namespace {

bool same_pair(const Edge& a, const Edge& b) { return a.lo() == b.lo() && a.hi() == b.hi(); }

std::vector<Edge> boundary_edges(Value max_vertex, RangeShard shard) {
  std::vector<Edge> out;
  // (v, 2v) with v <= N < 2v.
  for (Value v = std::max(shard.lo, max_vertex / 2 + 1); v <= shard.hi; ++v) {
    out.push_back(Edge::doubling(v));
  }
  // (o, 3o+1) with odd o <= N < 3o+1.
  for (Value o = shard.lo; o <= shard.hi; ++o) {
    if (o % 2 == 0 || o == 1) continue;
    const Value y = forward_step(o);
    if (y > max_vertex) out.push_back(Edge::branch(y));
  }
  return out;
}

}  // namespace

GraphWindow union_graph(Value max_vertex, unsigned threads) {
  GraphWindow w;
  w.max_vertex = max_vertex;
  if (max_vertex < 1) return w;

  struct Part {
    std::vector<Edge> edges;
    std::vector<Edge> boundary;
  };
  std::vector<std::future<Part>> jobs;
  for (const RangeShard& s : make_shards(max_vertex, std::max(threads, 1u))) {
    jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [=] {
      Part p{fh_edges(max_vertex, s), boundary_edges(max_vertex, s)};
      auto b = fb_edges(max_vertex, s);
      p.edges.insert(p.edges.end(), b.begin(), b.end());
      return p;
    }));
  }
  for (auto& j : jobs) {
    Part p = j.get();
    w.edges.insert(w.edges.end(), p.edges.begin(), p.edges.end());
    w.boundary.insert(w.boundary.end(), p.boundary.begin(), p.boundary.end());
  }

  // Edge ordering puts Doubling before Branch for equal pairs; keep the first.
  std::sort(w.edges.begin(), w.edges.end());
  w.edges.erase(std::unique(w.edges.begin(), w.edges.end(), same_pair), w.edges.end());
  std::sort(w.boundary.begin(), w.boundary.end());
  return w;
}

int degree(Value v) {
  if (v < 1) throw std::domain_error("degree: argument must be >= 1");
  if (v == 1) return 1;
  return is_branch_value(v) ? 3 : 2;
}

std::vector<Edge> incident_edges(Value v) {
  if (v < 1) throw std::domain_error("incident_edges: argument must be >= 1");
  std::vector<Edge> out;
  if (v % 2 == 0) out.push_back(Edge::doubling(v / 2));
  out.push_back(Edge::doubling(v));
  if (is_branch_value(v)) out.push_back(Edge::branch(v));
  if (v % 2 == 1 && v > 1) out.push_back(Edge::branch(forward_step(v)));
  return out;
}

}  // namespace collatz
