#pragma once

// Edge sets of the doubling forest (chains o, 2o, 4o, ...) and the branch
// forest (pairs y, (y-1)/3), their union over a finite window, and the vertex
// degree classification of the union.

#include <cstdint>
#include <string_view>
#include <vector>

#include "collatz/sharding.hpp"
#include "collatz/value.hpp"

namespace collatz {

enum class EdgeKind { Doubling, Branch };

std::string_view to_string(EdgeKind k);

// Undirected edge stored canonically as (lo, hi) with lo < hi.
class Edge {
 public:
  // (v, 2v). Throws OverflowError if 2v does not fit.
  static Edge doubling(Value v);
  // (y, (y-1)/3). Throws std::domain_error unless y is a branch value.
  static Edge branch(Value y);

  Value lo() const { return lo_; }
  Value hi() const { return hi_; }
  EdgeKind kind() const { return kind_; }

  bool touches(Value v) const { return lo_ == v || hi_ == v; }
  // Checks the arithmetic invariant of the edge's kind.
  bool well_formed() const;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Edge(Value lo, Value hi, EdgeKind kind) : lo_(lo), hi_(hi), kind_(kind) {}

  Value lo_;
  Value hi_;
  EdgeKind kind_;
};

// Edges of the union over the vertex window [1, max_vertex]. `edges` holds
// edges with both endpoints inside, sorted by (lo, hi); `boundary` holds the
// edges with exactly one endpoint inside.
struct GraphWindow {
  Value max_vertex = 0;
  std::vector<Edge> edges;
  std::vector<Edge> boundary;
};

// Doubling edges (v, 2v) with 2v <= max_vertex, in order of v.
std::vector<Edge> fh_edges(Value max_vertex);
// Same, restricted to generators v in shard.
std::vector<Edge> fh_edges(Value max_vertex, RangeShard shard);

// Branch edges (y, (y-1)/3) for branch values y <= max_vertex, in order of y.
std::vector<Edge> fb_edges(Value max_vertex);
std::vector<Edge> fb_edges(Value max_vertex, RangeShard shard);

// Union of both edge sets, generated over `threads` vertex subranges and
// merged. Pairs are deduplicated, so a shared pair shows up as fewer edges
// than both forests together.
GraphWindow union_graph(Value max_vertex, unsigned threads = 1);

// 1 for the root, 3 for branch values, 2 otherwise.
int degree(Value v);

// Incident edges of v generated directly from both maps:
// (v/2, v) if v even, (v, 2v), (v, (v-1)/3) if v is a branch value,
// (v, 3v+1) if v is odd and v > 1.
std::vector<Edge> incident_edges(Value v);

}  // namespace collatz
