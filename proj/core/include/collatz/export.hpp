#pragma once

// DOT / CSV / JSON renderings of trajectories, forests, the union graph and
// tree slices. All writers are deterministic: identical inputs give
// byte-identical output.
//
// Grid embeddings used in DOT output (pos="x,y!"):
//   forest h  vertex o*2^d at column d, row (o-1)/2
//   forest b  the i-th branch edge on row i: odd end at column 0, branch
//             value at column 1
//   union     same grid as forest h; branch edges cross between rows
//   tree      no positions; one rank=same subgraph per level

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/core_maps.hpp"
#include "collatz/forests.hpp"
#include "collatz/tree_builder.hpp"
#include "collatz/value.hpp"

namespace collatz {

enum class Format { Text, Dot, Csv, Json };

std::optional<Format> parse_format(std::string_view name);
std::string_view to_string(Format f);

// Fill colour of a residue class; circled classes are drawn as circles in
// the union graph.
struct ColorClass {
  ResidueClass residue;
  std::string_view color;  // black | yellow | grey | white
  bool circled;
};

ColorClass color_class(ResidueClass residue);
inline ColorClass color_class(Value v) { return color_class(residue_class(v)); }

std::string render_trajectory(const Trajectory& t, Format f);
std::string render_trajectory(const big::Trajectory& t, Format f);

std::string render_decomposition(Value n, const Decomposition& d, Format f);

// Doubling chains o*2^d for odd o <= odd_max and 0 <= d <= depth_max.
std::string render_forest_h(Value odd_max, std::uint32_t depth_max, Format f);

// Branch edges (y, (y-1)/3) with y <= max_vertex. Only black and yellow
// vertices occur.
std::string render_forest_b(Value max_vertex, Format f);

// Union window; boundary edges (one endpoint above the window) are included
// only when requested.
std::string render_union(const GraphWindow& window, Format f, bool include_boundary = false);

// JSON {"levels":[[...],...]}, CSV vertex,level,parent, or DOT with one rank
// group per level and tree edges tagged by kind.
std::string render_tree(const TreeSlice& slice, Format f);

// Plain edge list with header u,v,kind.
std::string edges_csv(const std::vector<Edge>& edges);

}  // namespace collatz
