#include "collatz/export.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace collatz {

namespace {

using ojson = nlohmann::ordered_json;

ojson json_value(Value v) {
  if (fits_u64(v)) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

ojson json_value(const BigValue& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::string str(Value v) { return to_string(v); }
std::string str(const BigValue& v) { return v.str(); }

std::string font_for(std::string_view fill) { return fill == "black" ? "white" : "black"; }

// One DOT node statement. `pos` is empty for layouts without coordinates.
std::string dot_node(Value v, bool shapes, const std::string& pos = {}) {
  const ColorClass c = color_class(v);
  std::ostringstream os;
  os << "  " << to_string(v) << " [fillcolor=" << c.color << ", fontcolor=" << font_for(c.color)
     << ", class=\"" << to_string(c.residue) << "\"";
  if (shapes) os << ", shape=" << (c.circled ? "circle" : "box");
  if (!pos.empty()) os << ", pos=\"" << pos << "!\"";
  os << "];\n";
  return os.str();
}

std::string dot_edge(const Edge& e) {
  return "  " + to_string(e.lo()) + " -- " + to_string(e.hi()) + " [kind=" +
         std::string(to_string(e.kind())) + "];\n";
}

std::string grid_pos(Value v) {
  const Decomposition d = decompose(v);
  return std::to_string(d.depth) + ",-" + to_string((d.odd_part - 1) / 2);
}

ojson vertex_json(Value v) {
  const ColorClass c = color_class(v);
  ojson j;
  j["vertex"] = json_value(v);
  j["class"] = std::string(to_string(c.residue));
  j["color"] = std::string(c.color);
  return j;
}

ojson edge_json(const Edge& e) {
  ojson j;
  j["u"] = json_value(e.lo());
  j["v"] = json_value(e.hi());
  j["kind"] = std::string(to_string(e.kind()));
  return j;
}

// Shared rendering of an edge set over an explicit vertex list.
std::string render_graph(std::string_view name, const std::vector<Value>& vertices,
                         const std::vector<Edge>& edges, Format f, bool shapes,
                         const std::vector<std::string>& positions) {
  switch (f) {
    case Format::Csv:
      return edges_csv(edges);
    case Format::Json: {
      ojson j;
      j["graph"] = std::string(name);
      j["vertices"] = ojson::array();
      for (Value v : vertices) j["vertices"].push_back(vertex_json(v));
      j["edges"] = ojson::array();
      for (const Edge& e : edges) j["edges"].push_back(edge_json(e));
      return j.dump() + "\n";
    }
    case Format::Dot:
    case Format::Text: {
      std::string out = "graph " + std::string(name) + " {\n  node [style=filled];\n";
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        out += dot_node(vertices[i], shapes, positions.empty() ? std::string() : positions[i]);
      }
      for (const Edge& e : edges) out += dot_edge(e);
      return out + "}\n";
    }
  }
  return {};
}

template <class T>
std::string render_trajectory_impl(const BasicTrajectory<T>& t, Format f) {
  const std::vector<T> orbit = t.orbit();
  std::string parity;
  for (bool b : t.parity_word) parity.push_back(b ? '1' : '0');

  switch (f) {
    case Format::Text: {
      std::string out = "orbit:";
      for (const T& v : orbit) out += " " + str(v);
      out += "\nsteps: " + std::to_string(t.steps) + "\npeak: " + str(t.peak) +
             "\nparity: " + parity + "\n";
      return out;
    }
    case Format::Json: {
      ojson j;
      j["start"] = json_value(t.start);
      j["steps"] = t.steps;
      j["peak"] = json_value(t.peak);
      j["parity_word"] = parity;
      j["orbit"] = ojson::array();
      for (const T& v : orbit) j["orbit"].push_back(json_value(v));
      return j.dump() + "\n";
    }
    case Format::Csv: {
      std::string out = "step,value\n";
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        out += std::to_string(i) + "," + str(orbit[i]) + "\n";
      }
      return out;
    }
    case Format::Dot: {
      std::string out = "digraph trajectory {\n";
      for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
        out += "  " + str(orbit[i]) + " -> " + str(orbit[i + 1]) + " [kind=" +
               (t.parity_word[i] ? "branch" : "doubling") + "];\n";
      }
      if (orbit.size() == 1) out += "  " + str(orbit[0]) + ";\n";
      return out + "}\n";
    }
  }
  return {};
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "dot") return Format::Dot;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Dot: return "dot";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "unknown";
}

ColorClass color_class(ResidueClass residue) {
  switch (residue) {
    case ResidueClass::Odd: return {residue, "black", false};
    case ResidueClass::BranchEven: return {residue, "yellow", false};
    case ResidueClass::FourSpecial: return {residue, "yellow", true};
    case ResidueClass::EvenMod2Of6: return {residue, "grey", true};
    case ResidueClass::EvenMod0Of6: return {residue, "white", true};
  }
  return {residue, "white", false};
}

std::string render_trajectory(const Trajectory& t, Format f) { return render_trajectory_impl(t, f); }

std::string render_trajectory(const big::Trajectory& t, Format f) {
  return render_trajectory_impl(t, f);
}

std::string render_decomposition(Value n, const Decomposition& d, Format f) {
  switch (f) {
    case Format::Json: {
      ojson j;
      j["n"] = json_value(n);
      j["odd_part"] = json_value(d.odd_part);
      j["depth"] = d.depth;
      return j.dump() + "\n";
    }
    case Format::Csv:
      return "n,odd_part,depth\n" + to_string(n) + "," + to_string(d.odd_part) + "," +
             std::to_string(d.depth) + "\n";
    case Format::Text:
    case Format::Dot:
      return to_string(n) + " = " + to_string(d.odd_part) + " * 2^" + std::to_string(d.depth) + "\n";
  }
  return {};
}

std::string edges_csv(const std::vector<Edge>& edges) {
  std::string out = "u,v,kind\n";
  for (const Edge& e : edges) {
    out += to_string(e.lo()) + "," + to_string(e.hi()) + "," + std::string(to_string(e.kind())) + "\n";
  }
  return out;
}

std::string render_forest_h(Value odd_max, std::uint32_t depth_max, Format f) {
  std::vector<Value> vertices;
  std::vector<std::string> positions;
  std::vector<Edge> edges;
  for (Value o = 1; o <= odd_max; o += 2) {
    for (std::uint32_t d = 0; d <= depth_max; ++d) {
      const Value v = compose(o, d);
      vertices.push_back(v);
      positions.push_back(std::to_string(d) + ",-" + to_string((o - 1) / 2));
      if (d < depth_max) edges.push_back(Edge::doubling(v));
    }
  }
  return render_graph("forest_h", vertices, edges, f, false, positions);
}

std::string render_forest_b(Value max_vertex, Format f) {
  const std::vector<Edge> edges = fb_edges(max_vertex);
  std::vector<Value> vertices;
  std::vector<std::string> positions;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    vertices.push_back(edges[i].lo());
    positions.push_back("0,-" + std::to_string(i));
    vertices.push_back(edges[i].hi());
    positions.push_back("1,-" + std::to_string(i));
  }
  return render_graph("forest_b", vertices, edges, f, false, positions);
}

std::string render_union(const GraphWindow& window, Format f, bool include_boundary) {
  std::vector<Edge> edges = window.edges;
  std::set<Value> extra;
  if (include_boundary) {
    edges.insert(edges.end(), window.boundary.begin(), window.boundary.end());
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : window.boundary) {
      if (e.hi() > window.max_vertex) extra.insert(e.hi());
      if (e.lo() > window.max_vertex) extra.insert(e.lo());
    }
  }
  std::vector<Value> vertices;
  for (Value v = 1; v <= window.max_vertex; ++v) vertices.push_back(v);
  vertices.insert(vertices.end(), extra.begin(), extra.end());
  std::vector<std::string> positions;
  for (Value v : vertices) positions.push_back(grid_pos(v));
  return render_graph("collatz_union", vertices, edges, f, true, positions);
}

std::string render_tree(const TreeSlice& slice, Format f) {
  switch (f) {
    case Format::Json: {
      ojson j;
      j["levels"] = ojson::array();
      for (const auto& lv : slice.levels()) {
        ojson row = ojson::array();
        for (Value v : lv) row.push_back(json_value(v));
        j["levels"].push_back(std::move(row));
      }
      return j.dump() + "\n";
    }
    case Format::Csv: {
      std::string out = "vertex,level,parent\n";
      for (const LayoutPoint& p : layout(slice)) {
        const auto parent = slice.parent_of(p.vertex);
        out += to_string(p.vertex) + "," + std::to_string(p.level) + "," +
               (parent ? to_string(*parent) : std::string()) + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::string out;
      for (std::uint32_t k = 0; k <= slice.height(); ++k) {
        out += std::to_string(k) + ":";
        for (Value v : slice.level(k)) out += " " + to_string(v);
        out += "\n";
      }
      return out;
    }
    case Format::Dot: {
      std::string out = "graph tree {\n  rankdir=TB;\n  node [style=filled];\n";
      for (std::uint32_t k = 0; k <= slice.height(); ++k) {
        out += "  subgraph level_" + std::to_string(k) + " {\n    rank=same;\n";
        for (Value v : slice.level(k)) out += "  " + dot_node(v, false);
        out += "  }\n";
      }
      for (std::uint32_t k = 1; k <= slice.height(); ++k) {
        const auto& lv = slice.level(k);
        for (std::size_t i = 0; i < lv.size(); ++i) {
          const Value parent = slice.parents(k)[i];
          out += "  " + to_string(parent) + " -- " + to_string(lv[i]) + " [kind=" +
                 (lv[i] % 2 == 0 ? "doubling" : "branch") + "];\n";
        }
      }
      return out + "}\n";
    }
  }
  return {};
}

}  // namespace collatz
