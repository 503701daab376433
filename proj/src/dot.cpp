#include "rainbow/dot.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace rainbow {

namespace {

std::string color_attr(Color c) {
  // Golden-ratio hue steps keep neighboring ids apart.
  const double hue = std::fmod(0.61803398875 * static_cast<double>(c), 1.0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f 0.85 0.80", hue);
  return buf;
}

void write_edge(std::ostringstream& out, const ColoredEdge& e, const char* indent) {
  out << indent << e.u << " -- " << e.v << " [color=\"" << color_attr(e.color) << "\", label=\""
      << e.color << "\"];\n";
}

}  // namespace

std::string family_to_dot(const Family& fam) {
  std::ostringstream out;
  out << "graph family {\n  node [shape=circle];\n";
  for (Vertex v = 1; v <= fam.n(); ++v) out << "  " << v << ";\n";
  for (Color c = 1; c <= static_cast<Color>(fam.size()); ++c) {
    for (const auto& e : fam.cycle_edges(c)) write_edge(out, e, "  ");
  }
  out << "}\n";
  return out.str();
}

std::string partition_to_dot(const FrankensteinGraph& fg) {
  std::ostringstream out;
  out << "graph frankenstein {\n  node [shape=circle];\n";
  std::set<Vertex> placed;
  for (std::size_t i = 0; i < fg.parts().size(); ++i) {
    const auto& part = fg.parts()[i];
    out << "  subgraph cluster_" << i << " {\n    label=\"" << to_string(part.kind) << " " << i
        << "\";\n";
    for (Vertex v : part.graph.vertices()) {
      if (placed.insert(v).second) out << "    " << v << ";\n";
    }
    for (const auto& e : part.graph.edges()) write_edge(out, e, "    ");
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rainbow
