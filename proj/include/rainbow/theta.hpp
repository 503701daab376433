#pragma once

#include <array>
#include <optional>

#include "rainbow/core.hpp"

namespace rainbow {

// Three paths sharing exactly their terminals s < t. Every path runs from s
// to t; paths are sorted by (length, vertex sequence).
struct ThetaGraph {
  Vertex s = 0;
  Vertex t = 0;
  std::array<ColoredPath, 3> paths;

  Graph graph(int n) const;
  friend bool operator==(const ThetaGraph&, const ThetaGraph&) = default;
};

std::optional<ThetaGraph> theta_decompose(const Graph& g);

// Almost rainbow theta on three rainbow paths with at least 6 vertices.
bool is_bad_piece(const Graph& g);

}  // namespace rainbow
