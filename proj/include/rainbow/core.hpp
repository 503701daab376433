#pragma once

// Basic vocabulary: colored edges, simple colored graphs, families of
// monochromatic cycles, colored paths and cycles.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;  // 1-based, 1..n
using Color = int;   // positive; in a Family, color i is the i-th cycle

using VertexPair = std::pair<Vertex, Vertex>;  // always first < second

enum class Errc {
  kDuplicateVertexPair,
  kVertexOutOfRange,
  kSelfLoop,
  kInvalidCycle,
  kEdgeNotInFamily,
  kSearchBudgetExceeded,
  kNotATheta,
  kNotRainbow,
  kNotAForest,
  kDegenerateVertexCount,
  kNotASubgraph,
  kNoContainingPart,
  kPreconditionViolated,
  kUnsupportedN,
  kInvariantBreach,
  kMalformedInput,
  kInvalidArgument,
};

const char* to_string(Errc code);

// The single exception type of the library. `detail` carries a serialized
// state for InvariantBreach reports.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string detail = {});

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  VertexPair pair() const { return {u, v}; }
  bool has(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Normalizes orientation so that u < v. Throws kSelfLoop when a == b.
ColoredEdge make_edge(Vertex a, Vertex b, Color color);
VertexPair make_pair_key(Vertex a, Vertex b);

// Same vertex set, different colors.
bool is_coincident(const ColoredEdge& e1, const ColoredEdge& e2);

// A set of colored edges on pairwise distinct vertex pairs, over the ambient
// vertex set [n]. Edges are kept sorted by vertex pair.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}

  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  std::vector<Vertex> vertices() const;
  std::vector<Color> colors() const;
  std::size_t color_count() const { return colors().size(); }

  const ColoredEdge* find(Vertex a, Vertex b) const;
  bool has_pair(Vertex a, Vertex b) const { return find(a, b) != nullptr; }
  bool contains(const ColoredEdge& e) const;
  bool has_vertex(Vertex x) const;
  int degree(Vertex x) const;
  // (neighbor, color of the joining edge), sorted by neighbor.
  std::vector<std::pair<Vertex, Color>> neighbors(Vertex x) const;
  std::map<Vertex, std::vector<std::pair<Vertex, Color>>> adjacency() const;

  // Copy-on-write helpers. `with` throws kDuplicateVertexPair if the pair is
  // already used by a different edge (an identical edge is a no-op);
  // `without` throws kNotASubgraph if the edge is absent.
  Graph with(const ColoredEdge& e) const;
  Graph without(const ColoredEdge& e) const;
  Graph merged(const Graph& other) const;
  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph make_graph(std::vector<ColoredEdge> edges, int n);

  int n_ = 0;
  std::vector<ColoredEdge> edges_;
};

// Validating constructor. Errors: kSelfLoop, kVertexOutOfRange,
// kDuplicateVertexPair (two edges on one pair; repeating an identical edge is
// accepted and deduplicated).
Graph make_graph(std::vector<ColoredEdge> edges, int n);

bool is_rainbow(const Graph& g);
bool is_almost_rainbow(const Graph& g);

// Vertex sequence v0..vk with colors[i] on the edge v_i v_{i+1}.
struct ColoredPath {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  std::size_t length() const { return colors.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::vector<ColoredEdge> edges() const;
  Graph graph(int n) const;
  ColoredPath reversed() const;

  friend bool operator==(const ColoredPath&, const ColoredPath&) = default;
};

// Cyclic vertex sequence v0..v_{l-1}; colors[i] sits on v_i v_{i+1 mod l}.
struct ColoredCycle {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  std::size_t length() const { return vertices.size(); }
  std::vector<ColoredEdge> edges() const;
  Graph graph(int n) const;

  friend bool operator==(const ColoredCycle&, const ColoredCycle&) = default;
};

// An uncolored cycle given by its vertex order.
using VertexCycle = std::vector<Vertex>;

// Smallest vertex first, smaller of its two neighbors second.
VertexCycle canonical_cycle(const VertexCycle& cycle);

// Checks the shape of a cyclic vertex sequence against [n]; throws
// kInvalidCycle or kVertexOutOfRange.
void validate_cycle(const VertexCycle& cycle, int n);

// An ordered list D_1..D_m of monochromatic cycles on [n]; D_i has color i.
// Immutable after construction.
class Family {
 public:
  Family() = default;
  Family(int n, std::vector<VertexCycle> cycles);

  int n() const { return n_; }
  std::size_t size() const { return cycles_.size(); }
  const std::vector<VertexCycle>& cycles() const { return cycles_; }
  const VertexCycle& cycle(Color c) const;
  std::vector<ColoredEdge> cycle_edges(Color c) const;
  Graph cycle_graph(Color c) const;

  bool contains(const ColoredEdge& e) const;
  // Colors of the family cycles using the pair {a, b}; empty if none.
  const std::vector<Color>& colors_on(Vertex a, Vertex b) const;
  const std::map<VertexPair, std::vector<Color>>& pair_colors() const { return pair_colors_; }
  // The two neighbors of x along D_c. Throws kInvalidArgument if x is not on D_c.
  std::pair<Vertex, Vertex> cycle_neighbors(Color c, Vertex x) const;

  bool all_even() const;
  Family with_cycle(VertexCycle cycle) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.n_ == b.n_ && a.cycles_ == b.cycles_;
  }

 private:
  int n_ = 0;
  std::vector<VertexCycle> cycles_;
  std::map<VertexPair, std::vector<Color>> pair_colors_;
};

bool is_subgraph_of_family(const Graph& g, const Family& fam);

}  // namespace rainbow
