#pragma once

// Frankenstein graphs: partitions into long rainbow odd cycles, bad pieces
// and vertex-disjoint rainbow trees, with no rainbow even cycle.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/core.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/theta.hpp"

namespace rainbow {

enum class PartKind { LongOddCycle, BadPiece, RainbowTree };

const char* to_string(PartKind kind);
PartKind part_kind_from_string(const std::string& text);

struct PartitionPart {
  PartKind kind = PartKind::RainbowTree;
  Graph graph;

  friend bool operator==(const PartitionPart&, const PartitionPart&) = default;
};

// Shape of a single part: rainbow odd cycle of length >= 7, bad piece, or a
// connected acyclic rainbow graph.
bool part_shape_ok(const PartitionPart& part);

class FrankensteinGraph {
 public:
  FrankensteinGraph() = default;
  // Unions the parts; throws kDuplicateVertexPair if two parts use one pair
  // with different colors.
  FrankensteinGraph(int n, std::vector<PartitionPart> parts);

  int n() const { return graph_.n(); }
  const Graph& graph() const { return graph_; }
  const std::vector<PartitionPart>& parts() const { return parts_; }
  int c() const { return count(PartKind::LongOddCycle); }
  int b() const { return count(PartKind::BadPiece); }
  int t() const { return count(PartKind::RainbowTree); }

 private:
  int count(PartKind kind) const;

  Graph graph_;
  std::vector<PartitionPart> parts_;
};

enum class IssueKind { Empty, PartShape, UnionMismatch, Overlap, SharedColor, F1, F2, NotInFamily };

const char* to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string message;
  std::vector<int> parts;
  std::optional<RainbowCycleWitness> witness;  // set for F2
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  const ValidationIssue* first() const { return issues.empty() ? nullptr : &issues.front(); }
  const ValidationIssue* find(IssueKind kind) const;
};

// Checks every invariant; the rainbow even cycle search for (F2) runs only
// when check_f2 is set. `fam` may be null.
ValidationReport validate_frankenstein(const FrankensteinGraph& fg, const Family* fam = nullptr,
                                       bool check_f2 = true);

// Bipartite graph between parts and vertices shared by at least two parts.
struct AuxGraph {
  int part_count = 0;
  std::vector<Vertex> shared;              // V2, ascending
  std::vector<std::pair<int, int>> edges;  // (part index, index into shared)
  bool acyclic = true;
};

AuxGraph aux_bipartite(const FrankensteinGraph& fg);

// Part indices in an order where each part meets the union of the earlier
// ones in at most one vertex. Throws kNotAForest.
std::vector<int> gluing_order(const FrankensteinGraph& fg);

// Largest |V(prefix) ∩ V(next part)| along the order.
int max_prefix_overlap(const FrankensteinGraph& fg, const std::vector<int>& order);

struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

Rational make_rational(long long num, long long den);

// |χ(G)| / (|V(G)| - 1), reduced. Throws kDegenerateVertexCount.
Rational color_bound(const Graph& g);
Rational color_bound(const FrankensteinGraph& fg);

// Index of the part containing every edge of the cycle. Throws
// kNotASubgraph or kNoContainingPart.
int locate_cycle_part(const FrankensteinGraph& fg, const ColoredCycle& cycle);

// A rainbow s-t path inside the Frankenstein graph, or none when s and t
// are in different components (or s == t).
std::optional<ColoredPath> rainbow_path(const FrankensteinGraph& fg, Vertex s, Vertex t);

// Rainbow paths inside a small graph from s to t, in order of length.
std::optional<ColoredPath> shortest_rainbow_path_in(const Graph& g, Vertex s, Vertex t);

// Rainbow even cycle in X ∪ P0, where X is a rainbow cycle or a bad piece and
// the path P0 meets X exactly in its two terminals with fresh colors.
// Throws kPreconditionViolated.
RainbowCycleWitness ear_even_cycle(const Graph& x, const ColoredPath& p0);

// Rainbow even cycle in C ∪ X for a rainbow cycle C meeting X in at least
// two vertices. Throws kPreconditionViolated.
RainbowCycleWitness ectest_extract(const ColoredCycle& c, const Graph& x);
RainbowCycleWitness ectest_extract(const ColoredCycle& c, const PartitionPart& x);

struct TreeDepth {
  Vertex root = 0;
  std::map<Vertex, int> depth;
  std::map<Vertex, Vertex> parent;  // root maps to itself
  std::map<Vertex, std::vector<Vertex>> children;
};

struct DepthTable {
  std::vector<TreeDepth> trees;
  long long total = 0;

  // Tree index containing v, or -1.
  int tree_of(Vertex v) const;
};

// Depth data of a forest: one entry per connected component. Throws
// kNotAForest if the graph has a cycle.
DepthTable forest_depth(const Graph& forest);
DepthTable depth_table(const FrankensteinGraph& fg);

// Connected components of a graph, each a sorted vertex list.
std::vector<std::vector<Vertex>> components(const Graph& g);

nlohmann::json partition_to_json(const FrankensteinGraph& fg);
FrankensteinGraph partition_from_json(const nlohmann::json& j, int n);

}  // namespace rainbow
