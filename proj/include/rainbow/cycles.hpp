#pragma once

// Cycle enumeration over the uncolored union of a family (or a graph), and
// color assignment by bipartite matching.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

// Edge-colored multigraph on [n]: every vertex pair carries the (sorted)
// list of colors available on it.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  static ColoredMultigraph from_family(const Family& fam);
  static ColoredMultigraph from_graph(const Graph& g);
  // Arbitrary colored edges; parallel edges of different colors allowed.
  static ColoredMultigraph from_edges(int n, const std::vector<ColoredEdge>& edges);

  int n() const { return n_; }
  const std::vector<Vertex>& neighbors(Vertex x) const { return adj_[static_cast<std::size_t>(x)]; }
  const std::vector<Color>& colors(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return slot(a, b) >= 0; }
  std::size_t pair_count() const { return lists_.size(); }
  Color max_color() const { return max_color_; }

  // Biconnected blocks of the uncolored union with at least 3 vertices,
  // each as a sorted vertex list. Only these can carry cycles.
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }

 private:
  explicit ColoredMultigraph(int n);
  int slot(Vertex a, Vertex b) const { return slot_[static_cast<std::size_t>(a * (n_ + 1) + b)]; }
  void add(Vertex a, Vertex b, Color c);
  void finish();

  int n_ = 0;
  Color max_color_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> slot_;
  std::vector<std::vector<Color>> lists_;
  std::vector<std::vector<Vertex>> blocks_;
};

enum class Parity { Any, Even, Odd };

struct CycleQuery {
  Parity parity = Parity::Any;
  int min_len = 3;
  int max_len = 0;           // 0 means n
  std::vector<int> lengths;  // if non-empty, only these lengths

  bool accepts(int len) const;
  int effective_max(int n) const;
};

// Visits every simple cycle of the uncolored union exactly once, in canonical
// form (smallest vertex first, smaller neighbor second). Order: by smallest
// vertex, then depth-first with neighbors ascending. The visitor returns
// false to stop; the function then returns false.
bool for_each_cycle(const ColoredMultigraph& mg, const CycleQuery& query,
                    const std::function<bool(const VertexCycle&)>& visit);

std::vector<VertexCycle> enumerate_cycles(const Family& fam, Parity parity, int min_len,
                                          int max_len);

// colors[i] is assigned to the edge cycle[i] cycle[i+1 mod l].
using RainbowAssignment = std::vector<Color>;

// System of distinct representatives for a list of admissible-color slots.
std::optional<std::vector<Color>> distinct_representatives(
    const std::vector<std::vector<Color>>& slots, const std::set<Color>& forbidden = {});

// Throws kEdgeNotInFamily when some cycle edge lies in no family cycle.
std::optional<RainbowAssignment> color_sdr(const VertexCycle& cycle, const Family& fam,
                                           const std::set<Color>& forbidden = {});

// Incremental matching of edge slots to colors; every pushed slot stays
// matched. Used for pruned depth-first rainbow searches.
class IncrementalMatcher {
 public:
  explicit IncrementalMatcher(Color max_color);

  // Adds a slot; returns false (and leaves the state unchanged) if the
  // enlarged slot set has no system of distinct representatives.
  bool push(const std::vector<Color>* slot);
  void pop();
  std::size_t size() const { return slots_.size(); }
  // Color currently matched to each slot, in push order.
  std::vector<Color> assignment() const;

 private:
  bool augment(int slot);

  std::vector<const std::vector<Color>*> slots_;
  std::vector<Color> slot_color_;
  std::vector<int> color_slot_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

}  // namespace rainbow
