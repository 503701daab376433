#pragma once

// Constructive search for a rainbow even cycle in a family of more than
// 6(n-1)/5 even cycles. The state is a Frankenstein subgraph; every move
// strictly raises the potential (c, b, |edges|, -Depth) until some step
// exposes a rainbow even cycle.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rainbow/core.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/frankenstein.hpp"

namespace rainbow {

struct Potential {
  int c = 0;
  int b = 0;
  int e = 0;
  long long neg_depth = 0;

  friend auto operator<=>(const Potential&, const Potential&) = default;
  nlohmann::json to_json() const { return nlohmann::json::array({c, b, e, neg_depth}); }
};

// Long odd cycles, bad pieces and a forest, all inside the family. The
// forest's components are the tree parts.
class ExtractorState {
 public:
  explicit ExtractorState(std::shared_ptr<const Family> fam);
  ExtractorState(std::shared_ptr<const Family> fam, std::vector<Graph> odd_cycles,
                 std::vector<Graph> bad_pieces, Graph forest);

  const Family& family() const { return *fam_; }
  const std::shared_ptr<const Family>& family_ptr() const { return fam_; }
  int n() const { return fam_->n(); }
  const std::vector<Graph>& odd_cycles() const { return odd_cycles_; }
  const std::vector<Graph>& bad_pieces() const { return bad_pieces_; }
  const Graph& forest() const { return forest_; }

  const FrankensteinGraph& fg() const { return fg_; }
  const DepthTable& depth() const { return depth_; }
  // Colors of the family absent from the Frankenstein graph, ascending.
  const std::vector<Color>& absent_colors() const { return absent_; }
  // Component id of a vertex in the Frankenstein graph; isolated vertices
  // get their own ids.
  int component_of(Vertex v) const { return comp_[static_cast<std::size_t>(v)]; }
  Potential potential() const;

  ExtractorState with_forest(Graph forest) const;
  nlohmann::json to_json() const;

 private:
  void refresh();

  std::shared_ptr<const Family> fam_;
  std::vector<Graph> odd_cycles_;
  std::vector<Graph> bad_pieces_;
  Graph forest_;
  FrankensteinGraph fg_;
  DepthTable depth_;
  std::vector<Color> absent_;
  std::vector<int> comp_;
};

enum class MoveKind { AddOddCycle, AddBadPiece, AddEdge, ReduceDepth };

const char* to_string(MoveKind kind);

struct Improvement {
  MoveKind kind;
  ExtractorState next;
  std::string reason;
};

struct Witness {
  RainbowCycleWitness cycle;
  std::string source;
};

struct NoMove {};

using StepResult = std::variant<NoMove, Improvement, Witness>;

// Local moves in priority order: close an absent edge over the graph into a
// long odd cycle, join two components with an absent edge, or re-hang a
// vertex one level higher.
StepResult step_or_improve(const ExtractorState& state);

struct OuterEdge {
  ColoredEdge edge;
};

// Outer edges of D_lam: edges whose vertex pair carries no edge of the
// Frankenstein graph. A fully covered D_lam yields a witness instead.
std::variant<std::vector<OuterEdge>, Witness> find_outer_edges(const ExtractorState& state, Color lam);
std::variant<OuterEdge, Witness> find_outer_edge(const ExtractorState& state, Color lam);

struct OuterCycle {
  OuterEdge f;
  ColoredCycle cycle;  // rainbow 3- or 5-cycle through f; f is the last edge
};

std::variant<OuterCycle, Improvement, Witness> find_outer_cycle(const ExtractorState& state,
                                                                const OuterEdge& f);

// A Frankenstein subgraph F0 with the same odd cycles and bad pieces as the
// current state, an edge f0 of a color absent from F0, and a rainbow 5-cycle
// in F0 + f0 through f0.
struct FiveCycleContext {
  ExtractorState f0_state;
  ColoredEdge f0;
  ColoredCycle cycle;
};

std::variant<FiveCycleContext, Improvement, Witness> resolve_outer3(const ExtractorState& state,
                                                                    const OuterCycle& c3);

struct Growth {
  FiveCycleContext ctx;  // re-embedded after color shifts
  int shift = 0;
  ColoredEdge pendant;
  Vertex v_star = 0;
};

std::variant<Growth, Witness> grow_5cycle(const FiveCycleContext& ctx);

std::variant<Improvement, Witness> build_bad_piece(const ExtractorState& state, const Growth& growth);

// Validates the proposed state. A rainbow even cycle in it becomes a
// witness; any other defect or a non-increasing potential throws
// kInvariantBreach.
std::variant<ExtractorState, Witness> apply_improvement(const ExtractorState& before,
                                                        const Improvement& imp);

struct TraceEntry {
  std::uint64_t iteration = 0;
  MoveKind kind = MoveKind::AddEdge;
  Potential before;
  Potential after;
  std::string reason;

  nlohmann::json to_json() const;
};

struct ExtractOptions {
  std::ostream* trace = nullptr;  // JSONL sink, optional
};

struct ExtractResult {
  RainbowCycleWitness witness;
  std::string source;
  std::vector<TraceEntry> trace;
  std::uint64_t iterations = 0;
  std::uint64_t bound = 0;
};

// (m+1)^2 (nm+1) (n(n-1)/2+1): the number of distinct potentials.
std::uint64_t iteration_bound(int n, int m);

// Throws kPreconditionViolated when the family is too small or has an odd
// member, kInvariantBreach on an internal inconsistency.
ExtractResult extract_rainbow_even_cycle(const Family& fam, const ExtractOptions& opts = {});

}  // namespace rainbow
