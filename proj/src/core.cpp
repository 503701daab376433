#include "rainbow/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rainbow {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::kDuplicateVertexPair: return "DuplicateVertexPair";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kInvalidCycle: return "InvalidCycle";
    case Errc::kEdgeNotInFamily: return "EdgeNotInFamily";
    case Errc::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::kNotATheta: return "NotATheta";
    case Errc::kNotRainbow: return "NotRainbow";
    case Errc::kNotAForest: return "NotAForest";
    case Errc::kDegenerateVertexCount: return "DegenerateVertexCount";
    case Errc::kNotASubgraph: return "NotASubgraph";
    case Errc::kNoContainingPart: return "NoContainingPart";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kUnsupportedN: return "UnsupportedN";
    case Errc::kInvariantBreach: return "InvariantBreach";
    case Errc::kMalformedInput: return "MalformedInput";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

ColoredEdge make_edge(Vertex a, Vertex b, Color color) {
  if (a == b) {
    throw Error(Errc::kSelfLoop, "edge on a single vertex " + std::to_string(a));
  }
  if (a > b) std::swap(a, b);
  return {a, b, color};
}

VertexPair make_pair_key(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

bool is_coincident(const ColoredEdge& e1, const ColoredEdge& e2) {
  return e1.pair() == e2.pair() && e1.color != e2.color;
}

namespace {

bool pair_less(const ColoredEdge& a, const ColoredEdge& b) { return a.pair() < b.pair(); }

}  // namespace

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(edges_.size() * 2);
  for (const auto& e : edges_) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Color> Graph::colors() const {
  std::vector<Color> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.color);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const ColoredEdge* Graph::find(Vertex a, Vertex b) const {
  if (a == b) return nullptr;
  const ColoredEdge key{std::min(a, b), std::max(a, b), 0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, pair_less);
  if (it != edges_.end() && it->pair() == key.pair()) return &*it;
  return nullptr;
}

bool Graph::contains(const ColoredEdge& e) const {
  const ColoredEdge* found = find(e.u, e.v);
  return found != nullptr && found->color == e.color;
}

bool Graph::has_vertex(Vertex x) const {
  return std::any_of(edges_.begin(), edges_.end(), [x](const ColoredEdge& e) { return e.has(x); });
}

int Graph::degree(Vertex x) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [x](const ColoredEdge& e) { return e.has(x); }));
}

std::vector<std::pair<Vertex, Color>> Graph::neighbors(Vertex x) const {
  std::vector<std::pair<Vertex, Color>> out;
  for (const auto& e : edges_) {
    if (e.has(x)) out.emplace_back(e.other(x), e.color);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Vertex, std::vector<std::pair<Vertex, Color>>> Graph::adjacency() const {
  std::map<Vertex, std::vector<std::pair<Vertex, Color>>> adj;
  for (const auto& e : edges_) {
    adj[e.u].emplace_back(e.v, e.color);
    adj[e.v].emplace_back(e.u, e.color);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  return adj;
}

Graph Graph::with(const ColoredEdge& e) const {
  auto edges = edges_;
  edges.push_back(e);
  return make_graph(std::move(edges), n_);
}

Graph Graph::without(const ColoredEdge& e) const {
  const ColoredEdge norm = make_edge(e.u, e.v, e.color);
  auto it = std::find(edges_.begin(), edges_.end(), norm);
  if (it == edges_.end()) {
    throw Error(Errc::kNotASubgraph, "cannot remove absent edge (" + std::to_string(e.u) + "," +
                                         std::to_string(e.v) + "," + std::to_string(e.color) + ")");
  }
  Graph out = *this;
  out.edges_.erase(out.edges_.begin() + (it - edges_.begin()));
  return out;
}

Graph Graph::merged(const Graph& other) const {
  auto edges = edges_;
  edges.insert(edges.end(), other.edges_.begin(), other.edges_.end());
  return make_graph(std::move(edges), std::max(n_, other.n_));
}

bool Graph::is_subgraph_of(const Graph& other) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&other](const ColoredEdge& e) { return other.contains(e); });
}

Graph make_graph(std::vector<ColoredEdge> edges, int n) {
  for (auto& e : edges) {
    e = make_edge(e.u, e.v, e.color);
    if (e.u < 1 || e.v > n) {
      throw Error(Errc::kVertexOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + ") outside [1," +
                                               std::to_string(n) + "]");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].pair() == edges[i - 1].pair()) {
      throw Error(Errc::kDuplicateVertexPair,
                  "two edges on pair (" + std::to_string(edges[i].u) + "," +
                      std::to_string(edges[i].v) + ")");
    }
  }
  Graph g(n);
  g.edges_ = std::move(edges);
  return g;
}

bool is_rainbow(const Graph& g) { return g.color_count() == g.size(); }

bool is_almost_rainbow(const Graph& g) { return !g.empty() && g.color_count() + 1 == g.size(); }

std::vector<ColoredEdge> ColoredPath::edges() const {
  std::vector<ColoredEdge> out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    out.push_back(make_edge(vertices[i], vertices[i + 1], colors[i]));
  }
  return out;
}

Graph ColoredPath::graph(int n) const { return make_graph(edges(), n); }

ColoredPath ColoredPath::reversed() const {
  ColoredPath out{{vertices.rbegin(), vertices.rend()}, {colors.rbegin(), colors.rend()}};
  return out;
}

std::vector<ColoredEdge> ColoredCycle::edges() const {
  std::vector<ColoredEdge> out;
  const std::size_t len = vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(make_edge(vertices[i], vertices[(i + 1) % len], colors[i]));
  }
  return out;
}

Graph ColoredCycle::graph(int n) const { return make_graph(edges(), n); }

VertexCycle canonical_cycle(const VertexCycle& cycle) {
  const std::size_t len = cycle.size();
  if (len == 0) return {};
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  const std::size_t start = static_cast<std::size_t>(min_it - cycle.begin());
  const Vertex next = cycle[(start + 1) % len];
  const Vertex prev = cycle[(start + len - 1) % len];
  VertexCycle out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t idx = next <= prev ? (start + i) % len : (start + len - i) % len;
    out.push_back(cycle[idx]);
  }
  return out;
}

void validate_cycle(const VertexCycle& cycle, int n) {
  if (cycle.size() < 3) {
    throw Error(Errc::kInvalidCycle, "cycle of length " + std::to_string(cycle.size()) + " < 3");
  }
  std::set<Vertex> seen;
  for (Vertex x : cycle) {
    if (x < 1 || x > n) {
      throw Error(Errc::kVertexOutOfRange,
                  "vertex " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    }
    if (!seen.insert(x).second) {
      throw Error(Errc::kInvalidCycle, "vertex " + std::to_string(x) + " repeated in a cycle");
    }
  }
}

Family::Family(int n, std::vector<VertexCycle> cycles) : n_(n), cycles_(std::move(cycles)) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "family needs n >= 1");
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    validate_cycle(cycles_[i], n_);
    const Color c = static_cast<Color>(i + 1);
    const auto& cyc = cycles_[i];
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      pair_colors_[make_pair_key(cyc[j], cyc[(j + 1) % cyc.size()])].push_back(c);
    }
  }
}

const VertexCycle& Family::cycle(Color c) const {
  if (c < 1 || static_cast<std::size_t>(c) > cycles_.size()) {
    throw Error(Errc::kInvalidArgument, "no family cycle with color " + std::to_string(c));
  }
  return cycles_[static_cast<std::size_t>(c - 1)];
}

std::vector<ColoredEdge> Family::cycle_edges(Color c) const {
  const auto& cyc = cycle(c);
  std::vector<ColoredEdge> out;
  for (std::size_t j = 0; j < cyc.size(); ++j) {
    out.push_back(make_edge(cyc[j], cyc[(j + 1) % cyc.size()], c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Family::cycle_graph(Color c) const { return make_graph(cycle_edges(c), n_); }

bool Family::contains(const ColoredEdge& e) const {
  const auto& colors = colors_on(e.u, e.v);
  return std::find(colors.begin(), colors.end(), e.color) != colors.end();
}

const std::vector<Color>& Family::colors_on(Vertex a, Vertex b) const {
  static const std::vector<Color> kEmpty;
  auto it = pair_colors_.find(make_pair_key(a, b));
  return it == pair_colors_.end() ? kEmpty : it->second;
}

std::pair<Vertex, Vertex> Family::cycle_neighbors(Color c, Vertex x) const {
  const auto& cyc = cycle(c);
  auto it = std::find(cyc.begin(), cyc.end(), x);
  if (it == cyc.end()) {
    throw Error(Errc::kInvalidArgument,
                "vertex " + std::to_string(x) + " is not on cycle " + std::to_string(c));
  }
  const std::size_t i = static_cast<std::size_t>(it - cyc.begin());
  const std::size_t len = cyc.size();
  return {cyc[(i + len - 1) % len], cyc[(i + 1) % len]};
}

bool Family::all_even() const {
  return std::all_of(cycles_.begin(), cycles_.end(),
                     [](const VertexCycle& c) { return c.size() % 2 == 0; });
}

Family Family::with_cycle(VertexCycle cycle) const {
  auto cycles = cycles_;
  cycles.push_back(std::move(cycle));
  return Family(n_, std::move(cycles));
}

bool is_subgraph_of_family(const Graph& g, const Family& fam) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&fam](const ColoredEdge& e) { return fam.contains(e); });
}

}  // namespace rainbow
