#include "rainbow/frankenstein.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace rainbow {

const char* to_string(PartKind kind) {
  switch (kind) {
    case PartKind::LongOddCycle: return "odd_cycle";
    case PartKind::BadPiece: return "bad_piece";
    case PartKind::RainbowTree: return "tree";
  }
  return "?";
}

PartKind part_kind_from_string(const std::string& text) {
  if (text == "odd_cycle") return PartKind::LongOddCycle;
  if (text == "bad_piece") return PartKind::BadPiece;
  if (text == "tree") return PartKind::RainbowTree;
  throw Error(Errc::kMalformedInput, "unknown part kind '" + text + "'");
}

const char* to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::Empty: return "Empty";
    case IssueKind::PartShape: return "PartShape";
    case IssueKind::UnionMismatch: return "UnionMismatch";
    case IssueKind::Overlap: return "Overlap";
    case IssueKind::SharedColor: return "SharedColor";
    case IssueKind::F1: return "F1";
    case IssueKind::F2: return "F2";
    case IssueKind::NotInFamily: return "NotInFamily";
  }
  return "?";
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::map<Vertex, Vertex> parent;
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    Vertex root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      const Vertex next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  };
  for (Vertex v : g.vertices()) parent[v] = v;
  for (const auto& e : g.edges()) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Vertex, std::vector<Vertex>> groups;
  for (const auto& [v, p] : parent) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, list] : groups) out.push_back(std::move(list));
  return out;
}

namespace {

bool is_single_cycle(const Graph& g) {
  if (g.size() < 3) return false;
  const auto adj = g.adjacency();
  for (const auto& [v, list] : adj) {
    if (list.size() != 2) return false;
  }
  return components(g).size() == 1;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool part_shape_ok(const PartitionPart& part) {
  const Graph& g = part.graph;
  switch (part.kind) {
    case PartKind::LongOddCycle:
      return is_single_cycle(g) && g.size() % 2 == 1 && g.size() >= 7 && is_rainbow(g);
    case PartKind::BadPiece:
      return is_bad_piece(g);
    case PartKind::RainbowTree:
      return !g.empty() && is_rainbow(g) && g.vertices().size() == g.size() + 1 &&
             components(g).size() == 1;
  }
  return false;
}

FrankensteinGraph::FrankensteinGraph(int n, std::vector<PartitionPart> parts)
    : graph_(n), parts_(std::move(parts)) {
  std::vector<ColoredEdge> edges;
  for (const auto& p : parts_) {
    edges.insert(edges.end(), p.graph.edges().begin(), p.graph.edges().end());
  }
  graph_ = make_graph(std::move(edges), n);
}

int FrankensteinGraph::count(PartKind kind) const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                        [kind](const PartitionPart& p) { return p.kind == kind; }));
}

const ValidationIssue* ValidationReport::find(IssueKind kind) const {
  for (const auto& issue : issues) {
    if (issue.kind == kind) return &issue;
  }
  return nullptr;
}

ValidationReport validate_frankenstein(const FrankensteinGraph& fg, const Family* fam,
                                       bool check_f2) {
  ValidationReport report;
  const auto& parts = fg.parts();
  if (parts.empty()) report.issues.push_back({IssueKind::Empty, "no parts", {}, std::nullopt});
  std::size_t total = 0;
  std::vector<std::vector<Vertex>> vertex_sets;
  std::vector<std::vector<Color>> color_sets;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (!part_shape_ok(parts[i])) {
      report.issues.push_back({IssueKind::PartShape,
                               std::string("part is not a valid ") + to_string(parts[i].kind),
                               {idx},
                               std::nullopt});
    }
    total += parts[i].graph.size();
    vertex_sets.push_back(parts[i].graph.vertices());
    color_sets.push_back(parts[i].graph.colors());
  }
  if (total != fg.graph().size()) {
    report.issues.push_back(
        {IssueKind::UnionMismatch, "parts are not edge-disjoint", {}, std::nullopt});
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const std::vector<int> pair{static_cast<int>(i), static_cast<int>(j)};
      const auto common = intersect(vertex_sets[i], vertex_sets[j]);
      const bool both_trees =
          parts[i].kind == PartKind::RainbowTree && parts[j].kind == PartKind::RainbowTree;
      if (both_trees && !common.empty()) {
        report.issues.push_back({IssueKind::F1, "two tree parts share a vertex", pair, std::nullopt});
      } else if (common.size() > 1) {
        report.issues.push_back({IssueKind::Overlap,
                                 "parts share " + std::to_string(common.size()) + " vertices",
                                 pair,
                                 std::nullopt});
      }
      if (!intersect(color_sets[i], color_sets[j]).empty()) {
        report.issues.push_back({IssueKind::SharedColor, "parts share a color", pair, std::nullopt});
      }
    }
  }
  if (fam != nullptr && !is_subgraph_of_family(fg.graph(), *fam)) {
    report.issues.push_back(
        {IssueKind::NotInFamily, "graph is not a subgraph of the family", {}, std::nullopt});
  }
  if (check_f2) {
    if (auto w = find_rainbow_even_cycle(fg.graph())) {
      report.issues.push_back({IssueKind::F2, "rainbow even cycle present", {}, w});
    }
  }
  return report;
}

AuxGraph aux_bipartite(const FrankensteinGraph& fg) {
  AuxGraph aux;
  aux.part_count = static_cast<int>(fg.parts().size());
  std::map<Vertex, std::vector<int>> holders;
  for (int i = 0; i < aux.part_count; ++i) {
    for (Vertex v : fg.parts()[static_cast<std::size_t>(i)].graph.vertices()) holders[v].push_back(i);
  }
  for (const auto& [v, list] : holders) {
    if (list.size() < 2) continue;
    const int idx = static_cast<int>(aux.shared.size());
    aux.shared.push_back(v);
    for (int p : list) aux.edges.emplace_back(p, idx);
  }
  // Nodes: parts 0..P-1, shared vertices P..P+S-1.
  std::vector<int> parent(static_cast<std::size_t>(aux.part_count) + aux.shared.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& [p, s] : aux.edges) {
    const int a = find(p);
    const int b = find(aux.part_count + s);
    if (a == b) {
      aux.acyclic = false;
    } else {
      parent[static_cast<std::size_t>(a)] = b;
    }
  }
  return aux;
}

std::vector<int> gluing_order(const FrankensteinGraph& fg) {
  if (!aux_bipartite(fg).acyclic) throw Error(Errc::kNotAForest, "auxiliary graph has a cycle");
  const auto& parts = fg.parts();
  std::vector<std::vector<Vertex>> vsets;
  for (const auto& p : parts) vsets.push_back(p.graph.vertices());
  std::vector<int> remaining(parts.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> peeled;
  while (!remaining.empty()) {
    bool found = false;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      const int i = remaining[k];
      std::set<Vertex> others;
      for (int j : remaining) {
        if (j != i) others.insert(vsets[static_cast<std::size_t>(j)].begin(), vsets[static_cast<std::size_t>(j)].end());
      }
      int shared = 0;
      for (Vertex v : vsets[static_cast<std::size_t>(i)]) shared += others.count(v) > 0 ? 1 : 0;
      if (shared <= 1) {
        peeled.push_back(i);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::kNotAForest, "no leaf part to peel");
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

int max_prefix_overlap(const FrankensteinGraph& fg, const std::vector<int>& order) {
  std::set<Vertex> prefix;
  int worst = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto vs = fg.parts()[static_cast<std::size_t>(order[k])].graph.vertices();
    if (k > 0) {
      int shared = 0;
      for (Vertex v : vs) shared += prefix.count(v) > 0 ? 1 : 0;
      worst = std::max(worst, shared);
    }
    prefix.insert(vs.begin(), vs.end());
  }
  return worst;
}

Rational make_rational(long long num, long long den) {
  const long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational color_bound(const Graph& g) {
  const auto nv = static_cast<long long>(g.vertices().size());
  if (nv <= 1) throw Error(Errc::kDegenerateVertexCount, "need at least two vertices");
  return make_rational(static_cast<long long>(g.color_count()), nv - 1);
}

Rational color_bound(const FrankensteinGraph& fg) { return color_bound(fg.graph()); }

int locate_cycle_part(const FrankensteinGraph& fg, const ColoredCycle& cycle) {
  const auto edges = cycle.edges();
  for (const auto& e : edges) {
    if (!fg.graph().contains(e)) throw Error(Errc::kNotASubgraph, "cycle edge not in the graph");
  }
  const auto& parts = fg.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool all_in = std::all_of(edges.begin(), edges.end(),
                                    [&](const ColoredEdge& e) { return parts[i].graph.contains(e); });
    if (all_in) return static_cast<int>(i);
  }
  throw Error(Errc::kNoContainingPart, "cycle spans several parts");
}

namespace {

struct PathSearch {
  const std::map<Vertex, std::vector<std::pair<Vertex, Color>>>& adj;
  Vertex target;
  std::set<Vertex> on_path;
  std::set<Color> used;
  ColoredPath current;
  std::optional<ColoredPath> best;

  void dfs(Vertex x) {
    if (best && current.length() >= best->length()) return;
    if (x == target) {
      best = current;
      return;
    }
    auto it = adj.find(x);
    if (it == adj.end()) return;
    for (const auto& [y, c] : it->second) {
      if (on_path.count(y) > 0 || used.count(c) > 0) continue;
      on_path.insert(y);
      used.insert(c);
      current.vertices.push_back(y);
      current.colors.push_back(c);
      dfs(y);
      current.vertices.pop_back();
      current.colors.pop_back();
      used.erase(c);
      on_path.erase(y);
    }
  }
};

ColoredPath prune_trail(const ColoredPath& trail) {
  ColoredPath out{{trail.vertices.front()}, {}};
  for (std::size_t i = 0; i < trail.colors.size(); ++i) {
    const Vertex next = trail.vertices[i + 1];
    auto it = std::find(out.vertices.begin(), out.vertices.end(), next);
    if (it != out.vertices.end()) {
      const auto keep = static_cast<std::size_t>(it - out.vertices.begin());
      out.vertices.resize(keep + 1);
      out.colors.resize(keep);
    } else {
      out.vertices.push_back(next);
      out.colors.push_back(trail.colors[i]);
    }
  }
  return out;
}

}  // namespace

std::optional<ColoredPath> shortest_rainbow_path_in(const Graph& g, Vertex s, Vertex t) {
  if (s == t || !g.has_vertex(s) || !g.has_vertex(t)) return std::nullopt;
  const auto adj = g.adjacency();
  PathSearch search{adj, t, {s}, {}, ColoredPath{{s}, {}}, std::nullopt};
  search.dfs(s);
  return search.best;
}

std::optional<ColoredPath> rainbow_path(const FrankensteinGraph& fg, Vertex s, Vertex t) {
  if (s == t) return std::nullopt;
  const auto& parts = fg.parts();
  const int np = static_cast<int>(parts.size());
  std::vector<std::vector<Vertex>> vsets;
  for (const auto& p : parts) vsets.push_back(p.graph.vertices());
  // BFS over alternating (vertex, part) nodes: vertex nodes are encoded as
  // -v, part nodes as their index.
  std::map<int, int> prev;
  std::deque<int> queue{-s};
  prev[-s] = -s;
  while (!queue.empty() && prev.count(-t) == 0) {
    const int node = queue.front();
    queue.pop_front();
    if (node < 0) {
      const Vertex v = -node;
      for (int i = 0; i < np; ++i) {
        if (prev.count(i) == 0 &&
            std::binary_search(vsets[static_cast<std::size_t>(i)].begin(), vsets[static_cast<std::size_t>(i)].end(), v)) {
          prev[i] = node;
          queue.push_back(i);
        }
      }
    } else {
      for (Vertex v : vsets[static_cast<std::size_t>(node)]) {
        if (prev.count(-v) == 0) {
          prev[-v] = node;
          queue.push_back(-v);
        }
      }
    }
  }
  if (prev.count(-t) == 0) return std::nullopt;
  std::vector<int> chain;
  for (int node = -t; node != -s; node = prev[node]) chain.push_back(node);
  chain.push_back(-s);
  std::reverse(chain.begin(), chain.end());
  ColoredPath trail{{s}, {}};
  for (std::size_t k = 1; k + 1 < chain.size(); k += 2) {
    const Vertex a = -chain[k - 1];
    const Vertex b = -chain[k + 1];
    const auto piece = shortest_rainbow_path_in(parts[static_cast<std::size_t>(chain[k])].graph, a, b);
    if (!piece) throw Error(Errc::kInvariantBreach, "part without an internal rainbow path");
    trail.vertices.insert(trail.vertices.end(), piece->vertices.begin() + 1, piece->vertices.end());
    trail.colors.insert(trail.colors.end(), piece->colors.begin(), piece->colors.end());
  }
  auto path = prune_trail(trail);
  if (std::set<Color>(path.colors.begin(), path.colors.end()).size() != path.colors.size()) {
    throw Error(Errc::kInvariantBreach, "assembled path is not rainbow");
  }
  return path;
}

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(Errc::kPreconditionViolated, message);
}

std::vector<Vertex> interior(const ColoredPath& p) {
  std::vector<Vertex> out(p.vertices.begin() + 1, p.vertices.end() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_sorted(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

Graph remove_edges(const Graph& g, const std::vector<ColoredEdge>& edges) {
  Graph out = g;
  for (const auto& e : edges) out = out.without(e);
  return out;
}

RainbowCycleWitness even_cycle_of_theta(const Graph& g) {
  const auto theta = theta_decompose(g);
  if (!theta || !is_rainbow(g)) {
    throw Error(Errc::kInvariantBreach, "path removal did not leave a rainbow theta graph");
  }
  return theta_even_cycle(*theta);
}

}  // namespace

RainbowCycleWitness ear_even_cycle(const Graph& x, const ColoredPath& p0) {
  require(p0.length() >= 1 && p0.vertices.size() == p0.colors.size() + 1, "ear is not a path");
  const auto xv = x.vertices();
  require(std::set<Vertex>(p0.vertices.begin(), p0.vertices.end()).size() == p0.vertices.size(),
          "ear repeats a vertex");
  require(contains_sorted(xv, p0.front()) && contains_sorted(xv, p0.back()),
          "ear terminals must lie on X");
  for (Vertex v : interior(p0)) require(!contains_sorted(xv, v), "ear interior meets X");
  const auto xc = x.colors();
  std::set<Color> ear_colors(p0.colors.begin(), p0.colors.end());
  require(ear_colors.size() == p0.colors.size(), "ear is not rainbow");
  for (Color c : p0.colors) require(!std::binary_search(xc.begin(), xc.end(), c), "ear reuses a color of X");
  if (p0.length() == 1) require(!x.has_pair(p0.front(), p0.back()), "ear edge coincides with X");
  const auto ear_edges = p0.edges();

  if (is_single_cycle(x) && is_rainbow(x)) {
    Graph g = x;
    for (const auto& e : ear_edges) g = g.with(e);
    return even_cycle_of_theta(g);
  }
  require(is_bad_piece(x), "X must be a rainbow cycle or a bad piece");

  const auto theta = *theta_decompose(x);
  Color repeated = 0;
  {
    std::map<Color, int> count;
    for (const auto& e : x.edges()) ++count[e.color];
    for (const auto& [c, k] : count) {
      if (k == 2) repeated = c;
    }
  }
  auto has_repeated = [repeated](const ColoredPath& p) {
    return std::find(p.colors.begin(), p.colors.end(), repeated) != p.colors.end();
  };
  std::vector<int> carriers;
  int plain = -1;
  for (int i = 0; i < 3; ++i) {
    if (has_repeated(theta.paths[static_cast<std::size_t>(i)])) {
      carriers.push_back(i);
    } else {
      plain = i;
    }
  }
  if (carriers.size() != 2) throw Error(Errc::kInvariantBreach, "repeated color not on two paths");
  ColoredPath p1 = theta.paths[static_cast<std::size_t>(carriers[0])];
  ColoredPath p3 = theta.paths[static_cast<std::size_t>(carriers[1])];
  const ColoredPath& p2 = theta.paths[static_cast<std::size_t>(plain)];
  Vertex s0 = p0.front();
  Vertex t0 = p0.back();

  Graph base = x;
  for (const auto& e : ear_edges) base = base.with(e);

  auto on_path = [](const ColoredPath& p, Vertex v) {
    return std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end();
  };
  for (const ColoredPath* p : std::array<const ColoredPath*, 3>{&p1, &p2, &p3}) {
    if (on_path(*p, s0) && on_path(*p, t0)) {
      const auto in1 = interior(p1);
      const bool p1_free = !contains_sorted(in1, s0) && !contains_sorted(in1, t0);
      return even_cycle_of_theta(remove_edges(base, (p1_free ? p1 : p3).edges()));
    }
  }
  auto in_carrier_interior = [&](Vertex v) {
    return contains_sorted(interior(p1), v) || contains_sorted(interior(p3), v);
  };
  if (!in_carrier_interior(s0)) std::swap(s0, t0);
  if (!contains_sorted(interior(p1), s0)) std::swap(p1, p3);
  if (contains_sorted(interior(p2), t0)) {
    return even_cycle_of_theta(remove_edges(base, p3.edges()));
  }
  // t0 lies inside P3: drop the part of P1 between s0 and the terminal on the
  // side of its repeated-color edge.
  const auto pos = static_cast<std::size_t>(
      std::find(p1.vertices.begin(), p1.vertices.end(), s0) - p1.vertices.begin());
  const auto star = static_cast<std::size_t>(
      std::find(p1.colors.begin(), p1.colors.end(), repeated) - p1.colors.begin());
  const auto all = p1.edges();
  std::vector<ColoredEdge> segment;
  if (star < pos) {
    segment.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(pos));
  } else {
    segment.assign(all.begin() + static_cast<std::ptrdiff_t>(pos), all.end());
  }
  return even_cycle_of_theta(remove_edges(base, segment));
}

RainbowCycleWitness ectest_extract(const ColoredCycle& c, const Graph& x) {
  const std::size_t len = c.vertices.size();
  require(len >= 3 && c.colors.size() == len, "C is not a colored cycle");
  require(std::set<Vertex>(c.vertices.begin(), c.vertices.end()).size() == len, "C repeats a vertex");
  require(std::set<Color>(c.colors.begin(), c.colors.end()).size() == len, "C is not rainbow");
  const auto xv = x.vertices();
  const auto xc = x.colors();
  int common = 0;
  for (Vertex v : c.vertices) common += contains_sorted(xv, v) ? 1 : 0;
  require(common >= 2, "C and X share fewer than two vertices");
  for (const auto& e : c.edges()) {
    if (!x.contains(e)) {
      require(!std::binary_search(xc.begin(), xc.end(), e.color),
              "C outside X reuses a color of X");
    }
  }
  const auto canon = canonical_witness(c);
  const auto& cv = canon.vertices;
  std::size_t pick = len;
  for (std::size_t i = 0; i < len; ++i) {
    if (!x.has_pair(cv[i], cv[(i + 1) % len])) {
      pick = i;
      break;
    }
  }
  require(pick < len, "every edge of C coincides with X");
  // Walk backward from cv[pick] and forward from cv[pick+1] to X.
  std::size_t lo = pick;
  while (!contains_sorted(xv, cv[lo])) lo = (lo + len - 1) % len;
  std::size_t hi = (pick + 1) % len;
  while (!contains_sorted(xv, cv[hi])) hi = (hi + 1) % len;
  ColoredPath p0{{cv[lo]}, {}};
  for (std::size_t i = lo; i != hi; i = (i + 1) % len) {
    p0.colors.push_back(canon.colors[i]);
    p0.vertices.push_back(cv[(i + 1) % len]);
  }
  return ear_even_cycle(x, p0);
}

RainbowCycleWitness ectest_extract(const ColoredCycle& c, const PartitionPart& x) {
  require(x.kind != PartKind::RainbowTree, "X must be a cycle or a bad piece");
  return ectest_extract(c, x.graph);
}

int DepthTable::tree_of(Vertex v) const {
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].depth.count(v) > 0) return static_cast<int>(i);
  }
  return -1;
}

DepthTable forest_depth(const Graph& forest) {
  DepthTable table;
  const auto adj = forest.adjacency();
  for (const auto& comp : components(forest)) {
    TreeDepth tree;
    tree.root = comp.front();
    tree.depth[tree.root] = 0;
    tree.parent[tree.root] = tree.root;
    std::deque<Vertex> queue{tree.root};
    std::size_t edges_seen = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto& [y, c] : adj.at(x)) {
        if (y == tree.parent[x]) continue;
        if (tree.depth.count(y) > 0) throw Error(Errc::kNotAForest, "forest contains a cycle");
        ++edges_seen;
        tree.depth[y] = tree.depth[x] + 1;
        tree.parent[y] = x;
        tree.children[x].push_back(y);
        queue.push_back(y);
      }
    }
    if (edges_seen + 1 != comp.size()) throw Error(Errc::kNotAForest, "forest contains a cycle");
    for (const auto& [v, d] : tree.depth) table.total += d;
    table.trees.push_back(std::move(tree));
  }
  return table;
}

DepthTable depth_table(const FrankensteinGraph& fg) {
  std::vector<ColoredEdge> edges;
  for (const auto& p : fg.parts()) {
    if (p.kind == PartKind::RainbowTree) {
      edges.insert(edges.end(), p.graph.edges().begin(), p.graph.edges().end());
    }
  }
  return forest_depth(make_graph(std::move(edges), fg.n()));
}

nlohmann::json partition_to_json(const FrankensteinGraph& fg) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : fg.parts()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : p.graph.edges()) edges.push_back({e.u, e.v, e.color});
    parts.push_back({{"kind", to_string(p.kind)}, {"edges", edges}});
  }
  return nlohmann::json{{"parts", parts}};
}

FrankensteinGraph partition_from_json(const nlohmann::json& j, int n) {
  std::vector<PartitionPart> parts;
  try {
    for (const auto& p : j.at("parts")) {
      std::vector<ColoredEdge> edges;
      for (const auto& e : p.at("edges")) {
        edges.push_back(ColoredEdge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
      }
      parts.push_back({part_kind_from_string(p.at("kind").get<std::string>()),
                       make_graph(std::move(edges), n)});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::kMalformedInput, ex.what());
  }
  return FrankensteinGraph(n, std::move(parts));
}

}  // namespace rainbow
