#include "rainbow/theta.hpp"

#include <algorithm>
#include <set>

namespace rainbow {

Graph ThetaGraph::graph(int n) const {
  std::vector<ColoredEdge> edges;
  for (const auto& p : paths) {
    const auto pe = p.edges();
    edges.insert(edges.end(), pe.begin(), pe.end());
  }
  return make_graph(std::move(edges), n);
}

std::optional<ThetaGraph> theta_decompose(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<Vertex> branch;
  for (const auto& [v, list] : adj) {
    if (list.size() == 3) {
      branch.push_back(v);
    } else if (list.size() != 2) {
      return std::nullopt;
    }
  }
  if (branch.size() != 2) return std::nullopt;
  ThetaGraph theta;
  theta.s = branch[0];
  theta.t = branch[1];

  std::size_t total = 0;
  const auto& start = adj.at(theta.s);
  for (std::size_t i = 0; i < 3; ++i) {
    ColoredPath path{{theta.s}, {}};
    Vertex prev = theta.s;
    Vertex cur = start[i].first;
    Color color = start[i].second;
    while (true) {
      path.vertices.push_back(cur);
      path.colors.push_back(color);
      if (cur == theta.t) break;
      if (cur == theta.s || path.vertices.size() > adj.size()) return std::nullopt;
      const auto& next = adj.at(cur);
      const auto& step = next[0].first == prev ? next[1] : next[0];
      prev = cur;
      cur = step.first;
      color = step.second;
    }
    total += path.length();
    theta.paths[i] = std::move(path);
  }
  if (total != g.size()) return std::nullopt;
  std::sort(theta.paths.begin(), theta.paths.end(), [](const ColoredPath& a, const ColoredPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return theta;
}

namespace {

bool path_is_rainbow(const ColoredPath& p) {
  std::set<Color> seen(p.colors.begin(), p.colors.end());
  return seen.size() == p.colors.size();
}

}  // namespace

bool is_bad_piece(const Graph& g) {
  const auto theta = theta_decompose(g);
  if (!theta) return false;
  for (const auto& p : theta->paths) {
    if (!path_is_rainbow(p)) return false;
  }
  return is_almost_rainbow(g) && g.vertices().size() >= 6;
}

}  // namespace rainbow
