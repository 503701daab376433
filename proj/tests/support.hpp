#pragma once

// Brute-force oracles and random instance generators shared by the unit
// tests and the acceptance binary. The oracles use none of the library's
// search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/frankenstein.hpp"

namespace testsupport {

using rainbow::Color;
using rainbow::ColoredCycle;
using rainbow::ColoredEdge;
using rainbow::Family;
using rainbow::Graph;
using rainbow::Vertex;
using rainbow::VertexCycle;

std::uint64_t& seed_slot();
inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(seed_slot() * 1000003ULL + salt); }

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---------------------------------------------------------------- oracles

// Colored edges as a flat list; parallel edges of different colors allowed.
using EdgeList = std::vector<ColoredEdge>;

inline EdgeList family_edges(const Family& fam) {
  EdgeList out;
  for (Color c = 1; c <= static_cast<Color>(fam.size()); ++c) {
    const auto& cyc = fam.cycle(c);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Vertex a = cyc[i];
      const Vertex b = cyc[(i + 1) % cyc.size()];
      out.push_back({std::min(a, b), std::max(a, b), c});
    }
  }
  return out;
}

// Depth-first search over (vertex, color) choices: a rainbow cycle whose
// length satisfies `accepts`, or none.
inline std::optional<ColoredCycle> naive_rainbow_cycle(int n, const EdgeList& edges,
                                                       const std::function<bool(int)>& accepts) {
  std::vector<std::vector<std::pair<Vertex, Color>>> adj(static_cast<std::size_t>(n + 1));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.color});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.color});
  }
  std::vector<Vertex> path;
  std::vector<Color> colors;
  std::vector<char> on(static_cast<std::size_t>(n + 1), 0);
  std::set<Color> used;
  std::optional<ColoredCycle> found;
  std::function<void(Vertex)> dfs = [&](Vertex s) {
    const Vertex last = path.back();
    for (const auto& [y, c] : adj[static_cast<std::size_t>(last)]) {
      if (found) return;
      if (used.count(c) > 0) continue;
      if (y == s && path.size() >= 3 && accepts(static_cast<int>(path.size()))) {
        found = ColoredCycle{path, colors};
        found->colors.push_back(c);
        return;
      }
      if (y <= s || on[static_cast<std::size_t>(y)]) continue;
      on[static_cast<std::size_t>(y)] = 1;
      used.insert(c);
      path.push_back(y);
      colors.push_back(c);
      dfs(s);
      path.pop_back();
      colors.pop_back();
      used.erase(c);
      on[static_cast<std::size_t>(y)] = 0;
    }
  };
  for (Vertex s = 1; s <= n && !found; ++s) {
    path = {s};
    on[static_cast<std::size_t>(s)] = 1;
    dfs(s);
    on[static_cast<std::size_t>(s)] = 0;
  }
  return found;
}

inline bool naive_has_rainbow_even(int n, const EdgeList& edges) {
  return naive_rainbow_cycle(n, edges, [](int len) { return len % 2 == 0; }).has_value();
}

// Every edge subset of a small simple graph; true if some subset is a
// single even cycle with distinct colors.
inline bool subset_has_rainbow_even(const Graph& g) {
  const auto& es = g.edges();
  const std::size_t m = es.size();
  if (m > 22) throw std::runtime_error("subset oracle limited to 22 edges");
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 4 || k % 2 != 0) continue;
    std::map<Vertex, int> deg;
    std::set<Color> cs;
    std::vector<ColoredEdge> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        ++deg[es[i].u];
        ++deg[es[i].v];
        cs.insert(es[i].color);
        sub.push_back(es[i]);
      }
    }
    if (static_cast<int>(cs.size()) != k) continue;
    if (!std::all_of(deg.begin(), deg.end(), [](const auto& p) { return p.second == 2; })) continue;
    if (static_cast<int>(deg.size()) != k) continue;
    // connected?
    std::set<Vertex> seen{sub.front().u};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : sub) {
        if (seen.count(e.u) != seen.count(e.v)) {
          seen.insert(e.u);
          seen.insert(e.v);
          grew = true;
        }
      }
    }
    if (static_cast<int>(seen.size()) == k) return true;
  }
  return false;
}

// Injective choice of one color per slot, by exhaustive tuples.
inline bool injective_tuple_exists(const std::vector<std::vector<Color>>& slots) {
  std::set<Color> used;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == slots.size()) return true;
    for (Color c : slots[i]) {
      if (used.count(c) > 0) continue;
      used.insert(c);
      if (go(i + 1)) return true;
      used.erase(c);
    }
    return false;
  };
  return go(0);
}

// Witness check that does not use the library's verifier.
inline bool witness_ok(const ColoredCycle& w, const EdgeList& edges, bool need_even) {
  const std::size_t len = w.vertices.size();
  if (len < 3 || w.colors.size() != len) return false;
  if (need_even && len % 2 != 0) return false;
  if (std::set<Vertex>(w.vertices.begin(), w.vertices.end()).size() != len) return false;
  if (std::set<Color>(w.colors.begin(), w.colors.end()).size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = std::min(w.vertices[i], w.vertices[(i + 1) % len]);
    const Vertex b = std::max(w.vertices[i], w.vertices[(i + 1) % len]);
    const ColoredEdge e{a, b, w.colors[i]};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- generators

inline VertexCycle random_cycle_on(std::mt19937_64& rng, int n, int len) {
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(len));
  return pool;
}

inline VertexCycle random_even_cycle(std::mt19937_64& rng, int n) {
  const int len = 4 + 2 * uniform(rng, 0, (n / 2 * 2 - 4) / 2);
  return random_cycle_on(rng, n, len);
}

// m random even cycles; with probability 1/2 each cycle is drawn from a
// smaller vertex pool so that cycles overlap more.
inline Family random_even_family(std::mt19937_64& rng, int n, int m) {
  const int pool = n <= 4 ? n : uniform(rng, 4, n);
  std::vector<Vertex> active(static_cast<std::size_t>(n));
  std::iota(active.begin(), active.end(), 1);
  std::shuffle(active.begin(), active.end(), rng);
  active.resize(static_cast<std::size_t>(pool));
  std::vector<VertexCycle> cycles;
  for (int i = 0; i < m; ++i) {
    if (uniform(rng, 0, 1) == 0) {
      auto c = random_even_cycle(rng, pool);
      for (auto& v : c) v = active[static_cast<std::size_t>(v - 1)];
      cycles.push_back(c);
    } else {
      cycles.push_back(random_even_cycle(rng, n));
    }
  }
  return Family(n, cycles);
}

// Vertex sequences of s-t paths of the given lengths; interior vertices are
// numbered consecutively from first_fresh.
inline std::vector<std::vector<Vertex>> theta_paths(const std::vector<int>& lengths, Vertex first_fresh,
                                                    Vertex s, Vertex t) {
  std::vector<std::vector<Vertex>> out;
  Vertex next = first_fresh;
  for (int len : lengths) {
    std::vector<Vertex> p{s};
    for (int i = 1; i < len; ++i) p.push_back(next++);
    p.push_back(t);
    out.push_back(p);
  }
  return out;
}

struct PartSpec {
  rainbow::PartKind kind;
  std::vector<ColoredEdge> edges;
};

// Bad piece on `s`, `t` and fresh vertices: two same-parity paths share the
// repeated color, the third path has the other parity.
inline std::vector<ColoredEdge> random_bad_piece(std::mt19937_64& rng, Vertex s, Vertex t, Vertex& fresh,
                                                 Color& color) {
  for (;;) {
    std::vector<int> lens{uniform(rng, 1, 4), uniform(rng, 1, 4), uniform(rng, 1, 4)};
    std::sort(lens.begin(), lens.end());
    if (lens[0] == 1 && lens[1] == 1) continue;
    int vertices = 2;
    for (int l : lens) vertices += l - 1;
    if (vertices < 6) continue;
    // indices of two same-parity paths and one of the other parity
    int a = -1, b = -1, c = -1;
    for (int i = 0; i < 3 && a < 0; ++i) {
      for (int j = i + 1; j < 3 && a < 0; ++j) {
        const int k = 3 - i - j;
        if (lens[i] % 2 == lens[j] % 2 && lens[k] % 2 != lens[i] % 2) {
          a = i;
          b = j;
          c = k;
        }
      }
    }
    if (a < 0) continue;
    (void)c;
    const auto paths = theta_paths(lens, fresh, s, t);
    fresh = static_cast<Vertex>(fresh + vertices - 2);
    const Color repeated = color++;
    std::vector<ColoredEdge> out;
    for (int i = 0; i < 3; ++i) {
      const auto& p = paths[static_cast<std::size_t>(i)];
      const int pos = uniform(rng, 0, static_cast<int>(p.size()) - 2);
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        const bool rep = (i == a || i == b) && static_cast<int>(k) == pos;
        out.push_back(rainbow::make_edge(p[k], p[k + 1], rep ? repeated : color++));
      }
    }
    return out;
  }
}

// A valid Frankenstein graph glued from random parts, each meeting the
// union of the earlier ones in at most one vertex. Vertices are relabeled
// randomly inside [n].
inline rainbow::FrankensteinGraph random_frankenstein(std::mt19937_64& rng, int parts_wanted) {
  using rainbow::PartKind;
  std::vector<PartSpec> parts;
  Vertex fresh = 1;
  Color color = 1;
  std::set<Vertex> tree_vertices;
  std::vector<Vertex> all;
  auto anchor = [&](bool for_tree) -> Vertex {
    std::vector<Vertex> pool;
    for (Vertex v : all) {
      if (!for_tree || tree_vertices.count(v) == 0) pool.push_back(v);
    }
    if (pool.empty() || uniform(rng, 0, 3) == 0) return fresh++;
    return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
  };
  for (int k = 0; k < parts_wanted; ++k) {
    const int kind = uniform(rng, 0, 2);
    PartSpec spec;
    if (kind == 0) {
      spec.kind = PartKind::LongOddCycle;
      const Vertex a = anchor(false);
      const int len = uniform(rng, 0, 1) == 0 ? 7 : 9;
      std::vector<Vertex> cyc{a};
      for (int i = 1; i < len; ++i) cyc.push_back(fresh++);
      for (int i = 0; i < len; ++i) {
        spec.edges.push_back(rainbow::make_edge(cyc[static_cast<std::size_t>(i)],
                                                cyc[static_cast<std::size_t>((i + 1) % len)], color++));
      }
    } else if (kind == 1) {
      spec.kind = PartKind::BadPiece;
      const Vertex s = anchor(false);
      const Vertex t = fresh++;
      spec.edges = random_bad_piece(rng, s, t, fresh, color);
    } else {
      spec.kind = PartKind::RainbowTree;
      const Vertex root = anchor(true);
      std::vector<Vertex> tv{root};
      const int size = uniform(rng, 1, 5);
      for (int i = 0; i < size; ++i) {
        const Vertex p = tv[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(tv.size()) - 1))];
        const Vertex c = fresh++;
        tv.push_back(c);
        spec.edges.push_back(rainbow::make_edge(p, c, color++));
      }
      tree_vertices.insert(tv.begin(), tv.end());
    }
    for (const auto& e : spec.edges) {
      for (Vertex v : {e.u, e.v}) {
        if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
      }
    }
    parts.push_back(std::move(spec));
  }
  const int n = static_cast<int>(fresh) - 1 + uniform(rng, 0, 2);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Color> cperm(static_cast<std::size_t>(color - 1));
  std::iota(cperm.begin(), cperm.end(), 1);
  std::shuffle(cperm.begin(), cperm.end(), rng);
  std::vector<rainbow::PartitionPart> out;
  for (const auto& spec : parts) {
    std::vector<ColoredEdge> edges;
    for (const auto& e : spec.edges) {
      edges.push_back(rainbow::make_edge(perm[static_cast<std::size_t>(e.u - 1)],
                                         perm[static_cast<std::size_t>(e.v - 1)],
                                         cperm[static_cast<std::size_t>(e.color - 1)]));
    }
    out.push_back({spec.kind, rainbow::make_graph(edges, n)});
  }
  return rainbow::FrankensteinGraph(n, out);
}

}  // namespace testsupport
