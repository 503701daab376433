#pragma once

// Randomized property checks. Each returns an empty string on success and a
// description of the counterexample otherwise.

#include <sstream>
#include <string>

#include "rainbow/cycles.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/frankenstein.hpp"
#include "rainbow/theta.hpp"
#include "support.hpp"

namespace testsupport {

inline std::string describe(const ColoredCycle& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) os << c.vertices[i] << "-(" << c.colors[i] << ")-";
  return os.str();
}

inline std::string describe(const EdgeList& edges) {
  std::ostringstream os;
  for (const auto& e : edges) os << "(" << e.u << "," << e.v << ":" << e.color << ")";
  return os.str();
}

// A rainbow theta on random path lengths, randomly relabeled.
inline Graph random_rainbow_theta(std::mt19937_64& rng) {
  std::vector<int> lens;
  for (;;) {
    lens = {uniform(rng, 1, 5), uniform(rng, 1, 5), uniform(rng, 1, 5)};
    if (std::count(lens.begin(), lens.end(), 1) <= 1) break;
  }
  const auto paths = theta_paths(lens, 3, 1, 2);
  int n = 2;
  for (int l : lens) n += l - 1;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Color> colors(static_cast<std::size_t>(n + 3));
  std::iota(colors.begin(), colors.end(), 1);
  std::shuffle(colors.begin(), colors.end(), rng);
  std::vector<ColoredEdge> edges;
  std::size_t next = 0;
  for (const auto& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      edges.push_back(rainbow::make_edge(perm[static_cast<std::size_t>(p[i] - 1)],
                                         perm[static_cast<std::size_t>(p[i + 1] - 1)], colors[next++]));
    }
  }
  return rainbow::make_graph(edges, n);
}

inline std::string check_theta_even_cycle(std::mt19937_64& rng) {
  const Graph g = random_rainbow_theta(rng);
  const auto w = rainbow::theta_even_cycle(g);
  if (!witness_ok(w, g.edges(), true)) return "theta output invalid: " + describe(w) + " in " + describe(g.edges());
  if (!subset_has_rainbow_even(g)) return "subset oracle disagrees on a rainbow theta";
  return {};
}

// X is a rainbow cycle (length 3..9) or a bad piece; C meets X in at least
// two vertices and uses fresh colors off X.
struct EctestInstance {
  Graph x;
  ColoredCycle c;
  int n = 0;
};

inline std::optional<EctestInstance> random_ectest_instance(std::mt19937_64& rng) {
  Vertex fresh = 1;
  Color color = 1;
  std::vector<ColoredEdge> xe;
  if (uniform(rng, 0, 1) == 0) {
    const int len = uniform(rng, 3, 9);
    for (int i = 0; i < len; ++i) {
      xe.push_back(rainbow::make_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>((i + 1) % len + 1), color++));
    }
    fresh = static_cast<Vertex>(len + 1);
  } else {
    const Vertex s = fresh++;
    const Vertex t = fresh++;
    xe = random_bad_piece(rng, s, t, fresh, color);
  }
  const int nx = static_cast<int>(fresh) - 1;
  const int shared = uniform(rng, 2, std::min(nx, 5));
  const int extra = uniform(rng, 0, 4);
  std::vector<Vertex> xs(static_cast<std::size_t>(nx));
  std::iota(xs.begin(), xs.end(), 1);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::vector<Vertex> cv(xs.begin(), xs.begin() + shared);
  for (int i = 0; i < extra; ++i) cv.push_back(fresh++);
  std::shuffle(cv.begin(), cv.end(), rng);
  if (cv.size() < 3) return std::nullopt;
  const int n = static_cast<int>(fresh) - 1;
  const Graph x = rainbow::make_graph(xe, n);
  ColoredCycle c{cv, {}};
  for (std::size_t i = 0; i < cv.size(); ++i) {
    const auto* e = x.find(cv[i], cv[(i + 1) % cv.size()]);
    if (e != nullptr && uniform(rng, 0, 1) == 0) {
      c.colors.push_back(e->color);
    } else {
      c.colors.push_back(color++);
    }
  }
  if (std::set<Color>(c.colors.begin(), c.colors.end()).size() != c.colors.size()) return std::nullopt;
  bool outside = false;
  for (const auto& e : c.edges()) outside = outside || !x.has_pair(e.u, e.v);
  if (!outside) return std::nullopt;
  return EctestInstance{x, c, n};
}

inline std::string check_ectest(std::mt19937_64& rng) {
  std::optional<EctestInstance> inst;
  while (!inst) inst = random_ectest_instance(rng);
  EdgeList all = inst->x.edges();
  for (const auto& e : inst->c.edges()) {
    if (std::find(all.begin(), all.end(), e) == all.end()) all.push_back(e);
  }
  const auto w = rainbow::ectest_extract(inst->c, inst->x);
  if (!witness_ok(w, all, true)) return "ectest output invalid: " + describe(w) + " in " + describe(all);
  const auto mg = rainbow::ColoredMultigraph::from_edges(inst->n, all);
  if (!rainbow::find_rainbow_a_cycle(mg, rainbow::LengthClass::even())) {
    return "exhaustive detector finds nothing in C u X";
  }
  if (!naive_has_rainbow_even(inst->n, all)) return "naive oracle finds nothing in C u X";
  return {};
}

inline std::vector<ColoredCycle> cycles_of(const Graph& g) {
  std::vector<ColoredCycle> out;
  const auto mg = rainbow::ColoredMultigraph::from_graph(g);
  rainbow::for_each_cycle(mg, rainbow::CycleQuery{}, [&](const VertexCycle& vc) {
    ColoredCycle c{vc, {}};
    for (std::size_t i = 0; i < vc.size(); ++i) c.colors.push_back(g.find(vc[i], vc[(i + 1) % vc.size()])->color);
    out.push_back(c);
    return true;
  });
  return out;
}

inline std::string check_frankenstein_structure(std::mt19937_64& rng) {
  const auto fg = random_frankenstein(rng, uniform(rng, 1, 6));
  const auto report = rainbow::validate_frankenstein(fg);
  if (!report.ok()) return std::string("generated graph invalid: ") + report.first()->message;
  if (!rainbow::aux_bipartite(fg).acyclic) return "aux graph has a cycle";
  const auto order = rainbow::gluing_order(fg);
  if (order.size() != fg.parts().size()) return "gluing order misses parts";
  if (rainbow::max_prefix_overlap(fg, order) > 1) return "prefix overlap above one";
  if (fg.graph().vertices().size() >= 2 && rainbow::make_rational(6, 5) < rainbow::color_bound(fg)) {
    return "color bound above 6/5: " + rainbow::color_bound(fg).to_string();
  }
  for (const auto& c : cycles_of(fg.graph())) {
    int holders = 0;
    int holder = -1;
    for (std::size_t i = 0; i < fg.parts().size(); ++i) {
      const auto& part = fg.parts()[i].graph;
      bool all_in = true;
      for (const auto& e : c.edges()) all_in = all_in && part.contains(e);
      if (all_in) {
        ++holders;
        holder = static_cast<int>(i);
      }
    }
    if (holders != 1) return "cycle " + describe(c) + " lies in " + std::to_string(holders) + " parts";
    if (rainbow::locate_cycle_part(fg, c) != holder) return "locate_cycle_part disagrees";
  }
  return {};
}

inline std::string check_color_sdr(std::mt19937_64& rng) {
  const int n = uniform(rng, 4, 8);
  std::vector<VertexCycle> cycles;
  const int m = uniform(rng, 2, 10);
  for (int i = 0; i < m; ++i) cycles.push_back(random_cycle_on(rng, n, uniform(rng, 3, n)));
  const Family fam(n, cycles);
  const auto all = rainbow::enumerate_cycles(fam, rainbow::Parity::Any, 3, 8);
  if (all.empty()) return {};
  const auto& cyc = all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
  std::set<Color> forbidden;
  for (Color c = 1; c <= m; ++c) {
    if (uniform(rng, 0, 4) == 0) forbidden.insert(c);
  }
  std::vector<std::vector<Color>> slots;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    std::vector<Color> s;
    for (Color c : fam.colors_on(cyc[i], cyc[(i + 1) % cyc.size()])) {
      if (forbidden.count(c) == 0) s.push_back(c);
    }
    slots.push_back(s);
  }
  const auto got = rainbow::color_sdr(cyc, fam, forbidden);
  const bool expect = injective_tuple_exists(slots);
  if (got.has_value() != expect) return "color_sdr disagrees with the tuple oracle";
  if (got) {
    if (std::set<Color>(got->begin(), got->end()).size() != got->size()) return "assignment not injective";
    for (std::size_t i = 0; i < got->size(); ++i) {
      if (std::find(slots[i].begin(), slots[i].end(), (*got)[i]) == slots[i].end()) return "assignment off slot";
    }
  }
  return {};
}

}  // namespace testsupport
