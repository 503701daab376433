#include "rainbow/extractor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rainbow/cycles.hpp"

namespace rainbow {

namespace {

[[noreturn]] void breach(const std::string& msg, const ExtractorState* st = nullptr) {
  throw Error(Errc::kInvariantBreach, msg, st != nullptr ? st->to_json().dump() : std::string{});
}

std::vector<int> dsu_labels(const std::vector<ColoredEdge>& edges, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : edges) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  std::vector<int> label(static_cast<std::size_t>(n + 1));
  for (int v = 0; v <= n; ++v) label[static_cast<std::size_t>(v)] = find(v);
  return label;
}

std::vector<Graph> split_forest(const Graph& forest) {
  const auto label = dsu_labels(forest.edges(), forest.n());
  std::map<int, std::vector<ColoredEdge>> groups;
  for (const auto& e : forest.edges()) groups[label[static_cast<std::size_t>(e.u)]].push_back(e);
  std::vector<Graph> out;
  for (auto& [root, edges] : groups) out.push_back(make_graph(std::move(edges), forest.n()));
  return out;
}

int shared_count(const std::vector<Vertex>& vs, const Graph& x) {
  int k = 0;
  for (Vertex v : vs) k += x.has_vertex(v) ? 1 : 0;
  return k;
}

std::vector<Vertex> cycle_vertex_set(const ColoredCycle& c) {
  auto vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  return vs;
}

bool is_simple_rainbow(const ColoredCycle& c) {
  if (c.vertices.size() < 3 || c.vertices.size() != c.colors.size()) return false;
  std::set<Vertex> vs(c.vertices.begin(), c.vertices.end());
  std::set<Color> cs(c.colors.begin(), c.colors.end());
  return vs.size() == c.vertices.size() && cs.size() == c.colors.size();
}

// p runs from f's one end to the other; f closes it.
ColoredCycle close_path(const ColoredPath& p, Color f_color) {
  ColoredCycle c{p.vertices, p.colors};
  c.colors.push_back(f_color);
  return c;
}

std::optional<Witness> try_ectest(const ColoredCycle& c, const Graph& x, const std::string& source) {
  try {
    return Witness{ectest_extract(c, x), source};
  } catch (const Error& e) {
    if (e.code() != Errc::kPreconditionViolated) throw;
  }
  return std::nullopt;
}

std::optional<Witness> f2_witness(const ExtractorState& st) {
  if (auto w = find_rainbow_even_cycle(st.fg().graph())) return Witness{*w, "even_cycle_in_subgraph"};
  return std::nullopt;
}

ColoredPath path_or_trivial(const ExtractorState& st, Vertex s, Vertex t) {
  if (s == t) return ColoredPath{{s}, {}};
  auto p = rainbow_path(st.fg(), s, t);
  if (!p) breach("no rainbow path inside a component", &st);
  return *p;
}

// Vertices of D_c from `start` to `stop`, leaving `start` away from `stop`.
std::vector<Vertex> walk_cycle(const Family& fam, Color c, Vertex start, Vertex stop) {
  const auto& cyc = fam.cycle(c);
  const auto len = static_cast<long>(cyc.size());
  const long i0 = std::find(cyc.begin(), cyc.end(), start) - cyc.begin();
  const long dir = cyc[static_cast<std::size_t>((i0 + 1) % len)] == stop ? -1 : 1;
  std::vector<Vertex> out{start};
  for (long i = i0;;) {
    i = ((i + dir) % len + len) % len;
    out.push_back(cyc[static_cast<std::size_t>(i)]);
    if (out.back() == stop) break;
  }
  return out;
}

const PartitionPart* part_of(const FrankensteinGraph& fg, const ColoredEdge& e) {
  for (const auto& p : fg.parts()) {
    if (p.graph.contains(e)) return &p;
  }
  return nullptr;
}

// A closed rainbow odd cycle of length >= 7 joins the odd cycles, unless it
// meets one of them twice; then the pair carries a rainbow even cycle.
std::variant<Improvement, Witness> long_odd_move(const ExtractorState& st, const ColoredCycle& c,
                                                 const std::string& reason) {
  const auto vs = cycle_vertex_set(c);
  for (const auto& x : st.odd_cycles()) {
    if (shared_count(vs, x) < 2) continue;
    if (auto w = try_ectest(c, x, "cycle_meets_odd_cycle")) return *w;
    breach("long odd cycle meets an odd cycle twice without an even cycle", &st);
  }
  auto cs = st.odd_cycles();
  cs.push_back(c.graph(st.n()));
  return Improvement{MoveKind::AddOddCycle,
                     ExtractorState(st.family_ptr(), std::move(cs), {}, Graph(st.n())), reason};
}

// Re-hangs the deeper of u, v below the other when they are two levels
// apart on one tree path of length two.
std::optional<Improvement> depth_move(const ExtractorState& st, const ColoredEdge& f) {
  const auto& table = st.depth();
  const int ti = table.tree_of(f.u);
  if (ti < 0 || ti != table.tree_of(f.v)) return std::nullopt;
  const auto& tree = table.trees[static_cast<std::size_t>(ti)];
  for (const auto& [x, y] : {std::pair{f.u, f.v}, std::pair{f.v, f.u}}) {
    const Vertex px = tree.parent.at(x);
    if (px == x) continue;
    if (tree.parent.at(px) == y && px != y && tree.depth.at(x) == tree.depth.at(y) + 2) {
      const ColoredEdge* up = st.forest().find(x, px);
      if (up == nullptr) breach("tree edge missing from forest", &st);
      return Improvement{MoveKind::ReduceDepth, st.with_forest(st.forest().with(f).without(*up)),
                         "rehang_vertex"};
    }
  }
  return std::nullopt;
}

// Rainbow u-v paths of length 4 in the subgraph.
std::optional<ColoredPath> rainbow_four_path(const Graph& g, Vertex u, Vertex v) {
  const auto adj = g.adjacency();
  ColoredPath path{{u}, {}};
  std::function<bool()> dfs = [&]() -> bool {
    const Vertex last = path.vertices.back();
    if (path.length() == 4) return last == v;
    auto it = adj.find(last);
    if (it == adj.end()) return false;
    for (const auto& [y, c] : it->second) {
      if (std::find(path.vertices.begin(), path.vertices.end(), y) != path.vertices.end()) continue;
      if (std::find(path.colors.begin(), path.colors.end(), c) != path.colors.end()) continue;
      if (y == v && path.length() != 3) continue;
      path.vertices.push_back(y);
      path.colors.push_back(c);
      if (dfs()) return true;
      path.vertices.pop_back();
      path.colors.pop_back();
    }
    return false;
  };
  if (dfs()) return path;
  return std::nullopt;
}

// Witness from a triangle through an outer edge whose apex edges leave the
// trees, a depth move, or nothing when u, v are siblings below the apex.
std::optional<std::variant<Improvement, Witness>> check_triangle(const ExtractorState& st,
                                                                 const OuterCycle& oc) {
  const Vertex u = oc.cycle.vertices[0];
  const Vertex w = oc.cycle.vertices[1];
  const Vertex v = oc.cycle.vertices[2];
  const auto& g = st.fg().graph();
  for (Vertex x : {u, v}) {
    const ColoredEdge* e = g.find(x, w);
    if (e == nullptr) breach("triangle edge missing", &st);
    const PartitionPart* part = part_of(st.fg(), *e);
    if (part == nullptr) breach("edge in no part", &st);
    if (part->kind == PartKind::RainbowTree) continue;
    if (auto wt = try_ectest(oc.cycle, part->graph, "triangle_meets_part")) return *wt;
    breach("triangle meets a part twice without an even cycle", &st);
  }
  if (auto m = depth_move(st, oc.f.edge)) return *m;
  const auto& table = st.depth();
  const int ti = table.tree_of(w);
  if (ti < 0 || table.tree_of(u) != ti || table.tree_of(v) != ti) breach("triangle not in one tree", &st);
  const auto& tree = table.trees[static_cast<std::size_t>(ti)];
  if (tree.parent.at(u) != w || tree.parent.at(v) != w || u == tree.root || v == tree.root) {
    breach("triangle ends are not children of the apex", &st);
  }
  return std::nullopt;
}

void for_each_rainbow_path(const Graph& g, Vertex a, Vertex b,
                           const std::function<bool(Vertex)>& interior_ok,
                           const std::function<bool(const ColoredPath&)>& visit) {
  const auto adj = g.adjacency();
  ColoredPath path{{a}, {}};
  std::function<bool()> dfs = [&]() -> bool {
    const Vertex last = path.vertices.back();
    if (last == b) return visit(path);
    auto it = adj.find(last);
    if (it == adj.end()) return true;
    for (const auto& [y, c] : it->second) {
      if (y != b && !interior_ok(y)) continue;
      if (std::find(path.vertices.begin(), path.vertices.end(), y) != path.vertices.end()) continue;
      if (std::find(path.colors.begin(), path.colors.end(), c) != path.colors.end()) continue;
      path.vertices.push_back(y);
      path.colors.push_back(c);
      const bool go_on = dfs();
      path.vertices.pop_back();
      path.colors.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  dfs();
}

// Rainbow even cycle in B ∪ X through an ear of B over two vertices of X.
std::optional<Witness> ear_through(const Graph& b, const Graph& x) {
  std::vector<Vertex> shared;
  for (Vertex v : b.vertices()) {
    if (x.has_vertex(v)) shared.push_back(v);
  }
  std::optional<Witness> found;
  for (std::size_t i = 0; i < shared.size() && !found; ++i) {
    for (std::size_t j = i + 1; j < shared.size() && !found; ++j) {
      for_each_rainbow_path(
          b, shared[i], shared[j], [&x](Vertex y) { return !x.has_vertex(y); },
          [&](const ColoredPath& p) {
            try {
              found = Witness{ear_even_cycle(x, p), "ear_over_part"};
              return false;
            } catch (const Error& e) {
              if (e.code() != Errc::kPreconditionViolated) throw;
            }
            return true;
          });
    }
  }
  return found;
}

std::variant<Improvement, Witness> run_pipeline(const ExtractorState& st) {
  std::vector<OuterEdge> outer;
  for (Color lam : st.absent_colors()) {
    auto r = find_outer_edges(st, lam);
    if (auto* w = std::get_if<Witness>(&r)) return *w;
    auto& edges = std::get<std::vector<OuterEdge>>(r);
    outer.insert(outer.end(), edges.begin(), edges.end());
  }
  if (outer.empty()) breach("no absent color", &st);

  std::optional<FiveCycleContext> ctx;
  std::vector<OuterCycle> threes;
  for (const auto& f : outer) {
    auto r = find_outer_cycle(st, f);
    if (auto* imp = std::get_if<Improvement>(&r)) return *imp;
    if (auto* w = std::get_if<Witness>(&r)) return *w;
    const auto& oc = std::get<OuterCycle>(r);
    if (oc.cycle.length() == 5) {
      ctx = FiveCycleContext{st, f.edge, oc.cycle};
      break;
    }
    threes.push_back(oc);
  }
  if (!ctx) {
    for (const auto& oc : threes) {
      if (auto r = check_triangle(st, oc)) {
        if (auto* imp = std::get_if<Improvement>(&*r)) return *imp;
        return std::get<Witness>(*r);
      }
    }
    auto r = resolve_outer3(st, threes.front());
    if (auto* imp = std::get_if<Improvement>(&r)) return *imp;
    if (auto* w = std::get_if<Witness>(&r)) return *w;
    ctx = std::get<FiveCycleContext>(r);
  }
  auto grown = grow_5cycle(*ctx);
  if (auto* w = std::get_if<Witness>(&grown)) return *w;
  return build_bad_piece(st, std::get<Growth>(grown));
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

// ---------------------------------------------------------------- state

ExtractorState::ExtractorState(std::shared_ptr<const Family> fam)
    : ExtractorState(fam, {}, {}, Graph(fam->n())) {}

ExtractorState::ExtractorState(std::shared_ptr<const Family> fam, std::vector<Graph> odd_cycles,
                               std::vector<Graph> bad_pieces, Graph forest)
    : fam_(std::move(fam)),
      odd_cycles_(std::move(odd_cycles)),
      bad_pieces_(std::move(bad_pieces)),
      forest_(std::move(forest)) {
  refresh();
}

void ExtractorState::refresh() {
  const int n = fam_->n();
  std::vector<PartitionPart> parts;
  for (const auto& c : odd_cycles_) parts.push_back({PartKind::LongOddCycle, c});
  for (const auto& b : bad_pieces_) parts.push_back({PartKind::BadPiece, b});
  for (auto& t : split_forest(forest_)) parts.push_back({PartKind::RainbowTree, std::move(t)});
  fg_ = FrankensteinGraph(n, std::move(parts));
  depth_ = forest_depth(forest_);
  const auto used = fg_.graph().colors();
  absent_.clear();
  for (Color c = 1; c <= static_cast<Color>(fam_->size()); ++c) {
    if (!std::binary_search(used.begin(), used.end(), c)) absent_.push_back(c);
  }
  comp_ = dsu_labels(fg_.graph().edges(), n);
}

Potential ExtractorState::potential() const {
  return Potential{static_cast<int>(odd_cycles_.size()), static_cast<int>(bad_pieces_.size()),
                   static_cast<int>(fg_.graph().size()), -depth_.total};
}

ExtractorState ExtractorState::with_forest(Graph forest) const {
  return ExtractorState(fam_, odd_cycles_, bad_pieces_, std::move(forest));
}

nlohmann::json ExtractorState::to_json() const {
  auto j = partition_to_json(fg_);
  j["n"] = n();
  j["potential"] = potential().to_json();
  return j;
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::AddOddCycle: return "add_odd_cycle";
    case MoveKind::AddBadPiece: return "add_bad_piece";
    case MoveKind::AddEdge: return "add_edge";
    case MoveKind::ReduceDepth: return "reduce_depth";
  }
  return "?";
}

nlohmann::json TraceEntry::to_json() const {
  return {{"iteration", iteration}, {"move", rainbow::to_string(kind)}, {"reason", reason},
          {"before", before.to_json()}, {"after", after.to_json()}};
}

// ---------------------------------------------------------------- moves

StepResult step_or_improve(const ExtractorState& st) {
  const auto& fam = st.family();
  const auto& g = st.fg().graph();
  for (Color lam : st.absent_colors()) {
    for (const auto& e : fam.cycle_edges(lam)) {
      if (g.has_pair(e.u, e.v) || st.component_of(e.u) != st.component_of(e.v)) continue;
      const auto c = close_path(path_or_trivial(st, e.u, e.v), lam);
      if (c.length() % 2 == 0) return Witness{c, "even_closure"};
      if (c.length() >= 7) {
        auto r = long_odd_move(st, c, "long_closure");
        if (auto* w = std::get_if<Witness>(&r)) return *w;
        return std::get<Improvement>(r);
      }
    }
  }
  for (Color lam : st.absent_colors()) {
    for (const auto& e : fam.cycle_edges(lam)) {
      if (st.component_of(e.u) == st.component_of(e.v)) continue;
      return Improvement{MoveKind::AddEdge, st.with_forest(st.forest().with(e)), "join_components"};
    }
  }
  for (Color lam : st.absent_colors()) {
    for (const auto& e : fam.cycle_edges(lam)) {
      if (g.has_pair(e.u, e.v)) continue;
      if (auto m = depth_move(st, e)) return *m;
    }
  }
  return NoMove{};
}

std::variant<std::vector<OuterEdge>, Witness> find_outer_edges(const ExtractorState& st, Color lam) {
  const auto& fam = st.family();
  const auto& g = st.fg().graph();
  std::vector<OuterEdge> outer;
  for (const auto& e : fam.cycle_edges(lam)) {
    if (!g.has_pair(e.u, e.v)) outer.push_back({e});
  }
  if (!outer.empty()) return outer;

  // D_lam is shadowed edge by edge inside the subgraph.
  const auto& cyc = fam.cycle(lam);
  ColoredCycle shadow{cyc, {}};
  std::map<Color, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto* e = g.find(cyc[i], cyc[(i + 1) % cyc.size()]);
    shadow.colors.push_back(e->color);
    at[e->color].push_back(i);
  }
  std::vector<Color> repeated;
  for (const auto& [c, pos] : at) {
    if (pos.size() > 2) breach("shadow cycle repeats a color three times", &st);
    if (pos.size() == 2) repeated.push_back(c);
  }
  if (repeated.empty()) return Witness{shadow, "covered_cycle"};
  if (repeated.size() > 1) breach("shadow cycle repeats two colors", &st);
  shadow.colors[at[repeated.front()].front()] = lam;
  return Witness{shadow, "covered_cycle_swap"};
}

std::variant<OuterEdge, Witness> find_outer_edge(const ExtractorState& st, Color lam) {
  auto r = find_outer_edges(st, lam);
  if (auto* w = std::get_if<Witness>(&r)) return *w;
  return std::get<std::vector<OuterEdge>>(r).front();
}

std::variant<OuterCycle, Improvement, Witness> find_outer_cycle(const ExtractorState& st,
                                                                const OuterEdge& f) {
  const auto& e = f.edge;
  if (st.component_of(e.u) != st.component_of(e.v)) {
    return Improvement{MoveKind::AddEdge, st.with_forest(st.forest().with(e)), "join_components"};
  }
  const auto c = close_path(path_or_trivial(st, e.u, e.v), e.color);
  if (c.length() % 2 == 0) return Witness{c, "even_closure"};
  if (c.length() >= 7) {
    auto r = long_odd_move(st, c, "long_closure");
    if (auto* w = std::get_if<Witness>(&r)) return *w;
    return std::get<Improvement>(r);
  }
  if (c.length() == 3) {
    if (auto p = rainbow_four_path(st.fg().graph(), e.u, e.v)) return OuterCycle{f, close_path(*p, e.color)};
  }
  return OuterCycle{f, c};
}

std::variant<FiveCycleContext, Improvement, Witness> resolve_outer3(const ExtractorState& st,
                                                                    const OuterCycle& c3) {
  if (auto r = check_triangle(st, c3)) {
    if (auto* imp = std::get_if<Improvement>(&*r)) return *imp;
    return std::get<Witness>(*r);
  }
  const auto& fam = st.family();
  const auto& forest = st.forest();
  const Color alpha = c3.f.edge.color;
  Vertex u = c3.cycle.vertices[0];
  const Vertex w = c3.cycle.vertices[1];
  Vertex v = c3.cycle.vertices[2];

  const auto& table = st.depth();
  const auto& tree = table.trees[static_cast<std::size_t>(table.tree_of(w))];
  std::set<Vertex> star{w};
  if (auto it = tree.children.find(w); it != tree.children.end()) star.insert(it->second.begin(), it->second.end());
  for (Vertex x : fam.cycle(alpha)) {
    if (star.count(x) == 0) breach("absent cycle leaves the apex star", &st);
  }

  auto other_neighbor = [&](Vertex x, Vertex not_this) {
    const auto [a, b] = fam.cycle_neighbors(alpha, x);
    return a == not_this ? b : a;
  };
  Vertex vp = other_neighbor(u, v);
  if (vp == w) {
    std::swap(u, v);
    vp = other_neighbor(u, v);
    if (vp == w) breach("absent cycle is a triangle", &st);
  }
  ColoredEdge f = make_edge(u, v, alpha);
  ColoredEdge fp = make_edge(u, vp, alpha);

  const ColoredEdge* g_ptr = forest.find(u, w);
  if (g_ptr == nullptr) breach("apex edge missing", &st);
  const ColoredEdge g = *g_ptr;
  const Color beta = g.color;

  const auto xs = walk_cycle(fam, beta, u, w);
  const auto minus_g = st.with_forest(forest.without(g));
  const int su = minus_g.component_of(u);
  const int sw = minus_g.component_of(w);
  std::size_t lam = 1;
  while (minus_g.component_of(xs[lam]) == su) ++lam;
  const Vertex xa = xs[lam - 1];
  const Vertex xb = xs[lam];
  const ColoredEdge h = make_edge(xa, xb, beta);
  if (st.fg().graph().has_pair(h.u, h.v)) breach("replacement edge is coincident", &st);

  if (minus_g.component_of(xb) != sw) {
    return Improvement{MoveKind::AddEdge, st.with_forest(forest.with(f).without(g).with(h)),
                       "swap_apex_edge"};
  }

  const ColoredPath pu = path_or_trivial(minus_g, u, xa);
  ColoredPath pw = path_or_trivial(minus_g, w, xb);
  for (std::size_t i = pw.vertices.size(); i-- > 1;) {
    const Vertex y = pw.vertices[i];
    if (y != v && y != vp) continue;
    const ColoredEdge* k = forest.find(w, y);
    if (k == nullptr) breach("child edge missing", &st);
    ColoredPath cut{{w}, {k->color}};
    cut.vertices.insert(cut.vertices.end(), pw.vertices.begin() + static_cast<long>(i), pw.vertices.end());
    cut.colors.insert(cut.colors.end(), pw.colors.begin() + static_cast<long>(i), pw.colors.end());
    pw = cut;
    break;
  }
  if (std::find(pw.vertices.begin(), pw.vertices.end(), v) != pw.vertices.end()) {
    std::swap(v, vp);
    std::swap(f, fp);
  }
  const ColoredEdge* k = forest.find(v, w);
  if (k == nullptr) breach("child edge missing", &st);

  ColoredCycle lifted{{v}, {alpha}};
  lifted.vertices.insert(lifted.vertices.end(), pu.vertices.begin(), pu.vertices.end());
  lifted.colors.insert(lifted.colors.end(), pu.colors.begin(), pu.colors.end());
  lifted.colors.push_back(beta);
  const auto rw = pw.reversed();
  lifted.vertices.insert(lifted.vertices.end(), rw.vertices.begin(), rw.vertices.end());
  lifted.colors.insert(lifted.colors.end(), rw.colors.begin(), rw.colors.end());
  lifted.colors.push_back(k->color);
  if (!is_simple_rainbow(lifted)) breach("lifted cycle is not a rainbow cycle", &st);

  if (lifted.length() % 2 == 0) return Witness{lifted, "lifted_cycle"};
  if (lifted.length() >= 7) {
    auto r = long_odd_move(st, lifted, "long_lifted_cycle");
    if (auto* wt = std::get_if<Witness>(&r)) return *wt;
    return std::get<Improvement>(r);
  }
  if (lifted.length() != 5) breach("lifted cycle too short", &st);
  auto f0 = st.with_forest(forest.with(f).without(g));
  if (auto wt = f2_witness(f0)) return *wt;
  return FiveCycleContext{std::move(f0), h, lifted};
}

std::variant<Growth, Witness> grow_5cycle(const FiveCycleContext& input) {
  FiveCycleContext ctx = input;
  const auto& fam = ctx.f0_state.family();
  const int n = ctx.f0_state.n();

  const auto vs = cycle_vertex_set(ctx.cycle);
  for (const auto* group : {&ctx.f0_state.odd_cycles(), &ctx.f0_state.bad_pieces()}) {
    for (const auto& x : *group) {
      if (shared_count(vs, x) < 2) continue;
      if (auto w = try_ectest(ctx.cycle, x, "five_cycle_meets_part")) return *w;
      breach("five-cycle meets a part twice without an even cycle", &ctx.f0_state);
    }
  }

  for (int shift = 0; shift < 5; ++shift) {
    const auto& v = ctx.cycle.vertices;
    const auto& c = ctx.cycle.colors;
    auto at = [&v](std::size_t i) { return v[i % 5]; };
    auto in_cycle = [&v](Vertex x) { return std::find(v.begin(), v.end(), x) != v.end(); };

    std::vector<ColoredEdge> local;
    bool all_forward = true;
    for (std::size_t i = 0; i < 5; ++i) {
      const Vertex a = at(i);
      const Vertex b = at(i + 1);
      const auto [p1, p2] = fam.cycle_neighbors(c[i], b);
      const Vertex plus = p1 == a ? p2 : p1;
      const auto [m1, m2] = fam.cycle_neighbors(c[i], a);
      const Vertex minus = m1 == b ? m2 : m1;
      if (!in_cycle(plus)) return Growth{ctx, shift, make_edge(b, plus, c[i]), plus};
      if (!in_cycle(minus)) return Growth{ctx, shift, make_edge(a, minus, c[i]), minus};
      local.push_back(make_edge(a, b, c[i]));
      local.push_back(make_edge(b, plus, c[i]));
      local.push_back(make_edge(a, minus, c[i]));
      if (plus != at(i + 2)) all_forward = false;
    }
    if (!all_forward) {
      const auto mg = ColoredMultigraph::from_edges(n, local);
      if (auto w = find_rainbow_a_cycle(mg, LengthClass::even())) return Witness{*w, "local_even_cycle"};
      breach("five-cycle neighborhood has no rainbow even cycle", &ctx.f0_state);
    }

    // Every D_{c_i} continues along the cycle: rotate colors one step.
    ColoredCycle next{v, std::vector<Color>(5)};
    for (std::size_t i = 0; i < 5; ++i) next.colors[(i + 1) % 5] = c[i];
    Graph forest = ctx.f0_state.forest();
    for (const auto& e : ctx.cycle.edges()) {
      if (e == ctx.f0) continue;
      if (!forest.contains(e)) breach("five-cycle edge outside the forest", &ctx.f0_state);
      forest = forest.without(e);
    }
    ColoredEdge f0{};
    for (const auto& e : next.edges()) {
      if (e.color == ctx.f0.color) {
        f0 = e;
        continue;
      }
      forest = forest.with(e);
    }
    auto st = ctx.f0_state.with_forest(std::move(forest));
    if (auto w = f2_witness(st)) return *w;
    ctx = FiveCycleContext{std::move(st), f0, next};
  }
  breach("colors rotated a full turn", &ctx.f0_state);
}

std::variant<Improvement, Witness> build_bad_piece(const ExtractorState& st, const Growth& growth) {
  const auto& ctx = growth.ctx;
  const auto& fam = st.family();
  const int n = st.n();
  const auto& p = growth.pendant;
  const Vertex attach = p.other(growth.v_star);

  // Relabel so that the pendant hangs at vs[0] with the color of vs[0]vs[1].
  const auto& cv = ctx.cycle.vertices;
  const auto& cc = ctx.cycle.colors;
  const auto k = static_cast<std::size_t>(std::find(cv.begin(), cv.end(), attach) - cv.begin());
  std::vector<Vertex> vs(5);
  std::vector<Color> cs(5);
  if (p.color == cc[k]) {
    for (std::size_t i = 0; i < 5; ++i) {
      vs[i] = cv[(k + i) % 5];
      cs[i] = cc[(k + i) % 5];
    }
  } else if (p.color == cc[(k + 4) % 5]) {
    for (std::size_t i = 0; i < 5; ++i) {
      vs[i] = cv[(k + 5 - i) % 5];
      cs[i] = cc[(k + 4 - i) % 5];
    }
  } else {
    breach("pendant color not on an incident cycle edge", &ctx.f0_state);
  }
  const ColoredCycle cyc{vs, cs};
  const Color a1 = cs[0];
  const ColoredEdge e1 = make_edge(vs[0], vs[1], a1);
  const ColoredEdge e5 = make_edge(vs[4], vs[0], cs[4]);

  Graph forest1 = ctx.f0_state.forest().with(ctx.f0);
  if (forest1.contains(e5)) forest1 = forest1.without(e5);
  const auto f1 = ctx.f0_state.with_forest(forest1);
  if (auto w = f2_witness(f1)) return *w;
  if (!forest1.contains(e1)) breach("first cycle edge outside the forest", &f1);
  const auto minus_e1 = f1.with_forest(forest1.without(e1));
  const int s1 = minus_e1.component_of(vs[0]);
  const int s2 = minus_e1.component_of(vs[1]);
  if (s1 == s2) breach("first cycle edge is not a bridge", &f1);

  const auto ys = walk_cycle(fam, a1, vs[1], vs[0]);
  if (ys.size() < 3 || ys[ys.size() - 2] != growth.v_star) breach("pendant not on the walk", &f1);
  std::size_t mu = 1;
  while (minus_e1.component_of(ys[mu]) == s2) ++mu;
  const ColoredEdge q = make_edge(ys[mu - 1], ys[mu], a1);
  if (f1.fg().graph().has_pair(q.u, q.v)) breach("crossing edge is coincident", &f1);

  if (minus_e1.component_of(ys[mu]) != s1) {
    return Improvement{MoveKind::AddEdge, st.with_forest(forest1.with(e5).without(e1).with(q)),
                       "swap_cycle_edge"};
  }

  const ColoredPath p1 = path_or_trivial(minus_e1, ys[mu], vs[0]);
  ColoredPath p2 = path_or_trivial(minus_e1, ys[mu - 1], vs[1]);
  for (std::size_t i = 0; i < p2.vertices.size(); ++i) {
    if (std::find(vs.begin() + 1, vs.end(), p2.vertices[i]) != vs.end()) {
      p2.vertices.resize(i + 1);
      p2.colors.resize(i);
      break;
    }
  }
  const Vertex vt = p2.vertices.back();
  ColoredPath ear = p1.reversed();
  ear.colors.push_back(a1);
  ear.vertices.insert(ear.vertices.end(), p2.vertices.begin(), p2.vertices.end());
  ear.colors.insert(ear.colors.end(), p2.colors.begin(), p2.colors.end());

  std::vector<ColoredEdge> edges = cyc.edges();
  const auto ear_edges = ear.edges();
  edges.insert(edges.end(), ear_edges.begin(), ear_edges.end());
  Graph piece;
  try {
    piece = make_graph(edges, n);
  } catch (const Error&) {
    breach("ear overlaps the five-cycle", &f1);
  }
  if (!is_bad_piece(piece)) breach("ear and five-cycle do not form a bad piece", &f1);

  const auto piece_vs = piece.vertices();
  std::vector<const Graph*> hits;
  for (const auto* group : {&st.odd_cycles(), &st.bad_pieces()}) {
    for (const auto& x : *group) {
      if (shared_count(piece_vs, x) >= 2) hits.push_back(&x);
    }
  }
  if (hits.empty()) {
    auto bs = st.bad_pieces();
    bs.push_back(piece);
    return Improvement{MoveKind::AddBadPiece,
                       ExtractorState(st.family_ptr(), st.odd_cycles(), std::move(bs), Graph(n)),
                       "new_bad_piece"};
  }

  // Arcs of the five-cycle between vs[0] and vt.
  const auto t = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), vt) - vs.begin());
  std::vector<ColoredCycle> candidates;
  {
    // ear then the arc vt -> vs[t+1] -> ... -> vs[0]
    ColoredCycle a{ear.vertices, ear.colors};
    for (std::size_t i = t + 1; i < 5; ++i) a.vertices.push_back(vs[i]);
    for (std::size_t i = t; i < 5; ++i) a.colors.push_back(cs[i]);
    candidates.push_back(a);
    // ear then the arc vt -> vs[t-1] -> ... -> vs[1] -> vs[0]
    ColoredCycle b{ear.vertices, ear.colors};
    for (std::size_t i = t - 1; i >= 1; --i) b.vertices.push_back(vs[i]);
    for (std::size_t i = t; i >= 1; --i) b.colors.push_back(cs[i - 1]);
    candidates.push_back(b);
  }
  candidates.push_back(cyc);
  for (const Graph* x : hits) {
    for (const auto& cand : candidates) {
      if (!is_simple_rainbow(cand) || shared_count(cycle_vertex_set(cand), *x) < 2) continue;
      if (auto w = try_ectest(cand, *x, "piece_meets_part")) return *w;
    }
    if (auto w = ear_through(piece, *x)) return *w;
  }
  breach("bad piece meets a part twice without an even cycle", &f1);
}

std::variant<ExtractorState, Witness> apply_improvement(const ExtractorState& before,
                                                        const Improvement& imp) {
  const auto report = validate_frankenstein(imp.next.fg(), &before.family(), true);
  if (!report.ok()) {
    const auto* f2 = report.find(IssueKind::F2);
    if (f2 != nullptr && f2->witness && report.find(IssueKind::NotInFamily) == nullptr) {
      return Witness{*f2->witness, "even_cycle_in_subgraph"};
    }
    breach(std::string("invalid improvement: ") + report.first()->message, &imp.next);
  }
  if (!(before.potential() < imp.next.potential())) breach("potential did not increase", &imp.next);
  return imp.next;
}

std::uint64_t iteration_bound(int n, int m) {
  const auto un = static_cast<std::uint64_t>(n);
  const auto um = static_cast<std::uint64_t>(m);
  std::uint64_t b = sat_mul(um + 1, um + 1);
  b = sat_mul(b, un * um + 1);
  return sat_mul(b, un * (un - 1) / 2 + 1);
}

ExtractResult extract_rainbow_even_cycle(const Family& fam, const ExtractOptions& opts) {
  const int n = fam.n();
  const auto m = static_cast<long long>(fam.size());
  if (5 * m <= 6LL * (n - 1)) {
    throw Error(Errc::kPreconditionViolated, "family has at most 6(n-1)/5 cycles");
  }
  if (!fam.all_even()) throw Error(Errc::kPreconditionViolated, "family has an odd cycle");

  ExtractResult result;
  result.bound = iteration_bound(n, static_cast<int>(m));
  ExtractorState st(std::make_shared<const Family>(fam));

  auto finish = [&](const Witness& w) {
    result.witness = canonical_witness(w.cycle);
    result.source = w.source;
    if (!verify_witness(result.witness, fam, LengthClass::even())) {
      breach("produced witness does not verify", &st);
    }
    if (opts.trace != nullptr) {
      *opts.trace << nlohmann::json{{"result", "witness"},
                                    {"source", result.source},
                                    {"iterations", result.iterations},
                                    {"witness", witness_to_json(result.witness)}}
                         .dump()
                  << '\n';
    }
    return result;
  };

  for (std::uint64_t it = 1; it <= result.bound; ++it) {
    std::variant<Improvement, Witness> move = Witness{};
    try {
      auto step = step_or_improve(st);
      if (auto* w = std::get_if<Witness>(&step)) {
        move = *w;
      } else if (auto* imp = std::get_if<Improvement>(&step)) {
        move = *imp;
      } else {
        move = run_pipeline(st);
      }
      if (auto* w = std::get_if<Witness>(&move)) return finish(*w);
      const auto& imp = std::get<Improvement>(move);
      auto applied = apply_improvement(st, imp);
      if (auto* w = std::get_if<Witness>(&applied)) return finish(*w);
      TraceEntry entry{it, imp.kind, st.potential(), imp.next.potential(), imp.reason};
      if (opts.trace != nullptr) *opts.trace << entry.to_json().dump() << '\n';
      result.trace.push_back(std::move(entry));
      result.iterations = it;
      st = std::get<ExtractorState>(std::move(applied));
    } catch (const Error& e) {
      if (e.code() == Errc::kInvariantBreach) throw;
      breach(std::string("unexpected error: ") + e.what(), &st);
    }
  }
  breach("iteration bound exceeded", &st);
}

}  // namespace rainbow
