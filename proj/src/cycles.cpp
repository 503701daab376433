#include "rainbow/cycles.hpp"

#include <algorithm>

namespace rainbow {

ColoredMultigraph::ColoredMultigraph(int n)
    : n_(n),
      adj_(static_cast<std::size_t>(n + 1)),
      slot_(static_cast<std::size_t>((n + 1) * (n + 1)), -1) {}

void ColoredMultigraph::add(Vertex a, Vertex b, Color c) {
  int s = slot(a, b);
  if (s < 0) {
    s = static_cast<int>(lists_.size());
    lists_.emplace_back();
    slot_[static_cast<std::size_t>(a * (n_ + 1) + b)] = s;
    slot_[static_cast<std::size_t>(b * (n_ + 1) + a)] = s;
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  auto& list = lists_[static_cast<std::size_t>(s)];
  if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
  max_color_ = std::max(max_color_, c);
}

namespace {

// Tarjan's biconnected components via an edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const std::vector<std::vector<Vertex>>& adj)
      : adj_(adj), disc_(adj.size(), 0), low_(adj.size(), 0) {}

  std::vector<std::vector<Vertex>> run() {
    for (std::size_t v = 1; v < adj_.size(); ++v) {
      if (disc_[v] == 0) dfs(static_cast<Vertex>(v), 0);
    }
    std::sort(blocks_.begin(), blocks_.end());
    return blocks_;
  }

 private:
  void dfs(Vertex v, Vertex parent) {
    disc_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = ++timer_;
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
      if (w == parent) continue;
      const auto wi = static_cast<std::size_t>(w);
      const auto vi = static_cast<std::size_t>(v);
      if (disc_[wi] == 0) {
        stack_.emplace_back(v, w);
        dfs(w, v);
        low_[vi] = std::min(low_[vi], low_[wi]);
        if (low_[wi] >= disc_[vi]) pop_block(v, w);
      } else if (disc_[wi] < disc_[vi]) {
        stack_.emplace_back(v, w);
        low_[vi] = std::min(low_[vi], disc_[wi]);
      }
    }
  }

  void pop_block(Vertex v, Vertex w) {
    std::vector<Vertex> block;
    while (!stack_.empty()) {
      const auto e = stack_.back();
      stack_.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e.first == v && e.second == w) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    if (block.size() >= 3) blocks_.push_back(std::move(block));
  }

  const std::vector<std::vector<Vertex>>& adj_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int timer_ = 0;
  std::vector<std::pair<Vertex, Vertex>> stack_;
  std::vector<std::vector<Vertex>> blocks_;
};

}  // namespace

void ColoredMultigraph::finish() {
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  for (auto& list : lists_) std::sort(list.begin(), list.end());
  blocks_ = BlockFinder(adj_).run();
}

ColoredMultigraph ColoredMultigraph::from_family(const Family& fam) {
  ColoredMultigraph mg(fam.n());
  for (const auto& [pair, colors] : fam.pair_colors()) {
    for (Color c : colors) mg.add(pair.first, pair.second, c);
  }
  mg.finish();
  return mg;
}

ColoredMultigraph ColoredMultigraph::from_graph(const Graph& g) {
  ColoredMultigraph mg(g.n());
  for (const auto& e : g.edges()) mg.add(e.u, e.v, e.color);
  mg.finish();
  return mg;
}

ColoredMultigraph ColoredMultigraph::from_edges(int n, const std::vector<ColoredEdge>& edges) {
  ColoredMultigraph mg(n);
  for (const auto& e : edges) {
    const auto norm = make_edge(e.u, e.v, e.color);
    if (norm.u < 1 || norm.v > n) throw Error(Errc::kVertexOutOfRange, "edge outside [1,n]");
    mg.add(norm.u, norm.v, norm.color);
  }
  mg.finish();
  return mg;
}

const std::vector<Color>& ColoredMultigraph::colors(Vertex a, Vertex b) const {
  static const std::vector<Color> kEmpty;
  if (a < 1 || b < 1 || a > n_ || b > n_) return kEmpty;
  const int s = slot(a, b);
  return s < 0 ? kEmpty : lists_[static_cast<std::size_t>(s)];
}

bool CycleQuery::accepts(int len) const {
  if (len < std::max(3, min_len)) return false;
  if (max_len > 0 && len > max_len) return false;
  if (parity == Parity::Even && len % 2 != 0) return false;
  if (parity == Parity::Odd && len % 2 == 0) return false;
  if (!lengths.empty() && std::find(lengths.begin(), lengths.end(), len) == lengths.end()) {
    return false;
  }
  return true;
}

int CycleQuery::effective_max(int n) const {
  int hi = max_len > 0 ? std::min(max_len, n) : n;
  if (!lengths.empty()) hi = std::min(hi, *std::max_element(lengths.begin(), lengths.end()));
  return hi;
}

namespace {

struct CycleWalker {
  const ColoredMultigraph& mg;
  const CycleQuery& query;
  const std::function<bool(const VertexCycle&)>& visit;
  std::vector<char> in_block;
  std::vector<char> on_path;
  VertexCycle path;
  int max_len = 0;

  bool extend(Vertex s) {
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && path[1] < last && mg.adjacent(last, s) && query.accepts(len)) {
      if (!visit(path)) return false;
    }
    if (len >= max_len) return true;
    for (Vertex w : mg.neighbors(last)) {
      const auto wi = static_cast<std::size_t>(w);
      if (w <= s || !in_block[wi] || on_path[wi]) continue;
      on_path[wi] = 1;
      path.push_back(w);
      const bool go_on = extend(s);
      path.pop_back();
      on_path[wi] = 0;
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_cycle(const ColoredMultigraph& mg, const CycleQuery& query,
                    const std::function<bool(const VertexCycle&)>& visit) {
  const int n = mg.n();
  CycleWalker walker{mg, query, visit, std::vector<char>(static_cast<std::size_t>(n + 1), 0),
                     std::vector<char>(static_cast<std::size_t>(n + 1), 0), {},
                     query.effective_max(n)};
  if (walker.max_len < 3) return true;
  for (Vertex s = 1; s <= n; ++s) {
    for (const auto& block : mg.blocks()) {
      if (!std::binary_search(block.begin(), block.end(), s)) continue;
      for (Vertex x : block) walker.in_block[static_cast<std::size_t>(x)] = 1;
      walker.path = {s};
      walker.on_path[static_cast<std::size_t>(s)] = 1;
      const bool go_on = walker.extend(s);
      walker.on_path[static_cast<std::size_t>(s)] = 0;
      for (Vertex x : block) walker.in_block[static_cast<std::size_t>(x)] = 0;
      if (!go_on) return false;
    }
  }
  return true;
}

std::vector<VertexCycle> enumerate_cycles(const Family& fam, Parity parity, int min_len,
                                          int max_len) {
  const auto mg = ColoredMultigraph::from_family(fam);
  CycleQuery query{parity, min_len, max_len, {}};
  std::vector<VertexCycle> out;
  for_each_cycle(mg, query, [&out](const VertexCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

IncrementalMatcher::IncrementalMatcher(Color max_color)
    : color_slot_(static_cast<std::size_t>(max_color + 1), -1),
      seen_(static_cast<std::size_t>(max_color + 1), 0) {}

bool IncrementalMatcher::augment(int slot) {
  for (Color c : *slots_[static_cast<std::size_t>(slot)]) {
    const auto ci = static_cast<std::size_t>(c);
    if (ci >= seen_.size() || seen_[ci] == stamp_) continue;
    seen_[ci] = stamp_;
    if (color_slot_[ci] < 0 || augment(color_slot_[ci])) {
      color_slot_[ci] = slot;
      slot_color_[static_cast<std::size_t>(slot)] = c;
      return true;
    }
  }
  return false;
}

bool IncrementalMatcher::push(const std::vector<Color>* slot) {
  slots_.push_back(slot);
  slot_color_.push_back(0);
  ++stamp_;
  if (augment(static_cast<int>(slots_.size()) - 1)) return true;
  slots_.pop_back();
  slot_color_.pop_back();
  return false;
}

void IncrementalMatcher::pop() {
  const Color c = slot_color_.back();
  color_slot_[static_cast<std::size_t>(c)] = -1;
  slots_.pop_back();
  slot_color_.pop_back();
}

std::vector<Color> IncrementalMatcher::assignment() const { return slot_color_; }

std::optional<std::vector<Color>> distinct_representatives(
    const std::vector<std::vector<Color>>& slots, const std::set<Color>& forbidden) {
  std::vector<std::vector<Color>> allowed;
  allowed.reserve(slots.size());
  Color max_color = 0;
  for (const auto& slot : slots) {
    std::vector<Color> keep;
    for (Color c : slot) {
      if (c > 0 && forbidden.count(c) == 0) {
        keep.push_back(c);
        max_color = std::max(max_color, c);
      }
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    allowed.push_back(std::move(keep));
  }
  IncrementalMatcher matcher(max_color);
  for (const auto& slot : allowed) {
    if (!matcher.push(&slot)) return std::nullopt;
  }
  return matcher.assignment();
}

std::optional<RainbowAssignment> color_sdr(const VertexCycle& cycle, const Family& fam,
                                           const std::set<Color>& forbidden) {
  std::vector<std::vector<Color>> slots;
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % len];
    const auto& colors = fam.colors_on(a, b);
    if (colors.empty()) {
      throw Error(Errc::kEdgeNotInFamily,
                  "pair (" + std::to_string(a) + "," + std::to_string(b) + ") is in no cycle");
    }
    slots.push_back(colors);
  }
  return distinct_representatives(slots, forbidden);
}

}  // namespace rainbow
