#include "rainbow/detect.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rainbow {

LengthClass LengthClass::exactly(int k) {
  if (k < 3) throw Error(Errc::kInvalidArgument, "cycle length must be at least 3");
  return LengthClass(Kind::Exactly, {k});
}

LengthClass LengthClass::set(std::vector<int> lengths) {
  if (lengths.empty()) throw Error(Errc::kInvalidArgument, "empty length set");
  for (int k : lengths) {
    if (k < 3) throw Error(Errc::kInvalidArgument, "cycle length must be at least 3");
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return LengthClass(Kind::Set, std::move(lengths));
}

namespace {

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw Error(Errc::kInvalidArgument, "not an integer: '" + text + "'");
  }
  if (used != text.size()) throw Error(Errc::kInvalidArgument, "not an integer: '" + text + "'");
  return value;
}

}  // namespace

LengthClass LengthClass::parse(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "all" || lower == "any") return all();
  if (lower == "odd") return odd();
  if (lower == "even") return even();
  if (lower.rfind("exactly:", 0) == 0) return exactly(parse_int(lower.substr(8)));
  if (lower.rfind("set:", 0) == 0) {
    std::vector<int> lengths;
    std::stringstream ss(lower.substr(4));
    std::string item;
    while (std::getline(ss, item, ',')) lengths.push_back(parse_int(item));
    return set(std::move(lengths));
  }
  if (!lower.empty() && std::isdigit(static_cast<unsigned char>(lower[0]))) {
    return exactly(parse_int(lower));
  }
  throw Error(Errc::kInvalidArgument, "unknown length class '" + text + "'");
}

bool LengthClass::accepts(int len) const {
  if (len < 3) return false;
  switch (kind_) {
    case Kind::All: return true;
    case Kind::Odd: return len % 2 == 1;
    case Kind::Even: return len % 2 == 0;
    case Kind::Exactly:
    case Kind::Set: return std::binary_search(lengths_.begin(), lengths_.end(), len);
  }
  return false;
}

CycleQuery LengthClass::query() const {
  CycleQuery q;
  switch (kind_) {
    case Kind::All: break;
    case Kind::Odd: q.parity = Parity::Odd; break;
    case Kind::Even: q.parity = Parity::Even; break;
    case Kind::Exactly:
    case Kind::Set:
      q.lengths = lengths_;
      q.min_len = lengths_.front();
      q.max_len = lengths_.back();
      break;
  }
  return q;
}

std::string LengthClass::to_string() const {
  switch (kind_) {
    case Kind::All: return "all";
    case Kind::Odd: return "odd";
    case Kind::Even: return "even";
    case Kind::Exactly: return "exactly:" + std::to_string(lengths_.front());
    case Kind::Set: {
      std::string out = "set:";
      for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(lengths_[i]);
      }
      return out;
    }
  }
  return "?";
}

RainbowCycleWitness canonical_witness(const ColoredCycle& cycle) {
  const std::size_t len = cycle.vertices.size();
  if (len == 0) return cycle;
  const auto canon = canonical_cycle(cycle.vertices);
  const std::size_t start = static_cast<std::size_t>(
      std::find(cycle.vertices.begin(), cycle.vertices.end(), canon[0]) - cycle.vertices.begin());
  const bool forward = cycle.vertices[(start + 1) % len] == canon[1 % len];
  RainbowCycleWitness out;
  out.vertices = canon;
  for (std::size_t i = 0; i < len; ++i) {
    // Edge canon[i] canon[i+1].
    const std::size_t edge = forward ? (start + i) % len : (start + 2 * len - i - 1) % len;
    out.colors.push_back(cycle.colors[edge]);
  }
  return out;
}

namespace {

class PrunedSearch {
 public:
  PrunedSearch(const ColoredMultigraph& mg, const LengthClass& cls, const DetectOptions& opts)
      : mg_(mg),
        cls_(cls),
        opts_(opts),
        matcher_(mg.max_color()),
        in_block_(static_cast<std::size_t>(mg.n() + 1), 0),
        on_path_(static_cast<std::size_t>(mg.n() + 1), 0),
        max_len_(cls.query().effective_max(mg.n())) {}

  std::optional<RainbowCycleWitness> run() {
    if (max_len_ < 3) return std::nullopt;
    for (Vertex s = 1; s <= mg_.n(); ++s) {
      for (const auto& block : mg_.blocks()) {
        if (!std::binary_search(block.begin(), block.end(), s)) continue;
        for (Vertex x : block) in_block_[static_cast<std::size_t>(x)] = 1;
        path_ = {s};
        on_path_[static_cast<std::size_t>(s)] = 1;
        extend(s);
        on_path_[static_cast<std::size_t>(s)] = 0;
        for (Vertex x : block) in_block_[static_cast<std::size_t>(x)] = 0;
        if (found_) return found_;
      }
    }
    return std::nullopt;
  }

 private:
  void close(Vertex s) {
    ++cycles_;
    if (opts_.max_cycles > 0 && cycles_ > opts_.max_cycles) {
      throw Error(Errc::kSearchBudgetExceeded,
                  "cycle budget of " + std::to_string(opts_.max_cycles) + " exhausted");
    }
    if (opts_.prune) {
      if (matcher_.push(&mg_.colors(path_.back(), s))) {
        found_ = RainbowCycleWitness{path_, matcher_.assignment()};
        matcher_.pop();
      }
      return;
    }
    std::vector<std::vector<Color>> slots;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      slots.push_back(mg_.colors(path_[i], path_[(i + 1) % path_.size()]));
    }
    if (auto sdr = distinct_representatives(slots)) found_ = RainbowCycleWitness{path_, *sdr};
  }

  void extend(Vertex s) {
    const Vertex last = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && path_[1] < last && mg_.adjacent(last, s) && cls_.accepts(len)) {
      close(s);
      if (found_) return;
    }
    if (len >= max_len_) return;
    for (Vertex w : mg_.neighbors(last)) {
      const auto wi = static_cast<std::size_t>(w);
      if (w <= s || !in_block_[wi] || on_path_[wi]) continue;
      if (opts_.prune && !matcher_.push(&mg_.colors(last, w))) continue;
      on_path_[wi] = 1;
      path_.push_back(w);
      extend(s);
      path_.pop_back();
      on_path_[wi] = 0;
      if (opts_.prune) matcher_.pop();
      if (found_) return;
    }
  }

  const ColoredMultigraph& mg_;
  const LengthClass& cls_;
  const DetectOptions& opts_;
  IncrementalMatcher matcher_;
  std::vector<char> in_block_;
  std::vector<char> on_path_;
  VertexCycle path_;
  int max_len_;
  std::uint64_t cycles_ = 0;
  std::optional<RainbowCycleWitness> found_;
};

}  // namespace

std::optional<RainbowCycleWitness> find_rainbow_a_cycle(const ColoredMultigraph& mg,
                                                        const LengthClass& cls,
                                                        const DetectOptions& opts) {
  auto found = PrunedSearch(mg, cls, opts).run();
  if (found) return canonical_witness(*found);
  return std::nullopt;
}

std::optional<RainbowCycleWitness> find_rainbow_a_cycle(const Family& fam, const LengthClass& cls,
                                                        const DetectOptions& opts) {
  return find_rainbow_a_cycle(ColoredMultigraph::from_family(fam), cls, opts);
}

std::optional<RainbowCycleWitness> find_rainbow_even_cycle(const Graph& g) {
  return find_rainbow_a_cycle(ColoredMultigraph::from_graph(g), LengthClass::even());
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n + 1)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

// Vertex path from a to b in a forest given as an adjacency map.
std::optional<ColoredPath> forest_path(
    const std::map<Vertex, std::vector<std::pair<Vertex, Color>>>& adj, Vertex a, Vertex b) {
  std::map<Vertex, std::pair<Vertex, Color>> parent;
  std::vector<Vertex> stack{a};
  parent[a] = {a, 0};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (x == b) break;
    auto it = adj.find(x);
    if (it == adj.end()) continue;
    for (const auto& [y, c] : it->second) {
      if (parent.count(y) == 0) {
        parent[y] = {x, c};
        stack.push_back(y);
      }
    }
  }
  if (parent.count(b) == 0) return std::nullopt;
  ColoredPath path{{b}, {}};
  for (Vertex x = b; x != a;) {
    const auto [p, c] = parent[x];
    path.colors.push_back(c);
    path.vertices.push_back(p);
    x = p;
  }
  return path.reversed();
}

}  // namespace

std::optional<RainbowCycleWitness> find_rainbow_cycle(const Family& fam) {
  const int n = fam.n();
  const Color m = static_cast<Color>(fam.size());
  DisjointSets dsu(n);
  std::vector<ColoredEdge> forest;
  std::set<VertexPair> forest_pairs;
  std::vector<char> used(static_cast<std::size_t>(m + 1), 0);
  for (Color c = 1; c <= m; ++c) {
    for (const auto& e : fam.cycle_edges(c)) {
      if (used[static_cast<std::size_t>(c)]) break;
      if (dsu.unite(e.u, e.v)) {
        forest.push_back(e);
        forest_pairs.insert(e.pair());
        used[static_cast<std::size_t>(c)] = 1;
      }
    }
  }
  const Graph fg = make_graph(forest, n);
  const auto adj = fg.adjacency();
  for (Color c = 1; c <= m; ++c) {
    if (used[static_cast<std::size_t>(c)]) continue;
    for (const auto& e : fam.cycle_edges(c)) {
      if (forest_pairs.count(e.pair()) > 0) continue;
      auto path = forest_path(adj, e.v, e.u);
      if (!path) continue;
      ColoredCycle cycle{path->vertices, path->colors};
      cycle.colors.push_back(c);
      return canonical_witness(cycle);
    }
  }
  return std::nullopt;
}

RainbowCycleWitness theta_even_cycle(const ThetaGraph& theta) {
  std::vector<Color> all;
  for (const auto& p : theta.paths) all.insert(all.end(), p.colors.begin(), p.colors.end());
  if (std::set<Color>(all.begin(), all.end()).size() != all.size()) {
    throw Error(Errc::kNotRainbow, "theta graph is not rainbow");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto& pi = theta.paths[i];
      const auto& pj = theta.paths[j];
      if ((pi.length() + pj.length()) % 2 != 0) continue;
      ColoredCycle cycle{pi.vertices, pi.colors};
      // pi runs s..t; close along pj from t back to s.
      const auto back = pj.reversed();
      cycle.vertices.insert(cycle.vertices.end(), back.vertices.begin() + 1, back.vertices.end() - 1);
      cycle.colors.insert(cycle.colors.end(), back.colors.begin(), back.colors.end());
      return canonical_witness(cycle);
    }
  }
  throw Error(Errc::kInvariantBreach, "three path lengths with pairwise distinct parity");
}

RainbowCycleWitness theta_even_cycle(const Graph& g) {
  const auto theta = theta_decompose(g);
  if (!theta) throw Error(Errc::kNotATheta, "graph is not a theta graph");
  return theta_even_cycle(*theta);
}

namespace {

bool witness_shape_ok(const RainbowCycleWitness& w) {
  const std::size_t len = w.vertices.size();
  if (len < 3 || w.colors.size() != len) return false;
  if (std::set<Vertex>(w.vertices.begin(), w.vertices.end()).size() != len) return false;
  return std::set<Color>(w.colors.begin(), w.colors.end()).size() == len;
}

}  // namespace

bool verify_witness(const RainbowCycleWitness& w, const Family& fam, const LengthClass& cls) {
  if (!witness_shape_ok(w) || !cls.accepts(static_cast<int>(w.length()))) return false;
  const std::size_t len = w.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = w.vertices[i];
    const Vertex b = w.vertices[(i + 1) % len];
    if (a < 1 || b < 1 || a > fam.n() || b > fam.n()) return false;
    const auto& colors = fam.colors_on(a, b);
    if (std::find(colors.begin(), colors.end(), w.colors[i]) == colors.end()) return false;
  }
  return true;
}

bool verify_witness_in_graph(const RainbowCycleWitness& w, const Graph& g) {
  if (!witness_shape_ok(w) || w.length() % 2 != 0) return false;
  const std::size_t len = w.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = w.vertices[i];
    const Vertex b = w.vertices[(i + 1) % len];
    if (a == b || !g.contains(make_edge(a, b, w.colors[i]))) return false;
  }
  return true;
}

nlohmann::json witness_to_json(const RainbowCycleWitness& w) {
  return nlohmann::json{{"cycle", w.vertices}, {"colors", w.colors}};
}

RainbowCycleWitness witness_from_json(const nlohmann::json& j) {
  try {
    return RainbowCycleWitness{j.at("cycle").get<std::vector<Vertex>>(),
                               j.at("colors").get<std::vector<Color>>()};
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::kMalformedInput, ex.what());
  }
}

}  // namespace rainbow
