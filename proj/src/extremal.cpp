#include "rainbow/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "rainbow/cycles.hpp"
#include "rainbow/family_io.hpp"

namespace rainbow {

const char* to_string(Canonicalization mode) {
  switch (mode) {
    case Canonicalization::None: return "none";
    case Canonicalization::ColorMultiset: return "color_multiset";
    case Canonicalization::VertexPermutation: return "vertex_permutation";
  }
  return "?";
}

Canonicalization canonicalization_from_string(const std::string& text) {
  if (text == "none") return Canonicalization::None;
  if (text == "color_multiset") return Canonicalization::ColorMultiset;
  if (text == "vertex_permutation") return Canonicalization::VertexPermutation;
  throw Error(Errc::kInvalidArgument, "unknown canonicalization '" + text + "'");
}

std::vector<VertexCycle> all_class_cycles(int n, const LengthClass& cls) {
  if (n < 3) throw Error(Errc::kUnsupportedN, "need n >= 3");
  std::vector<ColoredEdge> edges;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) edges.push_back({a, b, 1});
  }
  const auto mg = ColoredMultigraph::from_graph(make_graph(edges, n));
  std::vector<VertexCycle> out;
  for_each_cycle(mg, cls.query(), [&out](const VertexCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool has_f_formula(const LengthClass& cls) {
  const auto k = cls.kind();
  return k == LengthClass::Kind::All || k == LengthClass::Kind::Odd || k == LengthClass::Kind::Even;
}

int f_formula(int n, const LengthClass& cls) {
  switch (cls.kind()) {
    case LengthClass::Kind::All:
      if (n < 3) throw Error(Errc::kUnsupportedN, "no cycle exists on fewer than 3 vertices");
      return n;
    case LengthClass::Kind::Odd:
      if (n < 3) throw Error(Errc::kUnsupportedN, "no odd cycle exists on fewer than 3 vertices");
      return 2 * ((n + 1) / 2) - 1;
    case LengthClass::Kind::Even:
      if (n < 4) throw Error(Errc::kUnsupportedN, "no even cycle exists on fewer than 4 vertices");
      return 6 * (n - 1) / 5 + 1;
    default:
      throw Error(Errc::kInvalidArgument, "no closed form for class " + cls.to_string());
  }
}

namespace {

using Mask = std::uint64_t;

// Candidate cycles of K_n as edge bitmasks.
struct CycleSpace {
  int n = 0;
  std::vector<std::vector<int>> edge_id;  // [a][b] -> bit
  std::vector<VertexCycle> cycles;
  std::vector<Mask> masks;
  std::vector<std::vector<int>> edges;  // bits per cycle
  std::unordered_map<Mask, int> index_of;

  CycleSpace(int n_, const LengthClass& cls) : n(n_) {
    edge_id.assign(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), -1));
    int bit = 0;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        edge_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = bit;
        edge_id[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = bit;
        ++bit;
      }
    }
    cycles = all_class_cycles(n, cls);
    for (const auto& c : cycles) {
      Mask m = 0;
      std::vector<int> bits;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const int e = edge_id[static_cast<std::size_t>(c[i])][static_cast<std::size_t>(c[(i + 1) % c.size()])];
        bits.push_back(e);
        m |= Mask{1} << e;
      }
      index_of[m] = static_cast<int>(masks.size());
      masks.push_back(m);
      edges.push_back(std::move(bits));
    }
  }
};

// Incremental state of a partial family: which colors sit on each edge.
class FamilyState {
 public:
  explicit FamilyState(const CycleSpace& space)
      : space_(space), edge_colors_(static_cast<std::size_t>(space.n * (space.n - 1) / 2), 0) {}

  void push(int idx) {
    const Mask color = Mask{1} << chosen_.size();
    for (int e : space_.edges[static_cast<std::size_t>(idx)]) edge_colors_[static_cast<std::size_t>(e)] |= color;
    unions_.push_back(union_mask() | space_.masks[static_cast<std::size_t>(idx)]);
    chosen_.push_back(idx);
  }

  void pop() {
    const Mask color = ~(Mask{1} << (chosen_.size() - 1));
    for (int e : space_.edges[static_cast<std::size_t>(chosen_.back())]) edge_colors_[static_cast<std::size_t>(e)] &= color;
    unions_.pop_back();
    chosen_.pop_back();
  }

  Mask union_mask() const { return unions_.empty() ? 0 : unions_.back(); }
  const std::vector<int>& chosen() const { return chosen_; }

  // Assuming the family without its last cycle is free: does the last cycle
  // complete a rainbow class cycle?
  bool last_creates_rainbow() const {
    const Mask u = union_mask();
    const Mask fresh = space_.masks[static_cast<std::size_t>(chosen_.back())];
    for (std::size_t z = 0; z < space_.masks.size(); ++z) {
      const Mask zm = space_.masks[z];
      if ((zm & ~u) != 0 || (zm & fresh) == 0) continue;
      if (has_sdr(space_.edges[z])) return true;
    }
    return false;
  }

 private:
  bool has_sdr(const std::vector<int>& slots) const {
    int color_slot[64];
    std::fill(std::begin(color_slot), std::end(color_slot), -1);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      Mask seen = 0;
      if (!augment(slots, static_cast<int>(s), color_slot, seen)) return false;
    }
    return true;
  }

  bool augment(const std::vector<int>& slots, int s, int* color_slot, Mask& seen) const {
    Mask avail = edge_colors_[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)])] & ~seen;
    while (avail != 0) {
      const int c = __builtin_ctzll(avail);
      avail &= avail - 1;
      seen |= Mask{1} << c;
      if (color_slot[c] < 0 || augment(slots, color_slot[c], color_slot, seen)) {
        color_slot[c] = s;
        return true;
      }
    }
    return false;
  }

  const CycleSpace& space_;
  std::vector<Mask> edge_colors_;
  std::vector<Mask> unions_;
  std::vector<int> chosen_;
};

struct Budget {
  std::uint64_t limit = 0;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> hit{false};

  bool take() {
    const auto n = used.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limit > 0 && n > limit) {
      hit.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

struct Best {
  int size = 0;
  std::vector<int> witness;

  void offer(const std::vector<int>& fam) {
    const int k = static_cast<int>(fam.size());
    if (k > size || (k == size && fam < witness)) {
      size = k;
      witness = fam;
    }
  }
};

// Depth-first search over sequences; `multiset` forces non-decreasing
// indices.
class TreeSearch {
 public:
  TreeSearch(const CycleSpace& space, int cap, bool multiset, Budget& budget)
      : space_(space), cap_(cap), multiset_(multiset), budget_(budget), state_(space) {}

  Best run_from(int first) {
    best_ = Best{};
    if (!budget_.take()) return best_;
    state_.push(first);
    best_.offer(state_.chosen());
    dfs();
    state_.pop();
    return best_;
  }

 private:
  void dfs() {
    if (static_cast<int>(state_.chosen().size()) >= cap_) return;
    const int lo = multiset_ ? state_.chosen().back() : 0;
    for (int i = lo; i < static_cast<int>(space_.masks.size()); ++i) {
      if (budget_.hit.load(std::memory_order_relaxed) || !budget_.take()) return;
      state_.push(i);
      if (!state_.last_creates_rainbow()) {
        best_.offer(state_.chosen());
        dfs();
      }
      state_.pop();
    }
  }

  const CycleSpace& space_;
  int cap_;
  bool multiset_;
  Budget& budget_;
  FamilyState state_;
  Best best_;
};

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Canonical form of a multiset of cycle indices under vertex relabeling:
// the least sorted index vector over all relabelings that keep vertices
// grouped by an isomorphism-invariant signature.
class Canonizer {
 public:
  explicit Canonizer(const CycleSpace& space) : space_(space) {}

  std::vector<int> canon(const std::vector<int>& fam) const {
    const int n = space_.n;
    std::vector<std::pair<std::pair<int, int>, Vertex>> sig;
    std::vector<int> through(static_cast<std::size_t>(n + 1), 0);
    Mask u = 0;
    for (int idx : fam) {
      for (Vertex v : space_.cycles[static_cast<std::size_t>(idx)]) ++through[static_cast<std::size_t>(v)];
      u |= space_.masks[static_cast<std::size_t>(idx)];
    }
    for (Vertex v = 1; v <= n; ++v) {
      int deg = 0;
      for (Vertex w = 1; w <= n; ++w) {
        if (w != v && (u >> space_.edge_id[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] & 1)) ++deg;
      }
      sig.push_back({{through[static_cast<std::size_t>(v)], deg}, v});
    }
    std::sort(sig.begin(), sig.end());
    // Blocks of equal signature; positions 1..n in signature order.
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> block_start;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i == 0 || sig[i].first != sig[i - 1].first) {
        blocks.emplace_back();
        block_start.push_back(static_cast<Vertex>(i + 1));
      }
      blocks.back().push_back(sig[i].second);
    }
    std::vector<Vertex> label(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> best;
    std::vector<int> image(fam.size());
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
      if (b == blocks.size()) {
        for (std::size_t k = 0; k < fam.size(); ++k) image[k] = map_cycle(fam[k], label);
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
        return;
      }
      auto order = blocks[b];
      do {
        for (std::size_t i = 0; i < order.size(); ++i) {
          label[static_cast<std::size_t>(order[i])] = block_start[b] + static_cast<Vertex>(i);
        }
        rec(b + 1);
      } while (std::next_permutation(order.begin(), order.end()));
    };
    rec(0);
    return best;
  }

 private:
  int map_cycle(int idx, const std::vector<Vertex>& label) const {
    const auto& c = space_.cycles[static_cast<std::size_t>(idx)];
    Mask m = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex a = label[static_cast<std::size_t>(c[i])];
      const Vertex b = label[static_cast<std::size_t>(c[(i + 1) % c.size()])];
      m |= Mask{1} << space_.edge_id[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    return space_.index_of.at(m);
  }

  const CycleSpace& space_;
};

Best search_orbits(const CycleSpace& space, int cap, int threads, Budget& budget) {
  const Canonizer canonizer(space);
  const int m = static_cast<int>(space.masks.size());
  std::set<std::vector<int>> level{{}};
  Best best;
  for (int k = 0; k < cap && !level.empty(); ++k) {
    const std::vector<std::vector<int>> current(level.begin(), level.end());
    std::set<std::vector<int>> next;
    std::mutex guard;
    parallel_for(static_cast<int>(current.size()), threads, [&](int f) {
      FamilyState state(space);
      const auto& fam = current[static_cast<std::size_t>(f)];
      for (int idx : fam) state.push(idx);
      std::set<std::vector<int>> local;
      for (int i = 0; i < m; ++i) {
        if (budget.hit.load(std::memory_order_relaxed) || !budget.take()) return;
        state.push(i);
        if (!state.last_creates_rainbow()) local.insert(canonizer.canon(state.chosen()));
        state.pop();
      }
      std::lock_guard<std::mutex> lock(guard);
      next.insert(local.begin(), local.end());
    });
    if (budget.hit.load()) break;
    if (!next.empty()) {
      best.size = k + 1;
      best.witness = *next.begin();
    }
    level = std::move(next);
  }
  return best;
}

}  // namespace

SearchResult max_rainbow_free(const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.n < 3) throw Error(Errc::kUnsupportedN, "need n >= 3");
  if (config.n > 11) throw Error(Errc::kUnsupportedN, "exhaustive search supports n <= 11");
  int cap = config.max_family_size;
  if (cap <= 0) {
    if (!has_f_formula(config.cls)) {
      throw Error(Errc::kInvalidArgument, "max_family_size is required for class " + config.cls.to_string());
    }
    cap = f_formula(config.n, config.cls);
  }
  if (cap > 63) throw Error(Errc::kInvalidArgument, "max_family_size must be at most 63");
  if (config.thread_count < 1) throw Error(Errc::kInvalidArgument, "thread_count must be positive");

  const CycleSpace space(config.n, config.cls);
  Budget budget;
  budget.limit = config.node_budget;
  Best best;
  const int m = static_cast<int>(space.masks.size());
  if (config.canonicalization == Canonicalization::VertexPermutation) {
    best = search_orbits(space, cap, config.thread_count, budget);
  } else if (m > 0 && cap > 0) {
    const bool multiset = config.canonicalization == Canonicalization::ColorMultiset;
    std::vector<Best> per_root(static_cast<std::size_t>(m));
    parallel_for(m, config.thread_count, [&](int first) {
      TreeSearch search(space, cap, multiset, budget);
      per_root[static_cast<std::size_t>(first)] = search.run_from(first);
    });
    for (const auto& b : per_root) {
      if (b.size > 0) best.offer(b.witness);
    }
  }

  SearchResult result;
  result.max_free_size = best.size;
  std::vector<VertexCycle> cycles;
  for (int idx : best.witness) cycles.push_back(space.cycles[static_cast<std::size_t>(idx)]);
  result.witness = Family(config.n, std::move(cycles));
  result.f_value = best.size + 1;
  result.nodes_explored = std::min<std::uint64_t>(
      budget.used.load(), budget.limit > 0 ? budget.limit : budget.used.load());
  result.budget_hit = budget.hit.load();
  result.exhaustive = !result.budget_hit && best.size < cap;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

nlohmann::json search_report(const SearchConfig& config, const SearchResult& result) {
  nlohmann::json j{{"n", config.n},
                   {"class", config.cls.to_string()},
                   {"canonicalization", to_string(config.canonicalization)},
                   {"threads", config.thread_count},
                   {"node_budget", config.node_budget},
                   {"f_value", result.f_value},
                   {"max_free_size", result.max_free_size},
                   {"witness", family_to_json(result.witness)},
                   {"nodes_explored", result.nodes_explored},
                   {"wall_seconds", result.wall_seconds},
                   {"exhaustive", result.exhaustive}};
  if (has_f_formula(config.cls)) {
    try {
      j["f_formula"] = f_formula(config.n, config.cls);
    } catch (const Error&) {
    }
  }
  return j;
}

}  // namespace rainbow
