#include "rainbow/constructions.hpp"

#include <map>

#include "json.hpp"
#include "rainbow/family_io.hpp"
#include "tight_data.hpp"

namespace rainbow {

Family glue(const GlueSpec& spec) {
  const int nl = spec.left.n();
  const int nr = spec.right.n();
  if (spec.left_vertex < 1 || spec.left_vertex > nl || spec.right_vertex < 1 ||
      spec.right_vertex > nr) {
    throw Error(Errc::kVertexOutOfRange, "glue vertex outside its family");
  }
  std::map<Vertex, Vertex> relabel;
  Vertex next = nl + 1;
  for (Vertex v = 1; v <= nr; ++v) relabel[v] = v == spec.right_vertex ? spec.left_vertex : next++;
  std::vector<VertexCycle> cycles = spec.left.cycles();
  for (const auto& cyc : spec.right.cycles()) {
    VertexCycle mapped;
    for (Vertex v : cyc) mapped.push_back(relabel.at(v));
    cycles.push_back(std::move(mapped));
  }
  return Family(nl + nr - 1, std::move(cycles));
}

Family base_tight_family(int n) {
  if (n < 4 || n > 8) throw Error(Errc::kUnsupportedN, "base families exist for n = 4..8");
  static const nlohmann::json data = nlohmann::json::parse(detail::kTightFamiliesJson);
  return family_from_json(data.at(std::to_string(n)));
}

Family tight_even_family(int n) {
  if (n < 4) throw Error(Errc::kUnsupportedN, "no even cycle exists on fewer than 4 vertices");
  if (n <= 8) return base_tight_family(n);
  const Family left = tight_even_family(n - 5);
  return glue(GlueSpec{left, base_tight_family(6), left.n(), 1});
}

Family coincident_tight_family(CoincidentKind kind, int n) {
  if (n < 3) throw Error(Errc::kUnsupportedN, "need n >= 3");
  const int half = (n + 1) / 2;
  const int len = kind == CoincidentKind::Odd ? 2 * half - 1 : n;
  const int copies = kind == CoincidentKind::Odd ? 2 * (half - 1) : n - 1;
  VertexCycle cycle;
  for (Vertex v = 1; v <= len; ++v) cycle.push_back(v);
  return Family(n, std::vector<VertexCycle>(static_cast<std::size_t>(copies), cycle));
}

}  // namespace rainbow
