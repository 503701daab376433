#pragma once

// Exact rainbow-cycle detection.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/core.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/theta.hpp"

namespace rainbow {

class LengthClass {
 public:
  enum class Kind { All, Odd, Even, Exactly, Set };

  static LengthClass all() { return LengthClass(Kind::All, {}); }
  static LengthClass odd() { return LengthClass(Kind::Odd, {}); }
  static LengthClass even() { return LengthClass(Kind::Even, {}); }
  static LengthClass exactly(int k);
  static LengthClass set(std::vector<int> lengths);
  // "all", "odd", "even", "exactly:k" (or a bare integer), "set:3,5,7".
  // Throws kInvalidArgument.
  static LengthClass parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::vector<int>& lengths() const { return lengths_; }
  bool accepts(int len) const;
  CycleQuery query() const;
  std::string to_string() const;

  friend bool operator==(const LengthClass&, const LengthClass&) = default;

 private:
  LengthClass(Kind kind, std::vector<int> lengths) : kind_(kind), lengths_(std::move(lengths)) {}

  Kind kind_;
  std::vector<int> lengths_;
};

// A rainbow cycle together with its color assignment (colors[i] on the edge
// vertices[i] vertices[i+1]).
using RainbowCycleWitness = ColoredCycle;

struct DetectOptions {
  std::uint64_t max_cycles = 0;  // cap on closed candidate cycles; 0 = no cap
  bool prune = true;             // discard paths whose edges admit no SDR
};

// First witness in enumeration order, or none. Throws kSearchBudgetExceeded
// when the cap is reached before the search finishes.
std::optional<RainbowCycleWitness> find_rainbow_a_cycle(const ColoredMultigraph& mg,
                                                        const LengthClass& cls,
                                                        const DetectOptions& opts = {});
std::optional<RainbowCycleWitness> find_rainbow_a_cycle(const Family& fam, const LengthClass& cls,
                                                        const DetectOptions& opts = {});
// Rainbow even cycle inside a simple colored graph.
std::optional<RainbowCycleWitness> find_rainbow_even_cycle(const Graph& g);

// Greedy maximal rainbow forest; a color left unused closes a rainbow cycle.
std::optional<RainbowCycleWitness> find_rainbow_cycle(const Family& fam);

// The union of two same-parity paths of a rainbow theta graph. Throws
// kNotRainbow; the Graph overload also throws kNotATheta.
RainbowCycleWitness theta_even_cycle(const ThetaGraph& theta);
RainbowCycleWitness theta_even_cycle(const Graph& g);

// Rotates a witness into canonical vertex order, carrying the colors along.
RainbowCycleWitness canonical_witness(const ColoredCycle& cycle);

// Distinct vertices, length accepted by cls, distinct colors, each (pair,
// color) present in the family.
bool verify_witness(const RainbowCycleWitness& w, const Family& fam, const LengthClass& cls);
bool verify_witness_in_graph(const RainbowCycleWitness& w, const Graph& g);

nlohmann::json witness_to_json(const RainbowCycleWitness& w);
RainbowCycleWitness witness_from_json(const nlohmann::json& j);

}  // namespace rainbow
