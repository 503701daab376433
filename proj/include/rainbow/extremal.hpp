#pragma once

// Exhaustive computation of f(n, A): the least N such that every family of
// N A-cycles on [n] has a rainbow A-cycle.

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "rainbow/core.hpp"
#include "rainbow/detect.hpp"

namespace rainbow {

enum class Canonicalization {
  None,             // ordered sequences of cycles
  ColorMultiset,    // non-decreasing cycle index along a branch
  VertexPermutation // multisets up to relabeling of [n]
};

const char* to_string(Canonicalization mode);
Canonicalization canonicalization_from_string(const std::string& text);

struct SearchConfig {
  int n = 4;
  LengthClass cls = LengthClass::even();
  int max_family_size = 0;  // 0: f_formula(n, cls) for all/odd/even, else required
  int thread_count = 1;
  std::uint64_t node_budget = 0;  // 0: unlimited
  Canonicalization canonicalization = Canonicalization::ColorMultiset;
};

struct SearchResult {
  int max_free_size = 0;
  Family witness;
  int f_value = 1;
  std::uint64_t nodes_explored = 0;
  // True when the whole space up to max_family_size was covered and the
  // maximum stayed below that cap, so f_value is exact.
  bool exhaustive = false;
  bool budget_hit = false;
  double wall_seconds = 0.0;
};

// Every cycle of K_n with length in cls, canonical vertex order. Order:
// by smallest vertex, then depth-first.
std::vector<VertexCycle> all_class_cycles(int n, const LengthClass& cls);

// Closed forms for the three solved classes. Throws kUnsupportedN when the
// class is vacuous at n (Even needs n >= 4, others n >= 3) and
// kInvalidArgument for other classes.
int f_formula(int n, const LengthClass& cls);
bool has_f_formula(const LengthClass& cls);

// Throws kUnsupportedN for n > 11 and kInvalidArgument for a bad config.
SearchResult max_rainbow_free(const SearchConfig& config);

nlohmann::json search_report(const SearchConfig& config, const SearchResult& result);

}  // namespace rainbow
