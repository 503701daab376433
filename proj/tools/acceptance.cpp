// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance [--seed N]
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "../tests/properties.hpp"
#include "../tests/support.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/extractor.hpp"
#include "rainbow/extremal.hpp"

using namespace rainbow;

namespace testsupport {
std::uint64_t& seed_slot() {
  static std::uint64_t seed = 20240601;
  return seed;
}
}  // namespace testsupport

namespace {

constexpr double kLimitC1 = 1.0;
constexpr double kLimitC2 = 60.0;
constexpr double kLimitC3 = 120.0;
constexpr double kLimitC4 = 300.0;
constexpr double kLimitC6 = 600.0;
constexpr int kExtractorRuns = 500;
constexpr int kPropertyRuns = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Every multiset of `size` cycles drawn from `pool` contains a rainbow cls-cycle.
bool every_multiset_has_witness(int n, const std::vector<VertexCycle>& pool, int size, const LengthClass& cls) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(size), 0);
  for (;;) {
    std::vector<VertexCycle> cycles;
    for (auto i : idx) cycles.push_back(pool[i]);
    if (!find_rainbow_a_cycle(Family(n, cycles), cls)) return false;
    int k = size - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == pool.size() - 1) --k;
    if (k < 0) return true;
    const auto v = idx[static_cast<std::size_t>(k)] + 1;
    for (auto j = static_cast<std::size_t>(k); j < idx.size(); ++j) idx[j] = v;
  }
}

Outcome exact_f(int n, const LengthClass& cls, int expected, Canonicalization mode) {
  Outcome o;
  SearchConfig cfg;
  cfg.n = n;
  cfg.cls = cls;
  cfg.canonicalization = mode;
  const auto r = max_rainbow_free(cfg);
  if (!r.exhaustive) o.fail("search not exhaustive");
  if (r.f_value != expected) o.fail("f = " + std::to_string(r.f_value) + ", expected " + std::to_string(expected));
  if (static_cast<int>(r.witness.size()) != expected - 1 || find_rainbow_a_cycle(r.witness, cls)) {
    o.fail("witness family not rainbow-free of size f-1");
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(r.nodes_explored) + " nodes";
  return o;
}

Outcome criterion1() {
  auto o = exact_f(4, LengthClass::even(), 4, Canonicalization::ColorMultiset);
  if (!every_multiset_has_witness(4, all_class_cycles(4, LengthClass::even()), 4, LengthClass::even())) {
    o.fail("a size-4 family without witness");
  }
  return o;
}

Outcome criterion2() {
  auto o = exact_f(5, LengthClass::even(), 5, Canonicalization::VertexPermutation);
  if (!every_multiset_has_witness(5, all_class_cycles(5, LengthClass::even()), 5, LengthClass::even())) {
    o.fail("a size-5 family without witness");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n = 4; n <= 5; ++n) {
    for (const auto& cls : {LengthClass::all(), LengthClass::odd()}) {
      const int expected = cls.kind() == LengthClass::Kind::All ? n : 2 * ((n + 1) / 2) - 1;
      const auto r = exact_f(n, cls, expected, Canonicalization::ColorMultiset);
      if (!r.pass) o.fail("n=" + std::to_string(n) + " " + cls.to_string() + ": " + r.detail);
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 4; n <= 24; ++n) {
    const auto fam = tight_even_family(n);
    if (static_cast<int>(fam.size()) != 6 * (n - 1) / 5) o.fail("wrong size at n=" + std::to_string(n));
    if (!fam.all_even()) o.fail("odd member at n=" + std::to_string(n));
    if (find_rainbow_a_cycle(fam, LengthClass::even())) o.fail("witness found at n=" + std::to_string(n));
    if (n <= 14 && testsupport::naive_has_rainbow_even(n, testsupport::family_edges(fam))) {
      o.fail("naive oracle finds a witness at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t extensions = 0;
  for (int n = 4; n <= 7; ++n) {
    const auto fam = tight_even_family(n);
    for (const auto& c : all_class_cycles(n, LengthClass::even())) {
      ++extensions;
      const auto ext = fam.with_cycle(c);
      const auto w = find_rainbow_a_cycle(ext, LengthClass::even());
      if (!w || !verify_witness(*w, ext, LengthClass::even())) o.fail("extension without witness at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = std::to_string(extensions) + " extensions";
  return o;
}

struct ExtractorStats {
  Outcome soundness;
  Outcome termination;
  double seconds = 0.0;
};

ExtractorStats criteria6and8() {
  ExtractorStats s;
  const auto t0 = Clock::now();
  auto rng = testsupport::make_rng(6);
  std::uint64_t max_iter = 0;
  for (int run = 0; run < kExtractorRuns; ++run) {
    const int n = 4 + run % 5;
    const int m = 6 * (n - 1) / 5 + 1;
    const auto fam = testsupport::random_even_family(rng, n, m);
    const std::string tag = "run " + std::to_string(run) + " n=" + std::to_string(n);
    try {
      const auto r = extract_rainbow_even_cycle(fam);
      if (!verify_witness(r.witness, fam, LengthClass::even()) ||
          !testsupport::witness_ok(r.witness, testsupport::family_edges(fam), true)) {
        s.soundness.fail(tag + ": witness rejected");
      }
      if (!find_rainbow_a_cycle(fam, LengthClass::even())) s.soundness.fail(tag + ": detector finds none");
      if (n <= 6 && !testsupport::naive_has_rainbow_even(n, testsupport::family_edges(fam))) {
        s.soundness.fail(tag + ": naive oracle finds none");
      }
      if (r.iterations > r.bound) s.termination.fail(tag + ": iteration bound exceeded");
      for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& t = r.trace[i];
        if (!(t.before < t.after)) s.termination.fail(tag + ": potential not increasing");
        if (i > 0 && !(r.trace[i - 1].after == t.before)) s.termination.fail(tag + ": trace not contiguous");
      }
      max_iter = std::max(max_iter, r.iterations);
    } catch (const Error& e) {
      s.soundness.fail(tag + ": " + to_string(e.code()) + " " + e.what());
      s.termination.fail(tag + ": aborted");
    }
  }
  s.seconds = seconds_since(t0);
  if (s.termination.pass) s.termination.detail = "max iterations " + std::to_string(max_iter);
  return s;
}

Outcome criterion7() {
  Outcome o;
  using Check = std::function<std::string(std::mt19937_64&)>;
  const std::vector<std::pair<std::string, Check>> suites = {
      {"theta", testsupport::check_theta_even_cycle},
      {"ectest", testsupport::check_ectest},
      {"frankenstein", testsupport::check_frankenstein_structure},
      {"color_sdr", testsupport::check_color_sdr},
  };
  std::uint64_t salt = 70;
  for (const auto& [name, check] : suites) {
    auto rng = testsupport::make_rng(salt++);
    for (int i = 0; i < kPropertyRuns; ++i) {
      const auto msg = check(rng);
      if (!msg.empty()) {
        o.fail(name + " #" + std::to_string(i) + ": " + msg);
        break;
      }
    }
  }
  return o;
}

bool report(int id, const std::string& title, const Outcome& o, double secs, double limit) {
  const bool in_time = limit <= 0 || secs < limit;
  const bool ok = o.pass && in_time;
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << secs << " s";
  if (limit > 0) std::cout << ", limit " << limit << " s";
  std::cout << ")";
  if (!o.detail.empty()) std::cout << " " << o.detail;
  if (!in_time) std::cout << " [too slow]";
  std::cout << "\n" << std::flush;
  return ok;
}

template <class F>
bool timed(int id, const std::string& title, double limit, F&& f) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  return report(id, title, o, seconds_since(t0), limit);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) {
      testsupport::seed_slot() = std::strtoull(arg.c_str() + 7, nullptr, 10);
    } else if (arg == "--seed" && i + 1 < argc) {
      testsupport::seed_slot() = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--seed N]\n";
      return 64;
    }
  }
  std::cout << "seed " << testsupport::seed_slot() << "\n";
  bool all = true;
  all &= timed(1, "f(4, even) = 4", kLimitC1, criterion1);
  all &= timed(2, "f(5, even) = 5", kLimitC2, criterion2);
  all &= timed(3, "f(n, all) = n and f(n, odd) = 2ceil(n/2)-1 for n = 4, 5", kLimitC3, criterion3);
  all &= timed(4, "tight even families n = 4..24", kLimitC4, criterion4);
  all &= timed(5, "sharpness of the threshold for n <= 7", 0, criterion5);
  const auto ex = criteria6and8();
  all &= report(6, "extractor soundness on 500 random families", ex.soundness, ex.seconds, kLimitC6);
  all &= timed(7, "structural property suites", 0, criterion7);
  all &= report(8, "potential increases and iterations stay within the bound", ex.termination, ex.seconds, 0);
  return all ? 0 : 1;
}
