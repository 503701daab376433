// Build-time certificate for the transcribed base families: right size,
// even cycles only, and no rainbow even cycle.

#include <cstdio>

#include "rainbow/constructions.hpp"
#include "rainbow/detect.hpp"

int main() {
  using namespace rainbow;
  int failures = 0;
  for (int n = 4; n <= 8; ++n) {
    const Family fam = base_tight_family(n);
    const std::size_t expected = static_cast<std::size_t>(6 * (n - 1) / 5);
    const bool size_ok = fam.size() == expected && fam.n() == n;
    const bool even_ok = fam.all_even();
    const auto witness = find_rainbow_a_cycle(fam, LengthClass::even());
    const bool ok = size_ok && even_ok && !witness;
    std::printf("D_%d: %zu cycles (want %zu), %s\n", n, fam.size(), expected,
                ok ? "certified" : "REJECTED");
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
