#include "doctest.h"
#include "rainbow/constructions.hpp"
#include "rainbow/detect.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

bool even_free(const Family& fam) { return !find_rainbow_a_cycle(fam, LengthClass::even()).has_value(); }

std::set<Vertex> used_vertices(const Family& fam) {
  std::set<Vertex> out;
  for (const auto& c : fam.cycles()) out.insert(c.begin(), c.end());
  return out;
}

}  // namespace

TEST_CASE("tight even family at n = 4") {
  const auto fam = tight_even_family(4);
  CHECK(fam.size() == 3);
  CHECK(fam.all_even());
  CHECK(even_free(fam));
  CHECK(testsupport::naive_has_rainbow_even(4, testsupport::family_edges(fam)) == false);
}

TEST_CASE("tight even families have the threshold size and stay free") {
  for (int n = 4; n <= 14; ++n) {
    CAPTURE(n);
    const auto fam = tight_even_family(n);
    CHECK(static_cast<int>(fam.size()) == 6 * (n - 1) / 5);
    CHECK(fam.n() == n);
    CHECK(fam.all_even());
    CHECK(even_free(fam));
  }
  CHECK(tight_even_family(9).size() == 9);
  const auto big = tight_even_family(20);
  CHECK(big.size() == 22);
  CHECK(even_free(big));
  CHECK_THROWS_AS(tight_even_family(3), Error);
}

TEST_CASE("base families are certified") {
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    const auto fam = base_tight_family(n);
    CHECK(static_cast<int>(fam.size()) == 6 * (n - 1) / 5);
    CHECK(even_free(fam));
    if (n <= 6) CHECK(testsupport::naive_has_rainbow_even(n, testsupport::family_edges(fam)) == false);
  }
}

TEST_CASE("coincident tight families") {
  const auto any5 = coincident_tight_family(CoincidentKind::Any, 5);
  CHECK(any5.size() == 4);
  CHECK(any5.cycles().front().size() == 5);
  CHECK_FALSE(find_rainbow_a_cycle(any5, LengthClass::all()).has_value());
  const auto odd5 = coincident_tight_family(CoincidentKind::Odd, 5);
  CHECK(odd5.size() == 4);
  CHECK_FALSE(find_rainbow_a_cycle(odd5, LengthClass::odd()).has_value());
  const auto odd3 = coincident_tight_family(CoincidentKind::Odd, 3);
  CHECK(odd3.size() == 2);
  const auto odd6 = coincident_tight_family(CoincidentKind::Odd, 6);
  CHECK(odd6.size() == 4);
  CHECK(odd6.cycles().front().size() == 5);
  CHECK_FALSE(find_rainbow_a_cycle(odd6, LengthClass::odd()).has_value());
  // one more copy of the same cycle makes it rainbow
  CHECK(find_rainbow_a_cycle(any5.with_cycle(any5.cycles().front()), LengthClass::all()).has_value());
}

TEST_CASE("gluing two families at a vertex") {
  const auto d4 = base_tight_family(4);
  const auto g44 = glue({d4, d4, 1, 1});
  CHECK(g44.size() == 6);
  CHECK(g44.n() == 7);
  CHECK(used_vertices(g44).size() == 7);
  CHECK(even_free(g44));
  const auto d6 = base_tight_family(6);
  const auto g66 = glue({d6, d6, 2, 3});
  CHECK(g66.size() == 12);
  CHECK(g66.n() == 11);
  CHECK(g66.size() == 6 * (11 - 1) / 5);
  CHECK(even_free(g66));
  CHECK_THROWS_AS(glue({d4, d4, 9, 1}), Error);
}

TEST_CASE("gluing keeps the two sides edge-disjoint") {
  const auto d5 = base_tight_family(5);
  const auto g = glue({d5, base_tight_family(4), 5, 2});
  std::set<VertexPair> left, right;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const auto& e : g.cycle_edges(static_cast<Color>(i + 1))) {
      (i < d5.size() ? left : right).insert(e.pair());
    }
  }
  for (const auto& p : left) CHECK(right.count(p) == 0);
}
