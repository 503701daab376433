#include "doctest.h"
#include "properties.hpp"
#include "rainbow/frankenstein.hpp"

using namespace rainbow;

namespace {

Graph cycle_graph(const std::vector<Vertex>& vs, Color first, int n) {
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    edges.push_back(make_edge(vs[i], vs[(i + 1) % vs.size()], first + static_cast<Color>(i)));
  }
  return make_graph(edges, n);
}

// The six-vertex bad piece: paths 1-5, 1-2-3-4-5 and 1-6-5; colors a..g as 1..7.
Graph six_vertex_piece(int n = 6) {
  return make_graph({make_edge(1, 2, 1), make_edge(2, 3, 2), make_edge(3, 4, 3), make_edge(4, 5, 4),
                     make_edge(5, 1, 5), make_edge(1, 6, 1), make_edge(6, 5, 7)},
                    n);
}

bool has_issue(const ValidationReport& r, IssueKind k) { return r.find(k) != nullptr; }

}  // namespace

TEST_CASE("single tree part is valid") {
  const FrankensteinGraph fg(4, {{PartKind::RainbowTree, make_graph({make_edge(1, 2, 1), make_edge(2, 3, 2)}, 4)}});
  CHECK(validate_frankenstein(fg).ok());
  CHECK(fg.t() == 1);
  CHECK(color_bound(fg) == make_rational(1, 1));
}

TEST_CASE("tree parts sharing a vertex violate vertex disjointness") {
  const FrankensteinGraph fg(4, {{PartKind::RainbowTree, make_graph({make_edge(1, 2, 1)}, 4)},
                                 {PartKind::RainbowTree, make_graph({make_edge(2, 3, 2)}, 4)}});
  CHECK(has_issue(validate_frankenstein(fg), IssueKind::F1));
}

TEST_CASE("a rainbow 4-cycle part breaks shape and evenness") {
  const FrankensteinGraph fg(4, {{PartKind::LongOddCycle, cycle_graph({1, 2, 3, 4}, 1, 4)}});
  const auto r = validate_frankenstein(fg);
  CHECK(has_issue(r, IssueKind::PartShape));
  const auto* f2 = r.find(IssueKind::F2);
  REQUIRE(f2 != nullptr);
  REQUIRE(f2->witness.has_value());
  CHECK(f2->witness->length() == 4);
}

TEST_CASE("overlap and shared colors are reported") {
  const FrankensteinGraph overlap(12, {{PartKind::LongOddCycle, cycle_graph({1, 2, 3, 4, 5, 6, 7}, 1, 12)},
                                       {PartKind::LongOddCycle, cycle_graph({1, 8, 9, 4, 10, 11, 12}, 20, 12)}});
  CHECK(has_issue(validate_frankenstein(overlap), IssueKind::Overlap));
  const FrankensteinGraph shared(9, {{PartKind::LongOddCycle, cycle_graph({1, 2, 3, 4, 5, 6, 7}, 1, 9)},
                                     {PartKind::RainbowTree, make_graph({make_edge(8, 9, 3)}, 9)}});
  CHECK(has_issue(validate_frankenstein(shared), IssueKind::SharedColor));
  const Family fam(9, {{1, 2, 3, 4}});
  CHECK(has_issue(validate_frankenstein(shared, &fam), IssueKind::NotInFamily));
}

TEST_CASE("auxiliary graph of one and two parts") {
  const FrankensteinGraph one(7, {{PartKind::LongOddCycle, cycle_graph({1, 2, 3, 4, 5, 6, 7}, 1, 7)}});
  auto aux = aux_bipartite(one);
  CHECK(aux.part_count == 1);
  CHECK(aux.shared.empty());
  CHECK(gluing_order(one) == std::vector<int>{0});
  const FrankensteinGraph two(8, {{PartKind::LongOddCycle, cycle_graph({1, 2, 3, 4, 5, 6, 7}, 1, 7 + 1)},
                                  {PartKind::RainbowTree, make_graph({make_edge(7, 8, 9)}, 8)}});
  aux = aux_bipartite(two);
  CHECK(aux.shared == std::vector<Vertex>{7});
  CHECK(aux.edges.size() == 2);
  CHECK(aux.acyclic);
}

TEST_CASE("three parts glued in a triangle are not Frankenstein") {
  const int n = 19;
  const FrankensteinGraph fg(n, {{PartKind::LongOddCycle, cycle_graph({1, 2, 3, 4, 5, 6, 7}, 1, n)},
                                 {PartKind::LongOddCycle, cycle_graph({4, 8, 9, 10, 11, 12, 13}, 8, n)},
                                 {PartKind::LongOddCycle, cycle_graph({10, 14, 15, 16, 17, 18, 1}, 15, n)}});
  CHECK_FALSE(aux_bipartite(fg).acyclic);
  CHECK_THROWS_AS(gluing_order(fg), Error);
  CHECK(find_rainbow_even_cycle(fg.graph()).has_value());
  CHECK(testsupport::subset_has_rainbow_even(fg.graph()) == true);
  CHECK(has_issue(validate_frankenstein(fg), IssueKind::F2));
}

TEST_CASE("star of parts around one vertex") {
  const int n = 20;
  const FrankensteinGraph fg(n, {{PartKind::LongOddCycle, cycle_graph({1, 2, 3, 4, 5, 6, 7}, 1, n)},
                                 {PartKind::LongOddCycle, cycle_graph({1, 8, 9, 10, 11, 12, 13}, 8, n)},
                                 {PartKind::RainbowTree, make_graph({make_edge(1, 14, 15), make_edge(14, 15, 16)}, n)}});
  CHECK(validate_frankenstein(fg).ok());
  const auto order = gluing_order(fg);
  CHECK(order.size() == 3);
  CHECK(max_prefix_overlap(fg, order) == 1);
}

TEST_CASE("color bounds of single parts") {
  CHECK(color_bound(make_graph({make_edge(1, 2, 1), make_edge(2, 3, 2), make_edge(2, 4, 3)}, 4)) == make_rational(1, 1));
  CHECK(color_bound(cycle_graph({1, 2, 3, 4, 5, 6, 7}, 1, 7)) == make_rational(7, 6));
  CHECK(color_bound(six_vertex_piece()) == make_rational(6, 5));
  CHECK_THROWS_AS(color_bound(Graph(3)), Error);
}

TEST_CASE("locating cycles in parts") {
  const int n = 12;
  auto piece = six_vertex_piece(n);
  const FrankensteinGraph fg(n, {{PartKind::BadPiece, piece},
                                 {PartKind::LongOddCycle, cycle_graph({5, 7, 8, 9, 10, 11, 12}, 20, n)}});
  REQUIRE(validate_frankenstein(fg).ok());
  const ColoredCycle inner{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}};
  CHECK(locate_cycle_part(fg, inner) == 0);
  const ColoredCycle own{{5, 7, 8, 9, 10, 11, 12}, {20, 21, 22, 23, 24, 25, 26}};
  CHECK(locate_cycle_part(fg, own) == 1);
  const ColoredCycle absent{{1, 2, 3}, {1, 2, 9}};
  CHECK_THROWS_AS(locate_cycle_part(fg, absent), Error);
}

TEST_CASE("rainbow paths") {
  const auto piece = six_vertex_piece(8);
  const FrankensteinGraph fg(8, {{PartKind::BadPiece, piece}, {PartKind::RainbowTree, make_graph({make_edge(7, 8, 9)}, 8)}});
  const auto p = rainbow_path(fg, 3, 6);
  REQUIRE(p.has_value());
  CHECK(p->front() == 3);
  CHECK(p->back() == 6);
  CHECK(std::set<Color>(p->colors.begin(), p->colors.end()).size() == p->length());
  CHECK(std::set<Vertex>(p->vertices.begin(), p->vertices.end()).size() == p->vertices.size());
  const auto single = rainbow_path(fg, 7, 8);
  REQUIRE(single.has_value());
  CHECK(single->length() == 1);
  CHECK_FALSE(rainbow_path(fg, 1, 8).has_value());
}

TEST_CASE("ectest on a 5-cycle and a triangle") {
  const auto x = cycle_graph({1, 2, 3, 4, 5}, 1, 6);
  const ColoredCycle c{{1, 2, 6}, {1, 10, 11}};
  const auto w = ectest_extract(c, x);
  CHECK((w.length() == 4 || w.length() == 6));
  testsupport::EdgeList all = x.edges();
  all.push_back(make_edge(2, 6, 10));
  all.push_back(make_edge(6, 1, 11));
  CHECK(testsupport::witness_ok(w, all, true));
  const ColoredCycle one_shared{{1, 6, 7}, {10, 11, 12}};
  CHECK_THROWS_AS(ectest_extract(one_shared, x), Error);
}

TEST_CASE("ectest on the six-vertex bad piece") {
  const auto x = six_vertex_piece(7);
  const ColoredCycle c{{3, 7, 6}, {10, 11, 12}};
  const auto w = ectest_extract(c, x);
  testsupport::EdgeList all = x.edges();
  for (const auto& e : c.edges()) all.push_back(e);
  CHECK(testsupport::witness_ok(w, all, true));
}

TEST_CASE("ectest randomized against the exhaustive detector") {
  auto rng = testsupport::make_rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto msg = testsupport::check_ectest(rng);
    CHECK_MESSAGE(msg.empty(), msg);
  }
}

TEST_CASE("generated Frankenstein graphs have a forest gluing and bounded color ratio") {
  auto rng = testsupport::make_rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto msg = testsupport::check_frankenstein_structure(rng);
    CHECK_MESSAGE(msg.empty(), msg);
  }
}

TEST_CASE("tree depth with minimum root") {
  auto d = forest_depth(make_graph({make_edge(1, 2, 1)}, 2));
  CHECK(d.total == 1);
  CHECK(d.trees[0].root == 1);
  d = forest_depth(make_graph({make_edge(1, 2, 1), make_edge(1, 3, 2), make_edge(1, 4, 3), make_edge(1, 5, 4)}, 5));
  CHECK(d.total == 4);
  d = forest_depth(make_graph({make_edge(3, 1, 1), make_edge(1, 2, 2)}, 3));
  CHECK(d.total == 2);
  CHECK(d.trees[0].depth == std::map<Vertex, int>{{1, 0}, {2, 1}, {3, 1}});
  CHECK_THROWS_AS(forest_depth(cycle_graph({1, 2, 3}, 1, 3)), Error);
}

TEST_CASE("partition JSON round trip") {
  const FrankensteinGraph fg(8, {{PartKind::BadPiece, six_vertex_piece(8)},
                                 {PartKind::RainbowTree, make_graph({make_edge(7, 8, 9)}, 8)}});
  const auto back = partition_from_json(partition_to_json(fg), 8);
  CHECK(back.parts() == fg.parts());
}
