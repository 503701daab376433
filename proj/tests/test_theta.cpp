#include "doctest.h"
#include "rainbow/detect.hpp"
#include "rainbow/theta.hpp"

using namespace rainbow;

namespace {

// Labels a..g of the small examples map to colors 1..7.
constexpr Color a = 1, b = 2, c = 3, d = 4, e = 5, f = 6, g = 7;

}  // namespace

TEST_CASE("theta on paths of lengths 3, 4, 5") {
  // s = 1, t = 2; top path 1-3-4-2, middle 1-5-6-7-2, bottom 1-8-9-10-11-2.
  std::vector<ColoredEdge> edges;
  Color col = 1;
  auto path = [&](std::vector<Vertex> vs) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) edges.push_back(make_edge(vs[i], vs[i + 1], col++));
  };
  path({1, 3, 4, 2});
  path({1, 5, 6, 7, 2});
  path({1, 8, 9, 10, 11, 2});
  const auto graph = make_graph(edges, 11);
  const auto theta = theta_decompose(graph);
  REQUIRE(theta.has_value());
  CHECK(theta->s == 1);
  CHECK(theta->t == 2);
  CHECK(theta->paths[0].length() == 3);
  CHECK(theta->paths[1].length() == 4);
  CHECK(theta->paths[2].length() == 5);
  CHECK(theta->graph(11) == graph);
  // Lengths 3 and 5 share parity.
  const auto w = theta_even_cycle(graph);
  CHECK(w.length() == 8);
  CHECK(verify_witness_in_graph(w, graph));
}

TEST_CASE("four vertices are too few for a bad piece") {
  const auto graph = make_graph({make_edge(1, 4, c), make_edge(4, 3, d), make_edge(3, 2, c), make_edge(2, 1, b),
                                 make_edge(1, 3, a)},
                                4);
  CHECK(theta_decompose(graph).has_value());
  CHECK(is_almost_rainbow(graph));
  CHECK_FALSE(is_bad_piece(graph));
}

TEST_CASE("bad piece on six vertices and seven edges") {
  const auto graph = make_graph({make_edge(1, 2, a), make_edge(2, 3, b), make_edge(3, 4, c), make_edge(4, 5, d),
                                 make_edge(5, 1, e), make_edge(1, 6, a), make_edge(6, 5, g)},
                                6);
  CHECK(is_bad_piece(graph));
  CHECK_FALSE(find_rainbow_even_cycle(graph).has_value());
}

TEST_CASE("a non-rainbow path spoils the bad piece") {
  const auto graph = make_graph({make_edge(1, 2, a), make_edge(2, 3, b), make_edge(3, 4, c), make_edge(4, 5, b),
                                 make_edge(5, 1, e), make_edge(1, 6, f), make_edge(6, 5, g)},
                                6);
  CHECK(theta_decompose(graph).has_value());
  CHECK(is_almost_rainbow(graph));
  CHECK_FALSE(is_bad_piece(graph));
}

TEST_CASE("non-theta shapes") {
  CHECK_FALSE(theta_decompose(make_graph({make_edge(1, 2, 1), make_edge(2, 3, 2), make_edge(3, 1, 3)}, 3)));
  // Two triangles sharing a vertex: degrees fit nowhere.
  CHECK_FALSE(theta_decompose(make_graph({make_edge(1, 2, 1), make_edge(2, 3, 2), make_edge(3, 1, 3),
                                          make_edge(3, 4, 4), make_edge(4, 5, 5), make_edge(5, 3, 6)},
                                         5)));
  // K4 has four vertices of degree 3.
  CHECK_FALSE(theta_decompose(make_graph({make_edge(1, 2, 1), make_edge(1, 3, 2), make_edge(1, 4, 3),
                                          make_edge(2, 3, 4), make_edge(2, 4, 5), make_edge(3, 4, 6)},
                                         4)));
}
