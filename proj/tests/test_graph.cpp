#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reconkit/enumerate.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/graph6.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"

using namespace reconkit;

TEST_CASE("graph rejects loops, duplicates and out-of-range endpoints") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(65), CapacityError);
  CHECK(g.add_edge(2, 0));
  CHECK_FALSE(g.add_edge(0, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("basic graphs") {
  CHECK(complete_graph(3).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(path_graph(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(empty_graph(2).order() == 2);
  CHECK(empty_graph(2).edge_count() == 0);
  CHECK(make_basic(BasicKind::complete, 0).order() == 0);
  CHECK(make_basic(BasicKind::path, 1).edge_count() == 0);
}

TEST_CASE("union and join") {
  const Graph u = disjoint_union({complete_graph(2), complete_graph(1)});
  CHECK(u.order() == 3);
  CHECK(u.edge_count() == 1);
  CHECK(join({complete_graph(1), complete_graph(1)}) == complete_graph(2));
  const Graph j = join({complete_graph(2), empty_graph(2)});
  CHECK(j.order() == 4);
  CHECK(j.edge_count() == 5);
  CHECK(join({empty_graph(1), empty_graph(1), empty_graph(1)}) == complete_graph(3));
  CHECK_THROWS_AS(combine(CombineKind::join, {}), InputError);
  CHECK(copies(complete_graph(2), 3).edge_count() == 3);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  CHECK(complement(path_graph(3)).edges() == std::vector<Edge>{{0, 2}});
  std::mt19937 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(1 + i % 6, 0.5, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).edge_count() + g.edge_count() == g.order() * (g.order() - 1) / 2);
  }
}

TEST_CASE("line graphs") {
  CHECK(line_graph(path_graph(4)) == path_graph(3));
  CHECK(line_graph(complete_graph(3)) == complete_graph(3));
  CHECK(line_graph(star_graph(3)) == complete_graph(3));
  for (std::size_t n = 2; n <= 7; ++n) {
    CHECK(are_isomorphic(line_graph(path_graph(n)), path_graph(n - 1)));
  }
  // Vertex i of L(g) is the i-th edge in lexicographic order.
  const Graph g(4, {{0, 1}, {0, 2}, {2, 3}});
  CHECK(line_graph(g).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("deletion") {
  CHECK(delete_vertices(complete_graph(3), std::vector<Vertex>{0}) == complete_graph(2));
  CHECK(delete_vertices(path_graph(3), std::vector<Vertex>{1}) == empty_graph(2));
  CHECK(delete_edges(complete_graph(3), std::vector<Edge>{{0, 1}}).edges() ==
        std::vector<Edge>{{0, 2}, {1, 2}});
  // Survivors keep their relative order.
  const Graph p = path_graph(5);
  CHECK(delete_vertices(p, std::vector<Vertex>{0, 2}).edges() == std::vector<Edge>{{1, 2}});
  CHECK_THROWS_AS(delete_vertices(p, std::vector<Vertex>{5}), InputError);
  CHECK_THROWS_AS(delete_edges(p, std::vector<Edge>{{0, 2}}), InputError);
  std::mt19937 rng(2);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    CHECK(delete_vertices(g, std::vector<Vertex>{1, 4}).order() == 4);
  }
}

TEST_CASE("closed neighbourhoods") {
  CHECK(closed_neighborhood(complete_graph(3), 0) == std::vector<Vertex>{0, 1, 2});
  CHECK(closed_neighborhood(empty_graph(3), 1) == std::vector<Vertex>{1});
  CHECK(closed_neighborhood(path_graph(3), 1) == std::vector<Vertex>{0, 1, 2});
  CHECK_THROWS_AS(closed_neighborhood(path_graph(3), 3), InputError);
}

TEST_CASE("metrics") {
  const GraphMetrics k4 = metrics(complete_graph(4));
  CHECK(k4.edge_connectivity == 3);
  CHECK(k4.min_degree == 3);
  CHECK(k4.is_connected);
  const GraphMetrics p3 = metrics(path_graph(3));
  CHECK(p3.edge_connectivity == 1);
  CHECK(p3.min_degree == 1);
  const GraphMetrics two = metrics(copies(complete_graph(2), 2));
  CHECK(two.edge_connectivity == 0);
  CHECK_FALSE(two.is_connected);
  CHECK(two.components.size() == 2);
  CHECK(metrics(complete_graph(1)).edge_connectivity == 0);
}

TEST_CASE("edge connectivity matches the subset-removal oracle and never exceeds min degree") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const GraphMetrics m = metrics(g);
      CHECK(m.edge_connectivity == oracle::edge_connectivity(g));
      CHECK(m.edge_connectivity <= m.min_degree);
    }
  }
}

TEST_CASE("union with the empty graph is the identity; join order only relabels") {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Graph a = oracle::random_graph(1 + i % 4, 0.5, rng);
    const Graph b = oracle::random_graph(1 + i % 3, 0.5, rng);
    CHECK(disjoint_union({a, Graph(0)}) == a);
    CHECK(are_isomorphic(join({a, b}), join({b, a})));
  }
}

TEST_CASE("enumeration counts match labeled enumeration with brute-force dedupe") {
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(enumerate_graphs(n).size() == oracle::class_count(n));
  }
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK(enumerate_graphs(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_graphs(8), CapacityError);
}

TEST_CASE("enumeration is certificate sorted and every labeled graph hits exactly one class") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto& gs = enumerate_graphs(n);
    for (std::size_t i = 1; i < gs.size(); ++i) {
      CHECK(certificate(gs[i - 1]) < certificate(gs[i]));
    }
  }
  std::mt19937 rng(4);
  const auto& five = enumerate_graphs(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(5, 0.5, rng);
    std::size_t hits = 0;
    for (const Graph& r : five) {
      hits += oracle::isomorphic(g, r) ? 1 : 0;
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("connected enumeration") {
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(5).size() == 21);
}

TEST_CASE("graph6 matches the hand encoder and round-trips") {
  CHECK(encode_graph6(complete_graph(3)) == "Bw");
  CHECK(encode_graph6(empty_graph(2)) == "A?");
  CHECK(oracle::graph6(complete_graph(3)) == "Bw");
  CHECK(oracle::graph6(empty_graph(2)) == "A?");
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::labeled_graphs(n)) {
      const std::string line = encode_graph6(g);
      CHECK(line == oracle::graph6(g));
      CHECK(decode_graph6(line) == g);
    }
  }
  std::mt19937 rng(5);
  for (std::size_t n : {20, 62, 63, 64}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 parse errors report the byte offset") {
  try {
    decode_graph6("Bw!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(decode_graph6(""), ParseError);
  CHECK_THROWS_AS(decode_graph6("B"), ParseError);
  CHECK_THROWS_AS(decode_graph6("Bww"), ParseError);
  CHECK(decode_graph6(">>graph6<<Bw\n") == complete_graph(3));
}
