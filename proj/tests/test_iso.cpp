#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "reconkit/enumerate.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/graph6.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"

using namespace reconkit;

namespace {

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph paley(Vertex q) {
  std::set<Vertex> squares;
  for (Vertex x = 1; x < q; ++x) {
    squares.insert(x * x % q);
  }
  Graph g(q);
  for (Vertex u = 0; u < q; ++u) {
    for (Vertex v = u + 1; v < q; ++v) {
      if (squares.count((v - u) % q) != 0) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

// Cayley graph on Z4 x Z4 with the given connection set.
Graph cayley_z4z4(const std::vector<std::pair<int, int>>& gens) {
  Graph g(16);
  for (int a = 0; a < 16; ++a) {
    for (const auto& [dx, dy] : gens) {
      const int b = ((a / 4 + dx + 4) % 4) * 4 + (a % 4 + dy + 4) % 4;
      if (a != b) {
        g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
  }
  return g;
}

Graph rook4() { return cayley_z4z4({{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}}); }
Graph shrikhande() { return cayley_z4z4({{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}}); }

void check_relabel_invariance(const Graph& g, int trials, std::mt19937& rng) {
  const Certificate expected = canonical_labeling(g).certificate;
  for (int t = 0; t < trials; ++t) {
    const Graph h = oracle::permuted(g, oracle::random_permutation(g.order(), rng));
    CHECK(canonical_labeling(h).certificate == expected);
    const auto psi = find_isomorphism(g, h);
    REQUIRE(psi.has_value());
    CHECK(is_isomorphism(g, h, *psi));
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        CHECK(oracle::adjacent(g, u, v) == oracle::adjacent(h, (*psi)[u], (*psi)[v]));
      }
    }
  }
}

}  // namespace

TEST_CASE("certificates of small examples") {
  CHECK(certificate(path_graph(3)) == certificate(Graph(3, {{1, 0}, {0, 2}})));
  CHECK(certificate(complete_graph(3)) != certificate(path_graph(3)));
  CHECK(certificate(line_graph(star_graph(3))) == certificate(complete_graph(3)));
  CHECK(are_isomorphic(complete_graph(3), complete_graph(3)));
  CHECK_FALSE(are_isomorphic(complete_graph(3), star_graph(3)));
  CHECK_FALSE(are_isomorphic(copies(complete_graph(2), 2), path_graph(4)));
  CHECK(certificate(Graph(0)) == certificate(Graph(0)));
}

TEST_CASE("certificates are invariant under 100 random relabelings for every graph up to 6 vertices") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const Certificate expected = canonical_labeling(g).certificate;
      for (int t = 0; t < 100; ++t) {
        const Graph h = oracle::permuted(g, oracle::random_permutation(n, rng));
        CHECK(canonical_labeling(h).certificate == expected);
      }
    }
  }
}

TEST_CASE("isomorphism agrees with brute-force permutation search on 5 vertices") {
  const std::vector<Graph> labeled = oracle::labeled_graphs(5);
  std::mt19937 rng(12);
  std::uniform_int_distribution<std::size_t> pick(0, labeled.size() - 1);
  for (int t = 0; t < 400; ++t) {
    const Graph& a = labeled[pick(rng)];
    const Graph& b = labeled[pick(rng)];
    CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
  const auto& classes = enumerate_graphs(5);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      CHECK(are_isomorphic(classes[i], classes[j]) == (i == j));
    }
  }
}

TEST_CASE("regular and strongly regular graphs") {
  std::mt19937 rng(13);
  for (const Graph& g : {petersen(), paley(13), paley(17), rook4(), shrikhande(),
                         line_graph(complete_graph(6)), complete_graph(12),
                         copies(complete_graph(3), 5), line_graph(petersen())}) {
    check_relabel_invariance(g, 10, rng);
  }
  // Same parameters srg(16,6,2,2), different graphs.
  CHECK(rook4().edge_count() == shrikhande().edge_count());
  CHECK(degree_invariant(rook4()) == degree_invariant(shrikhande()));
  CHECK_FALSE(are_isomorphic(rook4(), shrikhande()));
  CHECK_FALSE(find_isomorphism(rook4(), shrikhande()).has_value());
  // Paley graph over GF(9) = Z3[i], i^2 = -1, is the 3x3 rook's graph.
  std::set<std::pair<int, int>> squares;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != 0 || b != 0) {
        squares.insert({(a * a - b * b + 9) % 3, (2 * a * b) % 3});
      }
    }
  }
  Graph paley9(9);
  for (int u = 0; u < 9; ++u) {
    for (int v = u + 1; v < 9; ++v) {
      if (squares.count({(v / 3 - u / 3 + 3) % 3, (v % 3 - u % 3 + 3) % 3}) != 0) {
        paley9.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  Graph rook3(9);
  for (Vertex a = 0; a < 9; ++a) {
    for (Vertex b = a + 1; b < 9; ++b) {
      if (a / 3 == b / 3 || a % 3 == b % 3) {
        rook3.add_edge(a, b);
      }
    }
  }
  CHECK(paley9.edge_count() == 18);
  CHECK(are_isomorphic(paley9, rook3));
}

TEST_CASE("canonical graph reproduces the class") {
  std::mt19937 rng(14);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(3 + t % 12, 0.4, rng);
    const Certificate c = certificate(g);
    const Graph canon = canonical_graph(c);
    CHECK(are_isomorphic(canon, g));
    CHECK(encode_graph6(canon) == c.bytes());
    CHECK(certificate(canon) == c);
  }
}

TEST_CASE("labelings are permutations placing the graph on its canonical form") {
  std::mt19937 rng(15);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(2 + t % 15, 0.5, rng);
    const CanonicalLabeling l = canonical_labeling(g);
    CHECK(relabel(g, l.position) == canonical_graph(l.certificate));
  }
}

TEST_CASE("witness checks reject non-isomorphisms") {
  const Graph p = path_graph(3);
  CHECK(is_isomorphism(p, p, {0, 1, 2}));
  CHECK(is_isomorphism(p, p, {2, 1, 0}));
  CHECK_FALSE(is_isomorphism(p, p, {1, 0, 2}));
  CHECK_FALSE(is_isomorphism(p, p, {0, 0, 2}));
  CHECK_FALSE(is_isomorphism(p, p, {0, 1}));
}

TEST_CASE("capacity cap") {
  CHECK_NOTHROW(certificate(complete_graph(64)));
  CHECK_NOTHROW(certificate(oracle::random_graph(64, 0.5, *std::make_unique<std::mt19937>(16))));
}

TEST_CASE("concurrent certificate computation matches sequential results") {
  std::mt19937 rng(17);
  std::vector<Graph> graphs;
  for (int t = 0; t < 200; ++t) {
    graphs.push_back(oracle::random_graph(4 + t % 10, 0.5, rng));
  }
  std::vector<Certificate> expected;
  for (const Graph& g : graphs) {
    expected.push_back(canonical_labeling(g).certificate);
  }
  std::vector<std::vector<Certificate>> got(4);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < 4; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t rep = 0; rep < 3; ++rep) {
        got[w].clear();
        for (const Graph& g : graphs) {
          got[w].push_back(certificate(g));
        }
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  for (const auto& g : got) {
    CHECK(g == expected);
  }
}
