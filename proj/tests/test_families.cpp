#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "reconkit/deciders.hpp"
#include "reconkit/deck.hpp"
#include "reconkit/enumerate.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/families.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"

using namespace reconkit;

namespace {

// Every two vertices joined by a path of length two are adjacent: components are cliques.
bool clique_union_oracle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w = 0; w < g.order(); ++w) {
        if (u != w && oracle::adjacent(g, u, v) && oracle::adjacent(g, v, w) &&
            !oracle::adjacent(g, u, w)) {
          return false;
        }
      }
    }
  }
  return true;
}

// Greedy multiset intersection with brute-force isomorphism.
std::size_t shared_oracle(const Deck& a, const Deck& b) {
  std::vector<bool> used(b.size(), false);
  std::size_t shared = 0;
  for (const Card& x : a.cards()) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && oracle::isomorphic(x.graph, b[j].graph)) {
        used[j] = true;
        ++shared;
        break;
      }
    }
  }
  return shared;
}

Graph k(std::size_t n) { return complete_graph(n); }

}  // namespace

TEST_CASE("clique pair examples") {
  const CliquePair p4 = clique_pair(4);
  CHECK(oracle::isomorphic(p4.g, disjoint_union({k(3), k(1)})));
  CHECK(oracle::isomorphic(p4.h, disjoint_union({k(2), k(2)})));
  const CliquePair p5 = clique_pair(5);
  CHECK(oracle::isomorphic(p5.g, disjoint_union({k(3), k(1), k(1)})));
  CHECK(oracle::isomorphic(p5.h, disjoint_union({k(2), k(2), k(1)})));
  const CliquePair p6 = clique_pair(6);
  CHECK(oracle::isomorphic(p6.g, disjoint_union({k(4), k(2)})));
  CHECK(oracle::isomorphic(p6.h, disjoint_union({k(3), k(3)})));
  for (std::size_t n = 4; n <= 12; ++n) {
    const CliquePair p = clique_pair(n);
    CHECK(p.g.order() == n);
    CHECK(p.h.order() == n);
    CHECK(is_clique_union(p.g));
    CHECK(is_clique_union(p.h));
    CHECK_FALSE(are_isomorphic(p.g, p.h));
  }
}

TEST_CASE("clique pair rejects small n") {
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK_THROWS_AS(clique_pair(n), InputError);
  }
}

TEST_CASE("clique pair decks share t + 1 cards") {
  for (std::size_t n = 4; n <= 8; ++n) {
    const CliquePair p = clique_pair(n);
    const Deck dg = build_deck(p.g, DeckKind::vertex, 1);
    const Deck dh = build_deck(p.h, DeckKind::vertex, 1);
    CHECK(shared_card_count(dg, dh) == n / 2 + 1);
    CHECK(shared_card_count(dg, dh) == shared_oracle(dg, dh));
    CHECK(shared_card_count(dh, dg) == shared_card_count(dg, dh));
  }
}

TEST_CASE("shared card count matches the brute-force oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = oracle::random_graph(n, 0.5, rng);
    const Deck da = build_deck(a, DeckKind::vertex, 1);
    const Deck db = build_deck(b, DeckKind::vertex, 1);
    CHECK(shared_card_count(da, db) == shared_oracle(da, db));
    CHECK(shared_card_count(da, da) == da.size());
  }
}

TEST_CASE("is_clique_union examples") {
  CHECK(is_clique_union(Graph(0)));
  CHECK(is_clique_union(empty_graph(5)));
  CHECK(is_clique_union(k(6)));
  CHECK(is_clique_union(disjoint_union({k(3), k(2), k(1)})));
  CHECK_FALSE(is_clique_union(path_graph(3)));
  CHECK_FALSE(is_clique_union(disjoint_union({k(3), path_graph(3)})));
  CHECK_FALSE(is_clique_union(star_graph(3)));
}

TEST_CASE("is_clique_union matches the transitivity oracle on every labeled graph") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::labeled_graphs(n)) {
      CHECK(is_clique_union(g) == clique_union_oracle(g));
    }
  }
}

TEST_CASE("a graph with four clique-union cards is a clique union") {
  for (std::size_t n = 5; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const Deck d = build_deck(g, DeckKind::vertex, 1);
      std::size_t cliques = 0;
      for (const Card& c : d.cards()) {
        cliques += clique_union_oracle(c.graph) ? 1 : 0;
      }
      if (cliques >= 4) {
        CHECK(clique_union_oracle(g));
      }
    }
  }
}

TEST_CASE("selector card order") {
  for (std::size_t kk = 2; kk <= 4; ++kk) {
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(selector_card_order(kk, n) == ((std::size_t{1} << (kk - 1)) + 1) * n + kk);
      CHECK(selector_card(kk, n).order() == selector_card_order(kk, n));
    }
  }
  CHECK(selector_card_order(2, 1) == 5);
  CHECK(selector_card_order(3, 2) == 13);
}

TEST_CASE("selector card layout for k = 2, n = 1") {
  // x_0 x_1 | y_1 | z_{1,{}} z_{1,{y_1}}
  const Graph want(5, {{0, 1}, {1, 3}, {1, 4}, {3, 4}, {2, 4}});
  CHECK(selector_card(2, 1) == want);
}

TEST_CASE("selector preimages for k = 2, n = 1") {
  // x_0 x_1 | y_1 y_2 | clique on the odd subsets {y_1}, {y_2} or the even subsets {}, {y_1, y_2}
  const Graph odd(6, {{0, 1}, {1, 4}, {1, 5}, {4, 5}, {2, 4}, {3, 5}});
  const Graph even(6, {{0, 1}, {1, 4}, {1, 5}, {4, 5}, {2, 5}, {3, 5}});
  const std::vector<Graph> pre = selector_preimages(2, 1);
  REQUIRE(pre.size() == 2);
  CHECK(pre[0] == odd);
  CHECK(pre[1] == even);
  CHECK_FALSE(oracle::isomorphic(odd, even));
  const Graph card = selector_card(2, 1);
  for (const Graph& h : pre) {
    for (Vertex y : {Vertex{2}, Vertex{3}}) {
      const std::vector<Vertex> drop{y};
      CHECK(oracle::isomorphic(delete_vertices(h, drop), card));
    }
  }
}

TEST_CASE("selector preimages are distinct and contain the selector deck") {
  for (auto [kk, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    const Deck d = selector_deck(kk, n);
    CHECK(d.size() == kk);
    CHECK(d.classes().size() == 1);
    const std::vector<Graph> pre = selector_preimages(kk, n);
    CHECK(pre.size() == (std::size_t{1} << n));
    std::set<Certificate> distinct;
    const Certificate card = certificate(selector_card(kk, n));
    for (const Graph& h : pre) {
      distinct.insert(certificate(h));
      CHECK(h.order() == selector_card_order(kk, n) + 1);
      CHECK(subdeck_contained(d, build_deck(h, DeckKind::vertex, 1)));
      // Deleting any selector gives the shared card.
      const auto y0 = static_cast<Vertex>(n + 1);
      for (Vertex y = y0; y < y0 + kk; ++y) {
        const std::vector<Vertex> drop{y};
        CHECK(certificate(delete_vertices(h, drop)) == card);
      }
    }
    CHECK(distinct.size() == pre.size());
  }
}

TEST_CASE("the preimage search finds every selector preimage") {
  const PreimageSet found = enum_preimages(selector_deck(2, 1), 1, Mode::sub);
  std::set<Certificate> all;
  for (const Graph& h : found.preimages) {
    all.insert(certificate(h));
  }
  for (const Graph& h : selector_preimages(2, 1)) {
    CHECK(all.count(certificate(h)) == 1);
  }
}

TEST_CASE("selector family parameter checks") {
  CHECK_THROWS_AS(selector_card(1, 1), InputError);
  CHECK_THROWS_AS(selector_card(2, 0), InputError);
  CHECK_THROWS_AS(selector_preimages(1, 2), InputError);
  CHECK_THROWS_AS(selector_card(8, 1), CapacityError);
  CHECK_THROWS_AS(selector_card(4, 8), CapacityError);
  // 62 card vertices fit, 63 preimage vertices fit; one more path step does not.
  CHECK(selector_card_order(2, 20) == 62);
  CHECK_NOTHROW(selector_card(2, 20));
  CHECK_THROWS_AS(selector_card(2, 21), CapacityError);
}
