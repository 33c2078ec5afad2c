#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "reconkit/deciders.hpp"
#include "reconkit/deck.hpp"
#include "reconkit/enumerate.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/graph6.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"
#include "reconkit/parallel.hpp"

using namespace reconkit;

namespace {

const Graph k1 = complete_graph(1);
const Graph k2 = complete_graph(2);
const Graph k3 = complete_graph(3);
const Graph e2 = empty_graph(2);
const Graph e3 = empty_graph(3);
const Graph p3 = path_graph(3);
const Graph k2k1 = disjoint_union({k2, k1});

Deck vdeck(std::vector<Graph> cards) { return Deck(DeckKind::vertex, std::move(cards)); }
Deck edeck(std::vector<Graph> cards) { return Deck(DeckKind::edge, std::move(cards)); }

// Preimages by scanning every graph of the preimage order.
std::vector<Certificate> scan_preimages(const Deck& d, std::size_t c, Mode mode) {
  const std::size_t n = d.kind() == DeckKind::edge ? d.card_order() : d.card_order() + c;
  std::vector<Certificate> out;
  for (const Graph& h : enumerate_graphs(n)) {
    if (d.kind() == DeckKind::edge &&
        h.edge_count() != d[0].graph.edge_count() + c) {
      continue;
    }
    if (d.kind() == DeckKind::edge && h.edge_count() < c) {
      continue;
    }
    const Deck full = build_deck(h, d.kind(), c);
    const bool ok = mode == Mode::pure ? deck_equal(full, d)
                                       : d.size() <= full.size() && subdeck_contained(d, full);
    if (ok) {
      out.push_back(certificate(h));
    }
  }
  return out;
}

std::vector<Certificate> certs_of(const PreimageSet& s) {
  std::vector<Certificate> out;
  for (const Graph& g : s.preimages) {
    out.push_back(certificate(g));
  }
  return out;
}

// Pure edge legitimacy by adding c = 1 edge to every card and checking the full deck.
bool legit_edge_all_cards(const Deck& d) {
  if (!d.uniform_edge_count()) {
    return false;
  }
  for (const Card& card : d.cards()) {
    for (const Edge& e : complement(card.graph).edges()) {
      Graph h = card.graph;
      h.add_edge(e.u, e.v);
      if (deck_equal(build_deck(h, DeckKind::edge, 1), d)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("deck checking examples") {
  CHECK(deck_check(k3, vdeck({k2, k2, k2}), 1));
  CHECK_FALSE(deck_check(p3, vdeck({k2, k2, k2}), 1));
  CHECK(deck_check(k3, edeck({p3, p3, p3}), 1));
  CHECK_THROWS_AS(deck_check(k3, vdeck({k2}), 0), InputError);
  CHECK_THROWS_AS(deck_check(k3, vdeck({k1}), 4), InputError);
  CHECK_THROWS_AS(deck_check(p3, endvertex_deck(p3), 1), InputError);
}

TEST_CASE("subdeck checking examples") {
  CHECK(subdeck_check(path_graph(4), vdeck({p3, k2k1}), 1));
  CHECK_FALSE(subdeck_check(complete_graph(4), vdeck({p3}), 1));
  CHECK(subdeck_check(k3, edeck({p3, p3}), 1));
  CHECK_FALSE(subdeck_check(k3, vdeck({k2, k2, k2, k2}), 1));
}

TEST_CASE("every graph's own deck checks out") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (std::size_t c : {1, 2}) {
        if (c <= n) {
          CHECK(deck_check(g, build_deck(g, DeckKind::vertex, c), c));
        }
        if (c <= g.edge_count()) {
          CHECK(deck_check(g, build_deck(g, DeckKind::edge, c), c));
        }
      }
    }
  }
}

TEST_CASE("subdeck checking matches explicit containment on random card subsets") {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    const std::size_t c = 1 + t % 2;
    const Graph other = oracle::random_graph(6, 0.5, rng);
    const Deck own = build_deck(g, DeckKind::vertex, c);
    const Deck foreign = build_deck(other, DeckKind::vertex, c);
    std::vector<Graph> cards{own[t % own.size()].graph, foreign[t % foreign.size()].graph};
    const Deck d = vdeck(cards);
    CHECK(subdeck_check(g, d, c) == subdeck_contained(d, own));
  }
}

TEST_CASE("preimage examples") {
  auto certs = [](std::vector<Graph> gs) {
    std::vector<Certificate> out;
    for (const Graph& g : gs) {
      out.push_back(certificate(g));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(certs_of(enum_preimages(vdeck({k2, k2, e2}), 1, Mode::pure)) == certs({p3}));
  CHECK(certs_of(enum_preimages(vdeck({k3, k3, k3, k3}), 1, Mode::pure)) ==
        certs({complete_graph(4)}));
  CHECK(enum_preimages(vdeck({k3, k3, k3, e3}), 1, Mode::pure).preimages.empty());
  CHECK(legit_vertex(vdeck({k2, k2, k2}), 1, Mode::pure));
  CHECK(legit_vertex(vdeck({k2, e2, e2}), 1, Mode::pure));
  CHECK_FALSE(legit_vertex(vdeck({k3, e3}), 1, Mode::sub));
  CHECK(legit_edge(edeck({p3, p3, p3}), 1, Mode::pure));
  const Graph k2e2 = disjoint_union({k2, empty_graph(2)});
  CHECK(legit_edge(edeck({k2e2, k2e2}), 1, Mode::sub));
  CHECK(certs_of(enum_preimages(edeck({k2e2, k2e2}), 1, Mode::sub)) ==
        certs({copies(k2, 2), disjoint_union({p3, k1})}));
  CHECK_FALSE(legit_edge(edeck({p3, k2k1}), 1, Mode::pure));
  CHECK_FALSE(legit_edge(edeck({k3, k3}), 1, Mode::sub));
  CHECK_THROWS_AS(enum_preimages(vdeck({}), 1, Mode::pure), InputError);
  CHECK_THROWS_AS(enum_preimages(vdeck({k2, k2, k2, k2}), 1, Mode::sub), InputError);
  CHECK_THROWS_AS(legit_edge(vdeck({k2}), 1, Mode::pure), InputError);
}

TEST_CASE("search caps raise capacity errors") {
  CHECK_THROWS_AS(enum_preimages(vdeck({empty_graph(25)}), 1, Mode::sub), CapacityError);
  CHECK_THROWS_AS(enum_preimages(vdeck({empty_graph(12)}), 2, Mode::sub), CapacityError);
  CHECK_NOTHROW(enum_preimages(vdeck({empty_graph(6)}), 2, Mode::sub));
  CHECK_THROWS_AS(enum_preimages(edeck({empty_graph(20)}), 3, Mode::sub), CapacityError);
}

TEST_CASE("pure vertex preimages of every deck of 4- and 5-vertex graphs match a full scan") {
  for (std::size_t n : {4, 5}) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (std::size_t c : {1, 2}) {
        const Deck d = build_deck(g, DeckKind::vertex, c);
        const PreimageSet s = enum_preimages(d, c, Mode::pure);
        CHECK(certs_of(s) == scan_preimages(d, c, Mode::pure));
      }
    }
  }
}

TEST_CASE("pure vertex preimages of perturbed decks match a full scan") {
  std::mt19937 rng(32);
  const auto& cards3 = enumerate_graphs(3);
  for (const Graph& g : enumerate_graphs(4)) {
    std::vector<Graph> cards;
    const Deck own = build_deck(g, DeckKind::vertex, 1);
    for (const Card& c : own.cards()) {
      cards.push_back(c.graph);
    }
    cards[rng() % cards.size()] = cards3[rng() % cards3.size()];
    const Deck d = vdeck(cards);
    CHECK(certs_of(enum_preimages(d, 1, Mode::pure)) == scan_preimages(d, 1, Mode::pure));
    CHECK(legit_vertex(d, 1, Mode::pure) == !scan_preimages(d, 1, Mode::pure).empty());
  }
}

TEST_CASE("sub-mode vertex and edge preimages of random card multisets match a full scan") {
  std::mt19937 rng(33);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 3 + t % 3;
    const auto& pool = enumerate_graphs(n);
    const std::size_t k = 1 + t % 3;
    std::vector<Graph> cards;
    for (std::size_t i = 0; i < k; ++i) {
      cards.push_back(pool[rng() % pool.size()]);
    }
    const Deck d = vdeck(cards);
    CHECK(certs_of(enum_preimages(d, 1, Mode::sub)) == scan_preimages(d, 1, Mode::sub));
    CHECK(legit_vertex(d, 1, Mode::sub) == !scan_preimages(d, 1, Mode::sub).empty());

    // Edge cards need a common edge count.
    std::vector<Graph> same;
    const std::size_t m = cards[0].edge_count();
    for (const Graph& g : pool) {
      if (g.edge_count() == m) {
        same.push_back(g);
      }
    }
    std::vector<Graph> ecards;
    for (std::size_t i = 0; i < k; ++i) {
      ecards.push_back(same[rng() % same.size()]);
    }
    const Deck ed = edeck(ecards);
    const auto expected = scan_preimages(ed, 1, Mode::sub);
    // A preimage with m + 1 edges has m + 1 cards; larger subdecks are input errors.
    if (k > m + 1) {
      CHECK_THROWS_AS(enum_preimages(ed, 1, Mode::sub), InputError);
      CHECK(expected.empty());
    } else {
      CHECK(certs_of(enum_preimages(ed, 1, Mode::sub)) == expected);
      CHECK(legit_edge(ed, 1, Mode::sub) == !expected.empty());
    }
  }
}

TEST_CASE("edge preimages with c = 2 match a full scan") {
  for (const Graph& g : enumerate_graphs(5)) {
    if (g.edge_count() < 2 || g.edge_count() > 7) {
      continue;
    }
    const Deck d = build_deck(g, DeckKind::edge, 2);
    CHECK(certs_of(enum_preimages(d, 2, Mode::pure)) == scan_preimages(d, 2, Mode::pure));
  }
}

TEST_CASE("pure edge legitimacy agrees with extending every card") {
  std::mt19937 rng(34);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto& pool = enumerate_graphs(n);
    for (const Graph& g : pool) {
      if (g.edge_count() == 0) {
        continue;
      }
      const Deck d = build_deck(g, DeckKind::edge, 1);
      CHECK(legit_edge(d, 1, Mode::pure) == legit_edge_all_cards(d));
      CHECK(legit_edge(d, 1, Mode::pure));
      // Swap one card for another graph with the same edge count.
      std::vector<Graph> cards;
      for (const Card& c : d.cards()) {
        cards.push_back(c.graph);
      }
      std::vector<Graph> same;
      for (const Graph& h : pool) {
        if (h.edge_count() == g.edge_count() - 1) {
          same.push_back(h);
        }
      }
      cards[rng() % cards.size()] = same[rng() % same.size()];
      const Deck perturbed = edeck(cards);
      CHECK(legit_edge(perturbed, 1, Mode::pure) == legit_edge_all_cards(perturbed));
    }
  }
}

TEST_CASE("pure acceptance implies sub acceptance") {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const Deck vd = build_deck(g, DeckKind::vertex, 1);
      if (legit_vertex(vd, 1, Mode::pure)) {
        CHECK(legit_vertex(vd, 1, Mode::sub));
      }
      if (g.edge_count() > 0) {
        const Deck ed = build_deck(g, DeckKind::edge, 1);
        if (legit_edge(ed, 1, Mode::pure)) {
          CHECK(legit_edge(ed, 1, Mode::sub));
        }
      }
    }
  }
}

TEST_CASE("returned preimages recheck from scratch, are distinct and certificate sorted") {
  std::mt19937 rng(35);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_graph(4 + t % 2, 0.5, rng);
    const std::size_t c = 1 + t % 2;
    const Deck full = build_deck(g, DeckKind::vertex, c);
    const Deck sub = vdeck({full[0].graph, full[full.size() - 1].graph});
    for (const auto& [d, mode] : {std::pair{full, Mode::pure}, std::pair{sub, Mode::sub}}) {
      const PreimageSet s = enum_preimages(d, c, mode);
      CHECK(s.mode == mode);
      const auto certs = certs_of(s);
      CHECK(std::adjacent_find(certs.begin(), certs.end(),
                               [](const auto& a, const auto& b) { return !(a < b); }) ==
            certs.end());
      for (const Graph& h : s.preimages) {
        CHECK((mode == Mode::pure ? deck_check(h, d, c) : subdeck_check(h, d, c)));
      }
      const auto found = find_vertex_preimage(d, c, mode);
      CHECK(found.has_value() == !s.preimages.empty());
      if (found) {
        CHECK((mode == Mode::pure ? deck_check(*found, d, c) : subdeck_check(*found, d, c)));
      }
    }
  }
}

TEST_CASE("two-card legitimacy examples") {
  CHECK(two_lvd(k2, e2, 1));
  CHECK_FALSE(two_lvd(k3, e3, 1));
  CHECK(two_lvd(k3, e3, 2));
  CHECK_THROWS_AS(two_lvd(k3, k2, 1), InputError);
}

TEST_CASE("two-card legitimacy agrees with the exhaustive search up to order 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto& gs = enumerate_graphs(n);
    for (const Graph& a : gs) {
      for (const Graph& b : gs) {
        for (std::size_t c : {1, 2}) {
          const Deck d = vdeck({a, b});
          const bool exhaustive = !enum_preimages(d, c, Mode::sub).preimages.empty();
          CHECK(two_lvd(a, b, c) == exhaustive);
          CHECK(legit_vertex(d, c, Mode::sub) == exhaustive);
        }
      }
    }
  }
}

TEST_CASE("glued preimages contain both cards") {
  std::mt19937 rng(36);
  for (int t = 0; t < 100; ++t) {
    const std::size_t c = 1 + t % 3;
    const Graph a = oracle::random_graph(5, 0.5, rng);
    const Graph b = oracle::random_graph(5, 0.5, rng);
    for (const DeletionMatch& m : matching_deletions(a, b, c, 8)) {
      CHECK(std::popcount(m.u1) == std::popcount(m.u2));
      const Graph h = glue_preimage(a, b, m, c);
      CHECK(h.order() == 5 + c);
      CHECK(subdeck_check(h, vdeck({a, b}), c));
    }
  }
}

TEST_CASE("preimage search is deterministic across worker counts") {
  const Deck d = build_deck(oracle::permuted(path_graph(6), {3, 1, 4, 0, 5, 2}), DeckKind::vertex, 1);
  const Deck sub = vdeck({d[0].graph, d[3].graph});
  setenv("RECONKIT_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  const auto one = certs_of(enum_preimages(sub, 2, Mode::sub));
  setenv("RECONKIT_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  const auto three = certs_of(enum_preimages(sub, 2, Mode::sub));
  unsetenv("RECONKIT_THREADS");
  CHECK(one == three);
  CHECK_FALSE(one.empty());
}

TEST_CASE("parallel_for visits every index once and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) {
                      throw InputError("boom");
                    }
                  }),
                  InputError);
}
