#include "reconkit/deck.hpp"

#include <algorithm>

#include "reconkit/combinatorics.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/graph_ops.hpp"

namespace reconkit {

std::string_view to_string(DeckKind kind) {
  switch (kind) {
    case DeckKind::vertex:
      return "vertex";
    case DeckKind::edge:
      return "edge";
    case DeckKind::endvertex:
      return "endvertex";
  }
  return "vertex";
}

DeckKind parse_deck_kind(std::string_view text) {
  if (text == "vertex") {
    return DeckKind::vertex;
  }
  if (text == "edge") {
    return DeckKind::edge;
  }
  if (text == "endvertex") {
    return DeckKind::endvertex;
  }
  throw InputError("unknown deck kind '" + std::string(text) + "'");
}

Deck::Deck(DeckKind kind, std::vector<Graph> cards) : kind_(kind) {
  cards_.reserve(cards.size());
  for (Graph& g : cards) {
    if (!cards_.empty()) {
      const Graph& first = cards_.front().graph;
      if (g.order() != first.order()) {
        throw InputError("deck cards have different orders (" + std::to_string(first.order()) +
                         " and " + std::to_string(g.order()) + ")");
      }
      if (g.edge_count() != first.edge_count()) {
        uniform_edge_count_ = false;
      }
    }
    Certificate cert = certificate(g);
    cards_.push_back({std::move(g), std::move(cert)});
  }
  std::stable_sort(cards_.begin(), cards_.end(),
                   [](const Card& a, const Card& b) { return a.certificate < b.certificate; });
}

std::size_t Deck::card_order() const noexcept {
  return cards_.empty() ? 0 : cards_.front().graph.order();
}

std::vector<std::pair<Certificate, std::size_t>> Deck::classes() const {
  std::vector<std::pair<Certificate, std::size_t>> out;
  for (const Card& card : cards_) {
    if (!out.empty() && out.back().first == card.certificate) {
      ++out.back().second;
    } else {
      out.emplace_back(card.certificate, 1);
    }
  }
  return out;
}

Deck build_deck(const Graph& g, DeckKind kind, std::size_t c) {
  std::vector<Graph> cards;
  if (kind == DeckKind::vertex) {
    if (c > g.order()) {
      throw InputError("c = " + std::to_string(c) + " exceeds the order " +
                       std::to_string(g.order()));
    }
    cards.reserve(binomial(g.order(), c));
    for_each_combination(g.order(), c, [&](std::span<const std::size_t> idx) {
      Mask removed = 0;
      for (std::size_t i : idx) {
        removed |= bit(static_cast<Vertex>(i));
      }
      cards.push_back(delete_vertex_mask(g, removed));
      return true;
    });
  } else if (kind == DeckKind::edge) {
    const std::vector<Edge> edges = g.edges();
    if (c > edges.size()) {
      throw InputError("c = " + std::to_string(c) + " exceeds the edge count " +
                       std::to_string(edges.size()));
    }
    cards.reserve(binomial(edges.size(), c));
    for_each_combination(edges.size(), c, [&](std::span<const std::size_t> idx) {
      Graph card = g;
      for (std::size_t i : idx) {
        card.remove_edge(edges[i].u, edges[i].v);
      }
      cards.push_back(std::move(card));
      return true;
    });
  } else {
    throw InputError("build_deck takes kind vertex or edge; use endvertex_deck");
  }
  return Deck(kind, std::move(cards));
}

Deck endvertex_deck(const Graph& g) {
  std::vector<Graph> cards;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) {
      cards.push_back(delete_vertex_mask(g, bit(v)));
    }
  }
  return Deck(DeckKind::endvertex, std::move(cards));
}

bool kinds_compatible(DeckKind a, DeckKind b) noexcept {
  return (a == DeckKind::edge) == (b == DeckKind::edge);
}

namespace {

void require_compatible(const Deck& a, const Deck& b) {
  if (!kinds_compatible(a.kind(), b.kind())) {
    throw InputError("cannot compare a " + std::string(to_string(a.kind())) + " deck with a " +
                     std::string(to_string(b.kind())) + " deck");
  }
}

}  // namespace

bool deck_equal(const Deck& a, const Deck& b) {
  require_compatible(a, b);
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].certificate != b[i].certificate) {
      return false;
    }
  }
  return true;
}

bool subdeck_contained(const Deck& small, const Deck& big) {
  require_compatible(small, big);
  if (small.size() > big.size()) {
    return false;
  }
  // Both sides are certificate-sorted: a merge walk matches each small card to a distinct big one.
  std::size_t j = 0;
  for (const Card& card : small.cards()) {
    while (j < big.size() && big[j].certificate < card.certificate) {
      ++j;
    }
    if (j == big.size() || big[j].certificate != card.certificate) {
      return false;
    }
    ++j;
  }
  return true;
}

}  // namespace reconkit
