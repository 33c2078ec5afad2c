#ifndef RECONKIT_DECK_HPP
#define RECONKIT_DECK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/iso.hpp"

namespace reconkit {

/// Endvertex decks hold vertex-deleted cards, so they compare with vertex decks.
enum class DeckKind { vertex, edge, endvertex };

std::string_view to_string(DeckKind kind);
/// Accepts "vertex", "edge" and "endvertex"; throws InputError otherwise.
DeckKind parse_deck_kind(std::string_view text);

struct Card {
  Graph graph;
  Certificate certificate;
};

/// Multiset of cards kept in certificate order. Cards sharing a certificate stay in insertion
/// order, so a deck built twice from the same input is identical.
///
/// All cards share one order. Edge decks may mix edge counts: the edge gadgets produce such
/// decks for inputs with different edge counts, and no graph has them as (part of) a deck.
class Deck {
 public:
  Deck() = default;
  explicit Deck(DeckKind kind) : kind_(kind) {}
  /// Throws InputError if the cards differ in order.
  Deck(DeckKind kind, std::vector<Graph> cards);

  [[nodiscard]] DeckKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t size() const noexcept { return cards_.size(); }
  [[nodiscard]] bool empty() const noexcept { return cards_.empty(); }
  [[nodiscard]] const std::vector<Card>& cards() const noexcept { return cards_; }
  [[nodiscard]] const Card& operator[](std::size_t i) const { return cards_[i]; }

  /// Order shared by every card; 0 for an empty deck.
  [[nodiscard]] std::size_t card_order() const noexcept;

  /// False for an edge deck whose cards differ in edge count.
  [[nodiscard]] bool uniform_edge_count() const noexcept { return uniform_edge_count_; }

  /// Distinct certificates with their multiplicities, in certificate order.
  [[nodiscard]] std::vector<std::pair<Certificate, std::size_t>> classes() const;

 private:
  DeckKind kind_ = DeckKind::vertex;
  std::vector<Card> cards_;
  bool uniform_edge_count_ = true;
};

/// One card per c-subset of vertices (kind vertex) or edges (kind edge). Throws InputError if c
/// exceeds the number of vertices or edges, or for kind endvertex.
Deck build_deck(const Graph& g, DeckKind kind, std::size_t c);

/// Cards g - v for every vertex of degree 1.
Deck endvertex_deck(const Graph& g);

/// Equivalence up to isomorphism. Throws InputError on incompatible kinds.
bool deck_equal(const Deck& a, const Deck& b);

/// Multiset containment up to isomorphism. Throws InputError on incompatible kinds.
bool subdeck_contained(const Deck& small, const Deck& big);

/// True when decks of these kinds may be compared.
bool kinds_compatible(DeckKind a, DeckKind b) noexcept;

}  // namespace reconkit

#endif  // RECONKIT_DECK_HPP
