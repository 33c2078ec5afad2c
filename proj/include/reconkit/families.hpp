#ifndef RECONKIT_FAMILIES_HPP
#define RECONKIT_FAMILIES_HPP

#include <cstddef>
#include <vector>

#include "reconkit/deck.hpp"
#include "reconkit/graph.hpp"

namespace reconkit {

/// (G_n, H_n): (K_{t+1} + K_{t-1}, 2K_t) for n = 2t, each with an extra K1 for n = 2t + 1.
/// G_n has a smaller exists-number than forall-number. Throws InputError for n < 4.
struct CliquePair {
  Graph g;
  Graph h;
};
CliquePair clique_pair(std::size_t n);

/// (2^(k-1) + 1) n + k.
std::size_t selector_card_order(std::size_t k, std::size_t n);

/// The shared card: path x_0..x_n, selectors y_1..y_{k-1}, and for each i = 1..n a clique on
/// z_{i,Y} (Y ranging over subsets of the selectors in (size, lexicographic) order) with x_i
/// joined to the whole clique and z_{i,Y} joined to every selector in Y. Vertices are numbered
/// in that order. Throws InputError for k < 2 or n < 1, CapacityError past 64 vertices.
Graph selector_card(std::size_t k, std::size_t n);

/// k copies of selector_card(k, n), as a vertex deck.
Deck selector_deck(std::size_t k, std::size_t n);

/// 2^n pairwise nonisomorphic graphs, each containing selector_deck(k, n) in its 1-deck. Graph
/// b uses k selectors; clique i attaches to the odd subsets of {y_1..y_k} when bit (n - i) of
/// b is 0 and to the even subsets when it is 1.
std::vector<Graph> selector_preimages(std::size_t k, std::size_t n);

/// Every connected component is complete.
bool is_clique_union(const Graph& g);

/// Size of the multiset intersection of two decks up to isomorphism.
std::size_t shared_card_count(const Deck& a, const Deck& b);

}  // namespace reconkit

#endif  // RECONKIT_FAMILIES_HPP
