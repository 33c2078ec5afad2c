#ifndef RECONKIT_DECIDERS_HPP
#define RECONKIT_DECIDERS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "reconkit/deck.hpp"
#include "reconkit/graph.hpp"

namespace reconkit {

/// pure: the preimage's full deck equals the query; sub: the query is contained in it.
enum class Mode { pure, sub };

std::string_view to_string(Mode mode);
/// Accepts "pure" and "sub"; throws InputError otherwise.
Mode parse_mode(std::string_view text);

/// Vertex-kind search enumerates 2^(c*n' + C(c,2)) edge patterns on the first card.
inline constexpr std::size_t kMaxVertexPatternBits = 24;
/// Edge-kind search enumerates the c-subsets of the first card's non-edges.
inline constexpr std::uint64_t kMaxEdgeCandidates = 1'000'000;

struct PreimageSet {
  Mode mode = Mode::pure;
  /// Pairwise nonisomorphic, in certificate order.
  std::vector<Graph> preimages;
};

/// deck_c(g) equals d. The deck kind (vertex or edge) picks the deletion type.
/// Throws InputError for c = 0, for c larger than |V(g)| or |E(g)|, or for an endvertex deck.
bool deck_check(const Graph& g, const Deck& d, std::size_t c);

/// `cards` is a multisubset of deck_c(g). False (not an error) when there are more cards than
/// deletion sets. Errors as deck_check.
bool subdeck_check(const Graph& g, const Deck& cards, std::size_t c);

/// Every preimage up to isomorphism, found by extending the first card. Throws InputError for an
/// empty deck or, in sub mode, a deck larger than a preimage's full deck; CapacityError when the
/// candidate count exceeds the search caps.
PreimageSet enum_preimages(const Deck& d, std::size_t c, Mode mode);

/// Some preimage of a vertex deck, or nullopt. Sub mode first applies the pairwise two-card test
/// to every pair of card classes and tries glued candidates, so large decks are often decided
/// without the exhaustive search; otherwise behaves like enum_preimages.
std::optional<Graph> find_vertex_preimage(const Deck& d, std::size_t c, Mode mode);
/// Some preimage of an edge deck, or nullopt.
std::optional<Graph> find_edge_preimage(const Deck& d, std::size_t c, Mode mode);

bool legit_vertex(const Deck& d, std::size_t c, Mode mode);
bool legit_edge(const Deck& d, std::size_t c, Mode mode);

/// Deletion sets of equal size s, 1 <= s <= c, with g1 - u1 isomorphic to g2 - u2.
struct DeletionMatch {
  Mask u1 = 0;
  Mask u2 = 0;
};

/// Up to `limit` matches, smallest s first.
std::vector<DeletionMatch> matching_deletions(const Graph& g1, const Graph& g2, std::size_t c,
                                              std::size_t limit);

/// Two cards of equal order are a legitimate c-vertex subdeck exactly when such a match exists.
/// Throws InputError on an order mismatch.
bool two_lvd(const Graph& g1, const Graph& g2, std::size_t c);

/// The graph of order |V(g2)| + c that contains g2 (delete the c new vertices) and g1 (delete
/// u2 and the padding vertices) as c-vertex cards.
Graph glue_preimage(const Graph& g1, const Graph& g2, const DeletionMatch& match, std::size_t c);

}  // namespace reconkit

#endif  // RECONKIT_DECIDERS_HPP
