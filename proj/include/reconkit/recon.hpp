#ifndef RECONKIT_RECON_HPP
#define RECONKIT_RECON_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "reconkit/deck.hpp"
#include "reconkit/graph.hpp"

namespace reconkit {

inline constexpr std::size_t kMaxReconVertexOrder = 10;
inline constexpr std::size_t kMaxReconEdgeCount = 12;

enum class Quantifier { exists, forall };

std::string_view to_string(Quantifier q);
Quantifier parse_quantifier(std::string_view text);

struct ReconNumber {
  /// nullopt stands for infinity.
  std::optional<std::size_t> value;
  /// exists: an identifying subdeck of size `value`.
  std::optional<Deck> witness;
  /// forall: a non-identifying subdeck of size `value - 1` (only when value >= 2 or infinite).
  std::optional<Deck> counterexample;

  /// Decimal value or "inf".
  [[nodiscard]] std::string str() const;
};

/// Every graph of g's order (and, for edge kind, edge count) whose 1-deck contains s is
/// isomorphic to g. An empty s identifies only when that universe is a single class.
/// Throws InputError if s is not a subdeck of g's 1-deck, CapacityError past the vertex cap.
bool identifies(const Graph& g, const Deck& s, DeckKind kind);

/// Ally-reconstruction numbers with c = 1. Kind vertex or edge.
ReconNumber recon_number(const Graph& g, DeckKind kind, Quantifier q);

enum class ThresholdProblem { exist_vrn, univ_vrn, exist_ern, univ_ern };

std::string_view to_string(ThresholdProblem p);
/// Accepts "EXIST-VRN", "UNIV-VRN", "EXIST-ERN", "UNIV-ERN" in any case, '-' or '_'.
ThresholdProblem parse_threshold_problem(std::string_view text);

/// recon_number <= k, with infinity above every k.
bool threshold(const Graph& g, std::size_t k, ThresholdProblem which);

}  // namespace reconkit

#endif  // RECONKIT_RECON_HPP
