#ifndef RECONKIT_REDUCTIONS_HPP
#define RECONKIT_REDUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reconkit/deck.hpp"
#include "reconkit/graph.hpp"

namespace reconkit {

enum class ReductionKind { gi_to_lvd, gi_to_led, kedc_to_kvdc, gi_to_kedc, gi_to_klvd, gi_to_kled };

std::string_view to_string(ReductionKind kind);
/// Accepts the names above, with '-' or '_' as separators.
ReductionKind parse_reduction_kind(std::string_view text);
const std::vector<ReductionKind>& all_reduction_kinds();

/// A graph together with alleged cards (the input of deck and subdeck checking).
struct CheckInstance {
  Graph graph;
  Deck cards;
};

/// Vertex deck: deck_c(g + (c+1)K1) minus one g + K1 card, plus h + K1. A yes-instance of
/// pure legitimacy exactly when g and h are isomorphic.
Deck gi_to_lvd(const Graph& g, const Graph& h, std::size_t c);

/// Edge deck with l = n + 1: deck_c(g + cK2 + Kl) with the card that drops the cK2 edges replaced
/// by h + 2cK1 + Kl.
Deck gi_to_led(const Graph& g, const Graph& h, std::size_t c);

/// H + (K_{n+1} u K1), where n = |V(h)|.
Graph hat_graph(const Graph& h);

/// Line graphs of the hat construction applied to g and to every card of an edge deck. The
/// answer to c-vertex subdeck checking on the output equals c-edge subdeck checking on the input.
CheckInstance kedc_to_kvdc(const Graph& g, const Deck& cards, std::size_t c);

/// <g + cK2, [h + 2cK1] + the first k-1 other cards of deck_c(g + cK2)>, edge kind.
CheckInstance gi_to_kedc(const Graph& g, const Graph& h, std::size_t c, std::size_t k);

/// k-1 copies of Kl + K_{l+2c} + g and one K_{l+c} + K_{l+c} + h, with l = n + k.
Deck gi_to_klvd(const Graph& g, const Graph& h, std::size_t c, std::size_t k);

/// Edge deck with l = n + k: g + (Kl - S_{l,j}) + K_{l+1} for j = 1..k-1 and
/// h + Kl + (K_{l+1} - S_{l+1,1}), where S_{i,j} is the j-th c-subset of K_i's edges.
Deck gi_to_kled(const Graph& g, const Graph& h, std::size_t c, std::size_t k);

/// True when (g, h) satisfies the preconditions of the GI gadget `kind`.
bool admissible_pair(ReductionKind kind, const Graph& g, const Graph& h, std::size_t c,
                     std::size_t k);

/// Decides the target instance of a GI gadget with the deciders.
bool decide_gi_gadget(ReductionKind kind, const Graph& g, const Graph& h, std::size_t c,
                      std::size_t k);

struct ReductionViolation {
  std::string g;
  std::string h;
  bool expected = false;
  bool actual = false;
  std::string detail;
};

struct ReductionReport {
  ReductionKind kind = ReductionKind::gi_to_lvd;
  std::size_t c = 1;
  std::size_t k = 2;
  std::size_t n_min = 3;
  std::size_t n_max = 3;
  std::size_t instances = 0;
  std::vector<ReductionViolation> violations;

  [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// Largest order the sweeps accept.
inline constexpr std::size_t kMaxSweepOrder = 5;

/// For the GI gadgets: every ordered pair of connected graphs of equal order in [n_min, n_max]
/// meeting the preconditions, comparing the target decision with isomorphism. For kedc_to_kvdc:
/// every graph of order in [n_min, n_max] with every k-multiset of same-shape alleged cards,
/// comparing both subdeck checks. Errors raised while deciding an instance are recorded as
/// violations. Throws CapacityError for n_max above kMaxSweepOrder.
ReductionReport verify_reduction(ReductionKind kind, std::size_t n_max, std::size_t c,
                                 std::size_t k, std::optional<std::size_t> n_min = std::nullopt);

}  // namespace reconkit

#endif  // RECONKIT_REDUCTIONS_HPP
