#ifndef RECONKIT_ISO_HPP
#define RECONKIT_ISO_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reconkit/graph.hpp"

namespace reconkit {

/// Largest order accepted by the canonical labeler.
inline constexpr std::size_t kMaxCertificateOrder = 64;

/// Canonical form of an isomorphism class. Two graphs have equal certificates exactly when they
/// are isomorphic. The bytes are the graph6 encoding of the canonically relabeled graph.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::string bytes) : bytes_(std::move(bytes)) {}

  [[nodiscard]] const std::string& bytes() const noexcept { return bytes_; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend std::strong_ordering operator<=>(const Certificate& a, const Certificate& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::string bytes_;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};

struct CanonicalLabeling {
  Certificate certificate;
  /// position[v] is the canonical index of vertex v.
  std::vector<Vertex> position;
};

/// Exact canonical labeling by individualization-refinement with automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph& g);

/// Memoized per thread; identical to `canonical_labeling(g).certificate`.
Certificate certificate(const Graph& g);

/// Graph rebuilt from a certificate (the canonical representative).
Graph canonical_graph(const Certificate& c);

/// Relabeling-invariant hash of order, edge count and degree histogram. Unequal values prove
/// non-isomorphism; equal values prove nothing.
std::uint64_t degree_invariant(const Graph& g);
/// Same value as degree_invariant of a graph with this order, edge count and degree list; lets
/// callers hash a card without materializing it.
std::uint64_t degree_invariant(std::size_t order, std::size_t edge_count,
                               std::span<const std::size_t> degrees);

bool are_isomorphic(const Graph& g, const Graph& h);

/// A bijection psi with {u,v} in E(g) iff {psi(u),psi(v)} in E(h), or nullopt.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

/// True iff `map` is a bijection V(g) -> V(h) preserving edges and non-edges.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map);

/// Applies a vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace reconkit

#endif  // RECONKIT_ISO_HPP
