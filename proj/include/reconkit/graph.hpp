#ifndef RECONKIT_GRAPH_HPP
#define RECONKIT_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace reconkit {

using Vertex = unsigned;
using Mask = std::uint64_t;

/// Graphs are stored as one 64-bit adjacency row per vertex.
inline constexpr std::size_t kMaxOrder = 64;

inline constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

/// Calls `f(v)` for every set bit of `m`, lowest first.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// Undirected edge, always stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes the endpoint order. Self-loops are rejected by Graph, not here.
constexpr Edge make_edge(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges);

  [[nodiscard]] std::size_t order() const noexcept { return adj_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  [[nodiscard]] Mask neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return std::popcount(adj_[v]); }
  [[nodiscard]] std::span<const Mask> rows() const noexcept { return adj_; }
  [[nodiscard]] Mask vertex_mask() const noexcept;

  /// Edges in lexicographic (u, v) order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  /// Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);
  /// Appends an isolated vertex and returns its index.
  Vertex add_vertex();

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<Mask> adj_;
  std::size_t edge_count_ = 0;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

}  // namespace reconkit

#endif  // RECONKIT_GRAPH_HPP
