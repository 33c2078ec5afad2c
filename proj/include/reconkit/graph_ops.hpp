#ifndef RECONKIT_GRAPH_OPS_HPP
#define RECONKIT_GRAPH_OPS_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "reconkit/graph.hpp"

namespace reconkit {

enum class BasicKind { complete, path, empty };
enum class CombineKind { disjoint_union, join };

Graph make_basic(BasicKind kind, std::size_t n);
inline Graph complete_graph(std::size_t n) { return make_basic(BasicKind::complete, n); }
inline Graph path_graph(std::size_t n) { return make_basic(BasicKind::path, n); }
inline Graph empty_graph(std::size_t n) { return make_basic(BasicKind::empty, n); }
/// K_{1,leaves}; vertex 0 is the center.
Graph star_graph(std::size_t leaves);

/// Parts are laid out consecutively in argument order. Throws InputError on an empty list.
Graph combine(CombineKind kind, std::span<const Graph> parts);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);
Graph join(std::span<const Graph> parts);
Graph join(std::initializer_list<Graph> parts);
/// m disjoint copies of g (m = 0 gives the empty graph on zero vertices).
Graph copies(const Graph& g, std::size_t m);

Graph complement(const Graph& g);

/// One vertex per edge of g, in lexicographic edge order; adjacent iff the edges share exactly one
/// endpoint.
Graph line_graph(const Graph& g);

/// Removes the vertices and compacts the survivors keeping their relative order.
Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices);
Graph delete_vertex_mask(const Graph& g, Mask removed);
/// Removes exactly the listed edges; every vertex stays.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);

/// Subgraph induced by `keep`, compacted in increasing vertex order.
Graph induced_subgraph(const Graph& g, Mask keep);

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

struct GraphMetrics {
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  std::size_t edge_connectivity = 0;
  bool is_connected = false;
  std::vector<std::vector<Vertex>> components;
};

GraphMetrics metrics(const Graph& g);

/// Components in order of their smallest vertex.
std::vector<Mask> component_masks(const Graph& g);
bool is_connected(const Graph& g);
/// Exact minimum edge cut; 0 for disconnected graphs and for graphs with fewer than two vertices.
std::size_t edge_connectivity(const Graph& g);

}  // namespace reconkit

#endif  // RECONKIT_GRAPH_OPS_HPP
