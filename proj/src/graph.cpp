#include "reconkit/graph.hpp"

#include <string>

#include "reconkit/errors.hpp"

namespace reconkit {

Graph::Graph(std::size_t order) {
  if (order > kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxOrder));
  }
  adj_.assign(order, 0);
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (!add_edge(e.u, e.v)) {
      throw InputError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
}

Graph::Graph(std::size_t order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    throw InputError("vertex out of range in pair {" + std::to_string(u) + "," + std::to_string(v) +
                     "} for order " + std::to_string(order()));
  }
  if (u == v) {
    throw InputError("self-loop at vertex " + std::to_string(u));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_pair(u, v);
  return (adj_[u] & bit(v)) != 0;
}

Mask Graph::vertex_mask() const noexcept {
  return order() == 64 ? ~Mask{0} : (Mask{1} << order()) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    // Only neighbours above u, so each edge is listed once.
    const Mask above = u + 1 >= 64 ? 0 : adj_[u] & ~((Mask{1} << (u + 1)) - 1);
    for_each_bit(above, [&](Vertex v) { out.push_back({u, v}); });
  }
  return out;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if ((adj_[u] & bit(v)) != 0) {
    return false;
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if ((adj_[u] & bit(v)) == 0) {
    return false;
  }
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
  --edge_count_;
  return true;
}

Vertex Graph::add_vertex() {
  if (order() >= kMaxOrder) {
    throw CapacityError("cannot grow a graph past " + std::to_string(kMaxOrder) + " vertices");
  }
  adj_.push_back(0);
  return static_cast<Vertex>(order() - 1);
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  // FNV-1a over the rows.
  std::uint64_t h = 1469598103934665603ULL ^ g.order();
  for (Mask row : g.rows()) {
    h ^= row;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace reconkit
