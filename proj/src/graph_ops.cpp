#include "reconkit/graph_ops.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "reconkit/errors.hpp"

namespace reconkit {

Graph make_basic(BasicKind kind, std::size_t n) {
  Graph g(n);
  switch (kind) {
    case BasicKind::complete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          g.add_edge(u, v);
        }
      }
      break;
    case BasicKind::path:
      for (Vertex u = 0; u + 1 < n; ++u) {
        g.add_edge(u, u + 1);
      }
      break;
    case BasicKind::empty:
      break;
  }
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) {
    g.add_edge(0, v);
  }
  return g;
}

Graph combine(CombineKind kind, std::span<const Graph> parts) {
  if (parts.empty()) {
    throw InputError("combine needs at least one part");
  }
  std::size_t total = 0;
  for (const Graph& p : parts) {
    total += p.order();
  }
  Graph out(total);
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (const Graph& p : parts) {
    offsets.push_back(offset);
    for (const Edge& e : p.edges()) {
      out.add_edge(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset));
    }
    offset += p.order();
  }
  if (kind == CombineKind::join) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        for (std::size_t a = 0; a < parts[i].order(); ++a) {
          for (std::size_t b = 0; b < parts[j].order(); ++b) {
            out.add_edge(static_cast<Vertex>(offsets[i] + a), static_cast<Vertex>(offsets[j] + b));
          }
        }
      }
    }
  }
  return out;
}

Graph disjoint_union(std::span<const Graph> parts) { return combine(CombineKind::disjoint_union, parts); }

Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph join(std::span<const Graph> parts) { return combine(CombineKind::join, parts); }

Graph join(std::initializer_list<Graph> parts) {
  return join(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph copies(const Graph& g, std::size_t m) {
  if (m == 0) {
    return Graph(0);
  }
  std::vector<Graph> parts(m, g);
  return disjoint_union(parts);
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if ((g.neighbors(u) & bit(v)) == 0) {
        out.add_edge(u, v);
      }
    }
  }
  return out;
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  if (edges.size() > kMaxOrder) {
    throw CapacityError("line graph would have " + std::to_string(edges.size()) + " vertices");
  }
  Graph out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      // Distinct edges of a simple graph share at most one endpoint.
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, Mask keep) {
  keep &= g.vertex_mask();
  std::vector<Vertex> index(g.order(), 0);
  Vertex next = 0;
  for_each_bit(keep, [&](Vertex v) { index[v] = next++; });
  Graph out(next);
  for_each_bit(keep, [&](Vertex u) {
    for_each_bit(g.neighbors(u) & keep, [&](Vertex v) {
      if (u < v) {
        out.add_edge(index[u], index[v]);
      }
    });
  });
  return out;
}

Graph delete_vertex_mask(const Graph& g, Mask removed) {
  if ((removed & ~g.vertex_mask()) != 0) {
    throw InputError("vertex deletion set contains a vertex outside the graph");
  }
  return induced_subgraph(g, g.vertex_mask() & ~removed);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices) {
  Mask removed = 0;
  for (Vertex v : vertices) {
    if (v >= g.order()) {
      throw InputError("cannot delete vertex " + std::to_string(v) + " from a graph of order " +
                       std::to_string(g.order()));
    }
    removed |= bit(v);
  }
  return delete_vertex_mask(g, removed);
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
  Graph out = g;
  for (const Edge& e : edges) {
    if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !out.remove_edge(e.u, e.v)) {
      throw InputError("cannot delete edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "}: not an edge of the graph");
    }
  }
  return out;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Vertex> out;
  for_each_bit(g.neighbors(v) | bit(v), [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<Mask> component_masks(const Graph& g) {
  std::vector<Mask> out;
  Mask unseen = g.vertex_mask();
  while (unseen != 0) {
    Mask comp = bit(static_cast<Vertex>(std::countr_zero(unseen)));
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return component_masks(g).size() == 1; }

namespace {

// Unit-capacity max flow between s and t on the undirected graph.
std::size_t max_flow(const Graph& g, Vertex s, Vertex t) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    cap[e.u][e.v] = 1;
    cap[e.v][e.u] = 1;
  }
  std::size_t flow = 0;
  std::vector<int> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = static_cast<int>(s);
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty() && parent[t] < 0) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = static_cast<int>(u);
          q.push(v);
        }
      }
    }
    if (parent[t] < 0) {
      return flow;
    }
    for (Vertex v = t; v != s; v = static_cast<Vertex>(parent[v])) {
      const auto u = static_cast<Vertex>(parent[v]);
      --cap[u][v];
      ++cap[v][u];
    }
    ++flow;
  }
}

}  // namespace

std::size_t edge_connectivity(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    return 0;
  }
  // A global minimum cut separates vertex 0 from some other vertex.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex t = 1; t < g.order(); ++t) {
    best = std::min(best, max_flow(g, 0, t));
  }
  return best;
}

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  m.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    m.degrees.push_back(g.degree(v));
  }
  m.min_degree = m.degrees.empty() ? 0 : *std::min_element(m.degrees.begin(), m.degrees.end());
  for (Mask comp : component_masks(g)) {
    std::vector<Vertex> members;
    for_each_bit(comp, [&](Vertex v) { members.push_back(v); });
    m.components.push_back(std::move(members));
  }
  m.is_connected = m.components.size() == 1;
  m.edge_connectivity = edge_connectivity(g);
  return m;
}

}  // namespace reconkit
