#include "reconkit/enumerate.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>

#include "reconkit/errors.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"

namespace reconkit {

namespace {

// Every graph on n vertices is some (n-1)-vertex class plus a vertex with some neighbourhood,
// so extending each class by every neighbour subset reaches every class on n vertices.
std::vector<Graph> extend_classes(const std::vector<Graph>& smaller, std::size_t n) {
  std::map<Certificate, Graph> seen;
  const Mask subsets = Mask{1} << (n - 1);
  for (const Graph& base : smaller) {
    for (Mask nbrs = 0; nbrs < subsets; ++nbrs) {
      Graph g = base;
      const Vertex v = g.add_vertex();
      for_each_bit(nbrs, [&](Vertex u) { g.add_edge(u, v); });
      Certificate cert = canonical_labeling(g).certificate;
      if (!seen.contains(cert)) {
        seen.emplace(cert, canonical_graph(cert));
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [cert, g] : seen) {
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw CapacityError("enumerate_graphs supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  static std::mutex mutex;
  static std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> table;
  static std::size_t ready = 0;
  std::lock_guard lock(mutex);
  if (ready == 0) {
    table[0] = {Graph(0)};
    ready = 1;
  }
  while (ready <= n) {
    table[ready] = extend_classes(table[ready - 1], ready);
    ++ready;
  }
  return table[n];
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_graphs(n)) {
    if (is_connected(g)) {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace reconkit
