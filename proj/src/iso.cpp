#include "reconkit/iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include "reconkit/errors.hpp"
#include "reconkit/graph6.hpp"

namespace reconkit {

namespace {

// Ordered partition of the vertex set; each cell is a mask. Cell order is part of the state.
using Cells = std::vector<Mask>;

bool is_singleton(Mask m) { return m != 0 && (m & (m - 1)) == 0; }

// Refines `cells` to the coarsest equitable partition reachable from the splitters in `queue`.
// Every choice depends only on cell order and neighbour counts, so the result commutes with
// relabeling.
void refine(std::span<const Mask> adj, Cells& cells, std::vector<Mask> queue) {
  const std::size_t n = adj.size();
  std::array<Mask, 65> by_count{};
  std::array<Vertex, 64> members{};
  std::array<unsigned, 64> counts{};
  Cells fragments;
  for (std::size_t head = 0; head < queue.size() && cells.size() < n; ++head) {
    const Mask splitter = queue[head];
    for (std::size_t x = 0; x < cells.size(); ++x) {
      const Mask cell = cells[x];
      if (is_singleton(cell)) {
        continue;
      }
      std::size_t k = 0;
      unsigned lo = 64;
      unsigned hi = 0;
      for_each_bit(cell, [&](Vertex v) {
        const auto c = static_cast<unsigned>(std::popcount(adj[v] & splitter));
        members[k] = v;
        counts[k] = c;
        ++k;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      });
      if (lo == hi) {
        continue;
      }
      for (unsigned c = lo; c <= hi; ++c) {
        by_count[c] = 0;
      }
      for (std::size_t i = 0; i < k; ++i) {
        by_count[counts[i]] |= bit(members[i]);
      }
      fragments.clear();
      for (unsigned c = lo; c <= hi; ++c) {
        if (by_count[c] != 0) {
          fragments.push_back(by_count[c]);
        }
      }
      cells[x] = fragments[0];
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x) + 1, fragments.begin() + 1,
                   fragments.end());
      queue.insert(queue.end(), fragments.begin(), fragments.end());
      x += fragments.size() - 1;
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : adj_(g.rows()), n_(g.order()) {}

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) {
      cells.push_back(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1);
      refine(adj_, cells, {cells.front()});
    }
    std::vector<Vertex> path;
    explore(cells, path);

    Graph canon(n_);
    for (Vertex i = 0; i < n_; ++i) {
      for_each_bit(best_->rows[i], [&](Vertex j) {
        if (i < j) {
          canon.add_edge(i, j);
        }
      });
    }
    return {Certificate(encode_graph6(canon)), best_->position};
  }

 private:
  struct Leaf {
    std::vector<Vertex> path;
    std::vector<Vertex> position;
    std::vector<Mask> rows;
  };

  // Returns the depth at which the search should resume. A value below the current depth means
  // the remaining siblings are images of already explored subtrees under a known automorphism.
  std::size_t explore(const Cells& cells, std::vector<Vertex>& path) {
    const std::size_t depth = path.size();
    std::size_t x = 0;
    while (x < cells.size() && is_singleton(cells[x])) {
      ++x;
    }
    if (x == cells.size()) {
      return visit_leaf(cells, path);
    }
    const Mask target = cells[x];
    std::vector<Vertex> tried;
    std::vector<Vertex> orbit;
    std::size_t generators_seen = static_cast<std::size_t>(-1);
    Mask remaining = target;
    while (remaining != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(remaining));
      remaining &= remaining - 1;
      if (!tried.empty()) {
        if (generators_seen != generators_.size()) {
          orbit = orbits_fixing(path);
          generators_seen = generators_.size();
        }
        const bool equivalent = std::any_of(tried.begin(), tried.end(),
                                            [&](Vertex u) { return orbit[u] == orbit[v]; });
        if (equivalent) {
          continue;
        }
      }
      tried.push_back(v);
      Cells child = cells;
      child[x] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(x) + 1, target & ~bit(v));
      refine(adj_, child, {bit(v)});
      path.push_back(v);
      const std::size_t resume = explore(child, path);
      path.pop_back();
      if (resume < depth) {
        return resume;
      }
    }
    return depth;
  }

  std::size_t visit_leaf(const Cells& cells, const std::vector<Vertex>& path) {
    Leaf leaf;
    leaf.path = path;
    leaf.position.assign(n_, 0);
    std::vector<Vertex> at(n_, 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto v = static_cast<Vertex>(std::countr_zero(cells[i]));
      leaf.position[v] = static_cast<Vertex>(i);
      at[i] = v;
    }
    leaf.rows.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      Mask row = 0;
      for_each_bit(adj_[at[i]], [&](Vertex w) { row |= bit(leaf.position[w]); });
      leaf.rows[i] = row;
    }

    if (!first_) {
      first_ = leaf;
      best_ = std::move(leaf);
      return path.size();
    }
    if (leaf.rows == first_->rows) {
      record_automorphism(*first_, at);
      return common_prefix(path, first_->path);
    }
    if (leaf.rows == best_->rows) {
      record_automorphism(*best_, at);
      return common_prefix(path, best_->path);
    }
    if (leaf.rows < best_->rows) {
      best_ = std::move(leaf);
    }
    return path.size();
  }

  // Equal relabeled graphs give the automorphism stored-leaf -> current-leaf.
  void record_automorphism(const Leaf& stored, const std::vector<Vertex>& at) {
    std::vector<Vertex> gamma(n_);
    for (Vertex v = 0; v < n_; ++v) {
      gamma[v] = at[stored.position[v]];
    }
    generators_.push_back(std::move(gamma));
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) {
      ++i;
    }
    return i;
  }

  // Orbit representatives under the known automorphisms that fix every vertex of `path`.
  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& path) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) {
        continue;
      }
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(gamma[v]);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      parent[v] = find(v);
    }
    return parent;
  }

  std::span<const Mask> adj_;
  std::size_t n_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<Vertex>> generators_;
};

constexpr std::size_t kCacheLimit = 1 << 16;

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCertificateOrder) {
    throw CapacityError("certificate order cap exceeded");
  }
  if (g.order() == 0) {
    return {Certificate(encode_graph6(g)), {}};
  }
  return CanonicalSearch(g).run();
}

Certificate certificate(const Graph& g) {
  thread_local std::unordered_map<Graph, Certificate, GraphHash> cache;
  if (auto it = cache.find(g); it != cache.end()) {
    return it->second;
  }
  Certificate cert = canonical_labeling(g).certificate;
  if (cache.size() >= kCacheLimit) {
    cache.clear();
  }
  cache.emplace(g, cert);
  return cert;
}

Graph canonical_graph(const Certificate& c) { return decode_graph6(c.bytes()); }

std::uint64_t degree_invariant(std::size_t order, std::size_t edge_count,
                               std::span<const std::size_t> degrees) {
  std::array<std::uint8_t, 65> histogram{};
  for (std::size_t d : degrees) {
    ++histogram[d];
  }
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(order);
  mix(edge_count);
  for (std::uint8_t count : histogram) {
    mix(count);
  }
  return h;
}

std::uint64_t degree_invariant(const Graph& g) {
  std::array<std::size_t, 64> degrees{};
  for (Vertex v = 0; v < g.order(); ++v) {
    degrees[v] = g.degree(v);
  }
  return degree_invariant(g.order(), g.edge_count(),
                          std::span<const std::size_t>(degrees.data(), g.order()));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      degree_invariant(g) != degree_invariant(h)) {
    return false;
  }
  return certificate(g) == certificate(h);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      degree_invariant(g) != degree_invariant(h)) {
    return std::nullopt;
  }
  const CanonicalLabeling lg = canonical_labeling(g);
  const CanonicalLabeling lh = canonical_labeling(h);
  if (lg.certificate != lh.certificate) {
    return std::nullopt;
  }
  std::vector<Vertex> at_h(h.order());
  for (Vertex v = 0; v < h.order(); ++v) {
    at_h[lh.position[v]] = v;
  }
  std::vector<Vertex> psi(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    psi[v] = at_h[lg.position[v]];
  }
  return psi;
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (g.order() != h.order() || map.size() != g.order()) {
    return false;
  }
  Mask image = 0;
  for (Vertex v : map) {
    if (v >= h.order()) {
      return false;
    }
    image |= bit(v);
  }
  if (image != h.vertex_mask()) {
    return false;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (((g.neighbors(u) & bit(v)) != 0) != ((h.neighbors(map[u]) & bit(map[v])) != 0)) {
        return false;
      }
    }
  }
  return true;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) {
    throw InputError("permutation size does not match graph order");
  }
  Graph out(g.order());
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[e.u], perm[e.v]);
  }
  return out;
}

}  // namespace reconkit
