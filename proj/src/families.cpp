#include "reconkit/families.hpp"

#include <algorithm>

#include "reconkit/errors.hpp"
#include "reconkit/graph_ops.hpp"

namespace reconkit {

CliquePair clique_pair(std::size_t n) {
  if (n < 4) {
    throw InputError("clique_pair needs n >= 4");
  }
  const std::size_t t = n / 2;
  CliquePair out{disjoint_union({complete_graph(t + 1), complete_graph(t - 1)}),
                 copies(complete_graph(t), 2)};
  if (n % 2 == 1) {
    out.g = disjoint_union({out.g, complete_graph(1)});
    out.h = disjoint_union({out.h, complete_graph(1)});
  }
  return out;
}

namespace {

void check_selector_params(std::size_t k, std::size_t n, std::size_t extra) {
  if (k < 2 || n < 1) {
    throw InputError("the selector family needs k >= 2 and n >= 1");
  }
  if (k > 7 || selector_card_order(k, n) + extra > kMaxOrder) {
    throw CapacityError("selector family with k = " + std::to_string(k) + ", n = " +
                        std::to_string(n) + " exceeds " + std::to_string(kMaxOrder) +
                        " vertices");
  }
}

// Subsets of {0..m-1} as bitmasks, ordered by size and then lexicographically by members.
std::vector<Mask> ordered_subsets(std::size_t m) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    out.push_back(s);
  }
  auto members = [](Mask s) {
    std::vector<Vertex> v;
    for_each_bit(s, [&](Vertex x) { v.push_back(x); });
    return v;
  };
  std::sort(out.begin(), out.end(), [&](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) {
      return std::popcount(a) < std::popcount(b);
    }
    return members(a) < members(b);
  });
  return out;
}

// Path x_0..x_n at 0..n, selectors at n+1.., then one clique per i whose vertex j attaches to
// the selectors in groups[i-1][j].
Graph selector_graph(std::size_t n, std::size_t selectors, const std::vector<std::vector<Mask>>& groups) {
  const std::size_t clique = groups.front().size();
  Graph g(n + 1 + selectors + n * clique);
  for (Vertex i = 0; i < n; ++i) {
    g.add_edge(i, i + 1);
  }
  const auto y0 = static_cast<Vertex>(n + 1);
  Vertex z = static_cast<Vertex>(n + 1 + selectors);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vertex first = z;
    for (Mask y : groups[i - 1]) {
      g.add_edge(static_cast<Vertex>(i), z);
      for_each_bit(y, [&](Vertex s) { g.add_edge(z, y0 + s); });
      for (Vertex w = first; w < z; ++w) {
        g.add_edge(w, z);
      }
      ++z;
    }
  }
  return g;
}

}  // namespace

std::size_t selector_card_order(std::size_t k, std::size_t n) {
  return ((std::size_t{1} << (k - 1)) + 1) * n + k;
}

Graph selector_card(std::size_t k, std::size_t n) {
  check_selector_params(k, n, 0);
  const std::vector<std::vector<Mask>> groups(n, ordered_subsets(k - 1));
  Graph g = selector_graph(n, k - 1, groups);
  if (g.order() != selector_card_order(k, n)) {
    throw Error("selector card has the wrong order");
  }
  return g;
}

Deck selector_deck(std::size_t k, std::size_t n) {
  return Deck(DeckKind::vertex, std::vector<Graph>(k, selector_card(k, n)));
}

std::vector<Graph> selector_preimages(std::size_t k, std::size_t n) {
  check_selector_params(k, n, 1);
  std::vector<Mask> odd;
  std::vector<Mask> even;
  for (Mask s : ordered_subsets(k)) {
    (std::popcount(s) % 2 == 1 ? odd : even).push_back(s);
  }
  std::vector<Graph> out;
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
    std::vector<std::vector<Mask>> groups;
    for (std::size_t i = 1; i <= n; ++i) {
      groups.push_back(((b >> (n - i)) & 1) == 0 ? odd : even);
    }
    out.push_back(selector_graph(n, k, groups));
  }
  return out;
}

bool is_clique_union(const Graph& g) {
  for (Mask comp : component_masks(g)) {
    bool complete = true;
    for_each_bit(comp, [&](Vertex v) {
      if ((g.neighbors(v) | bit(v)) != comp) {
        complete = false;
      }
    });
    if (!complete) {
      return false;
    }
  }
  return true;
}

std::size_t shared_card_count(const Deck& a, const Deck& b) {
  std::size_t shared = 0;
  std::size_t j = 0;
  for (const Card& card : a.cards()) {
    while (j < b.size() && b[j].certificate < card.certificate) {
      ++j;
    }
    if (j < b.size() && b[j].certificate == card.certificate) {
      ++shared;
      ++j;
    }
  }
  return shared;
}

}  // namespace reconkit
