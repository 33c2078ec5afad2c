#include "reconkit/deciders.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "reconkit/combinatorics.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"
#include "reconkit/parallel.hpp"

namespace reconkit {

std::string_view to_string(Mode mode) { return mode == Mode::pure ? "pure" : "sub"; }

Mode parse_mode(std::string_view text) {
  if (text == "pure") {
    return Mode::pure;
  }
  if (text == "sub") {
    return Mode::sub;
  }
  throw InputError("unknown mode '" + std::string(text) + "'");
}

namespace {

bool is_edge_kind(const Deck& d) { return d.kind() == DeckKind::edge; }

Mask mask_of(std::span<const std::size_t> idx) {
  Mask m = 0;
  for (std::size_t i : idx) {
    m |= bit(static_cast<Vertex>(i));
  }
  return m;
}

// Calls f(invariant, build) for every c-vertex-deletion set, where `invariant` equals
// degree_invariant of the card and build() materializes it. Stops when f returns false.
template <class F>
bool scan_vertex_cards(const Graph& g, std::size_t c, F&& f) {
  const std::span<const Mask> rows = g.rows();
  const std::size_t n = g.order();
  std::array<std::size_t, 64> degrees{};
  return for_each_combination(n, c, [&](std::span<const std::size_t> idx) {
    const Mask removed = mask_of(idx);
    std::size_t k = 0;
    std::size_t incident = 0;
    std::size_t inner = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto into_removed = static_cast<std::size_t>(std::popcount(rows[v] & removed));
      if ((removed & bit(v)) != 0) {
        incident += static_cast<std::size_t>(std::popcount(rows[v]));
        inner += into_removed;
      } else {
        degrees[k++] = static_cast<std::size_t>(std::popcount(rows[v])) - into_removed;
      }
    }
    const std::size_t edges = g.edge_count() - (incident - inner / 2);
    const std::uint64_t inv =
        degree_invariant(n - c, edges, std::span<const std::size_t>(degrees.data(), k));
    return f(inv, [&] { return delete_vertex_mask(g, removed); });
  });
}

template <class F>
bool scan_edge_cards(const Graph& g, std::size_t c, F&& f) {
  const std::vector<Edge> edges = g.edges();
  const std::size_t n = g.order();
  std::array<std::size_t, 64> base{};
  for (Vertex v = 0; v < n; ++v) {
    base[v] = g.degree(v);
  }
  std::array<std::size_t, 64> degrees{};
  return for_each_combination(edges.size(), c, [&](std::span<const std::size_t> idx) {
    degrees = base;
    for (std::size_t i : idx) {
      --degrees[edges[i].u];
      --degrees[edges[i].v];
    }
    const std::uint64_t inv = degree_invariant(
        n, g.edge_count() - c, std::span<const std::size_t>(degrees.data(), n));
    return f(inv, [&] {
      Graph card = g;
      for (std::size_t i : idx) {
        card.remove_edge(edges[i].u, edges[i].v);
      }
      return card;
    });
  });
}

template <class F>
bool scan_cards(const Graph& g, bool edge_kind, std::size_t c, F&& f) {
  return edge_kind ? scan_edge_cards(g, c, std::forward<F>(f))
                   : scan_vertex_cards(g, c, std::forward<F>(f));
}

// Validates (g, kind, c) and returns the full deck size C(n,c) or C(m,c).
std::uint64_t full_deck_size(const Graph& g, const Deck& d, std::size_t c) {
  if (d.kind() == DeckKind::endvertex) {
    throw InputError("deck checking takes a vertex or edge deck");
  }
  if (c == 0) {
    throw InputError("c must be at least 1");
  }
  if (is_edge_kind(d)) {
    if (c > g.edge_count()) {
      throw InputError("c = " + std::to_string(c) + " exceeds the edge count " +
                       std::to_string(g.edge_count()));
    }
    return binomial(g.edge_count(), c);
  }
  if (c > g.order()) {
    throw InputError("c = " + std::to_string(c) + " exceeds the order " +
                     std::to_string(g.order()));
  }
  return binomial(g.order(), c);
}

bool card_shape_fits(const Graph& g, const Deck& d, std::size_t c) {
  if (d.empty()) {
    return true;
  }
  const Graph& card = d[0].graph;
  if (is_edge_kind(d)) {
    return d.uniform_edge_count() && card.order() == g.order() &&
           card.edge_count() + c == g.edge_count();
  }
  return card.order() + c == g.order();
}

}  // namespace

bool deck_check(const Graph& g, const Deck& d, std::size_t c) {
  const std::uint64_t full = full_deck_size(g, d, c);
  if (d.size() != full || !card_shape_fits(g, d, c)) {
    return false;
  }
  std::vector<std::uint64_t> expected;
  expected.reserve(d.size());
  for (const Card& card : d.cards()) {
    expected.push_back(degree_invariant(card.graph));
  }
  std::vector<std::uint64_t> actual;
  actual.reserve(d.size());
  scan_cards(g, is_edge_kind(d), c, [&](std::uint64_t inv, auto&&) {
    actual.push_back(inv);
    return true;
  });
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) {
    return false;
  }
  return deck_equal(build_deck(g, d.kind(), c), d);
}

bool subdeck_check(const Graph& g, const Deck& cards, std::size_t c) {
  const std::uint64_t full = full_deck_size(g, cards, c);
  if (cards.empty()) {
    return true;
  }
  if (cards.size() > full || !card_shape_fits(g, cards, c)) {
    return false;
  }
  struct Wanted {
    Certificate certificate;
    std::uint64_t invariant;
    std::size_t remaining;
  };
  std::vector<Wanted> wanted;
  {
    std::size_t i = 0;
    for (auto& [cert, count] : cards.classes()) {
      wanted.push_back({cert, degree_invariant(cards[i].graph), count});
      i += count;
    }
  }
  std::size_t outstanding = cards.size();
  std::uint64_t unseen = full;
  scan_cards(g, is_edge_kind(cards), c, [&](std::uint64_t inv, auto&& build) {
    --unseen;
    const bool relevant = std::any_of(wanted.begin(), wanted.end(), [&](const Wanted& w) {
      return w.remaining > 0 && w.invariant == inv;
    });
    if (relevant) {
      const Certificate cert = certificate(build());
      for (Wanted& w : wanted) {
        if (w.remaining > 0 && w.certificate == cert) {
          --w.remaining;
          --outstanding;
          break;
        }
      }
    }
    return outstanding > 0 && unseen >= outstanding;
  });
  return outstanding == 0;
}

namespace {

struct SearchResult {
  std::map<Certificate, Graph> accepted;
};

// Exhaustive extension of the first card. With `first_only`, each worker stops at its first
// acceptance and only the lowest-indexed acceptance is kept.
SearchResult search_vertex_preimages(const Deck& d, std::size_t c, Mode mode, bool first_only) {
  const Graph& seed = d[0].graph;
  const std::size_t base = seed.order();
  const std::size_t n = base + c;
  if (n > kMaxOrder) {
    throw CapacityError("preimage order " + std::to_string(n) + " exceeds the cap");
  }
  const std::uint64_t full = binomial(n, c);
  SearchResult result;
  if (mode == Mode::pure && d.size() != full) {
    return result;
  }
  if (mode == Mode::sub && d.size() > full) {
    throw InputError("subdeck has " + std::to_string(d.size()) + " cards but a preimage has only " +
                     std::to_string(full) + " cards");
  }
  const std::size_t pattern_bits = c * base + c * (c - 1) / 2;
  if (pattern_bits > kMaxVertexPatternBits) {
    throw CapacityError("vertex preimage search needs 2^" + std::to_string(pattern_bits) +
                        " candidates; the cap is 2^" + std::to_string(kMaxVertexPatternBits));
  }

  // Each edge of a pure preimage survives in C(n-2, c) of its cards.
  std::optional<std::size_t> added_edges;
  if (mode == Mode::pure) {
    const std::uint64_t survive = binomial(n >= 2 ? n - 2 : 0, c);
    if (survive > 0) {
      std::uint64_t total = 0;
      for (const Card& card : d.cards()) {
        total += card.graph.edge_count();
      }
      if (total % survive != 0 || total / survive < seed.edge_count()) {
        return result;
      }
      added_edges = static_cast<std::size_t>(total / survive) - seed.edge_count();
    }
  }

  std::vector<std::pair<Vertex, Vertex>> new_pairs;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      new_pairs.emplace_back(static_cast<Vertex>(base + i), static_cast<Vertex>(base + j));
    }
  }

  const std::uint64_t total = std::uint64_t{1} << pattern_bits;
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(worker_count(), total));
  std::vector<std::map<Certificate, Graph>> found(chunks);
  parallel_for(chunks, [&](std::size_t chunk) {
    const std::uint64_t lo = total * chunk / chunks;
    const std::uint64_t hi = total * (chunk + 1) / chunks;
    std::unordered_set<Certificate, CertificateHash> seen;
    for (std::uint64_t p = lo; p < hi; ++p) {
      if (added_edges && static_cast<std::size_t>(std::popcount(p)) != *added_edges) {
        continue;
      }
      Graph cand = seed;
      for (std::size_t i = 0; i < c; ++i) {
        cand.add_vertex();
      }
      std::uint64_t bits = p;
      for (std::size_t i = 0; i < c; ++i) {
        const Mask nbrs = base == 0 ? 0 : bits & ((Mask{1} << base) - 1);
        bits = base >= 64 ? 0 : bits >> base;
        for_each_bit(nbrs, [&](Vertex u) { cand.add_edge(u, static_cast<Vertex>(base + i)); });
      }
      for (const auto& [u, v] : new_pairs) {
        if ((bits & 1) != 0) {
          cand.add_edge(u, v);
        }
        bits >>= 1;
      }
      Certificate cert = canonical_labeling(cand).certificate;
      if (!seen.insert(cert).second) {
        continue;
      }
      const bool ok = mode == Mode::pure ? deck_check(cand, d, c) : subdeck_check(cand, d, c);
      if (ok) {
        found[chunk].emplace(std::move(cert), std::move(cand));
        if (first_only) {
          return;
        }
      }
    }
  });
  for (auto& part : found) {
    if (first_only && !part.empty()) {
      result.accepted = std::move(part);
      return result;
    }
    result.accepted.merge(part);
  }
  return result;
}

SearchResult search_edge_preimages(const Deck& d, std::size_t c, Mode mode, bool first_only) {
  const Graph& seed = d[0].graph;
  const std::size_t m = seed.edge_count() + c;
  const std::uint64_t full = binomial(m, c);
  SearchResult result;
  if (mode == Mode::sub && d.size() > full) {
    throw InputError("subdeck has " + std::to_string(d.size()) + " cards but a preimage has only " +
                     std::to_string(full) + " cards");
  }
  if ((mode == Mode::pure && d.size() != full) || !d.uniform_edge_count()) {
    return result;
  }
  const std::vector<Edge> non_edges = complement(seed).edges();
  const std::uint64_t candidates = binomial(non_edges.size(), c);
  if (candidates > kMaxEdgeCandidates) {
    throw CapacityError("edge preimage search needs " + std::to_string(candidates) +
                        " candidates; the cap is " + std::to_string(kMaxEdgeCandidates));
  }
  // Materialize the index subsets so workers can split them.
  std::vector<std::vector<std::size_t>> subsets;
  subsets.reserve(candidates);
  for_each_combination(non_edges.size(), c, [&](std::span<const std::size_t> idx) {
    subsets.emplace_back(idx.begin(), idx.end());
    return true;
  });
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), subsets.size()));
  std::vector<std::map<Certificate, Graph>> found(chunks);
  parallel_for(chunks, [&](std::size_t chunk) {
    const std::size_t lo = subsets.size() * chunk / chunks;
    const std::size_t hi = subsets.size() * (chunk + 1) / chunks;
    std::unordered_set<Certificate, CertificateHash> seen;
    for (std::size_t s = lo; s < hi; ++s) {
      Graph cand = seed;
      for (std::size_t i : subsets[s]) {
        cand.add_edge(non_edges[i].u, non_edges[i].v);
      }
      Certificate cert = canonical_labeling(cand).certificate;
      if (!seen.insert(cert).second) {
        continue;
      }
      const bool ok = mode == Mode::pure ? deck_check(cand, d, c) : subdeck_check(cand, d, c);
      if (ok) {
        found[chunk].emplace(std::move(cert), std::move(cand));
        if (first_only) {
          return;
        }
      }
    }
  });
  for (auto& part : found) {
    if (first_only && !part.empty()) {
      result.accepted = std::move(part);
      return result;
    }
    result.accepted.merge(part);
  }
  return result;
}

void validate_search(const Deck& d, std::size_t c) {
  if (d.empty()) {
    throw InputError("preimage search needs a nonempty deck");
  }
  if (c == 0) {
    throw InputError("c must be at least 1");
  }
}

SearchResult search_preimages(const Deck& d, std::size_t c, Mode mode, bool first_only) {
  validate_search(d, c);
  return is_edge_kind(d) ? search_edge_preimages(d, c, mode, first_only)
                         : search_vertex_preimages(d, c, mode, first_only);
}

std::optional<Graph> first_of(SearchResult&& r) {
  if (r.accepted.empty()) {
    return std::nullopt;
  }
  return std::move(r.accepted.begin()->second);
}

// Representatives of the deck's card classes, in certificate order.
std::vector<const Graph*> class_representatives(const Deck& d) {
  std::vector<const Graph*> reps;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i == 0 || d[i].certificate != d[i - 1].certificate) {
      reps.push_back(&d[i].graph);
    }
  }
  return reps;
}

constexpr std::size_t kGlueMatchLimit = 4096;
constexpr std::size_t kGlueAttemptLimit = 256;

// Subdeck shortcut: every pair of cards of a preimage passes the two-card test, and any glued
// candidate that passes subdeck_check is a genuine preimage.
enum class Shortcut { rejected, accepted, undecided };

Shortcut vertex_subdeck_shortcut(const Deck& d, std::size_t c, std::optional<Graph>& witness) {
  const std::vector<const Graph*> reps = class_representatives(d);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (!two_lvd(*reps[i], *reps[j], c)) {
        return Shortcut::rejected;
      }
    }
  }
  std::unordered_set<Certificate, CertificateHash> tried;
  std::size_t attempts = 0;
  auto attempt = [&](const Graph& a, const Graph& b) {
    for (const DeletionMatch& match : matching_deletions(a, b, c, kGlueMatchLimit)) {
      Graph cand = glue_preimage(a, b, match, c);
      if (!tried.insert(certificate(cand)).second) {
        continue;
      }
      if (subdeck_check(cand, d, c)) {
        witness = std::move(cand);
        return true;
      }
      if (++attempts >= kGlueAttemptLimit) {
        return false;
      }
    }
    return false;
  };
  for (std::size_t j = 0; j < reps.size() && attempts < kGlueAttemptLimit; ++j) {
    if (attempt(*reps[0], *reps[j]) || (j > 0 && attempt(*reps[j], *reps[0]))) {
      return Shortcut::accepted;
    }
  }
  return Shortcut::undecided;
}

}  // namespace

PreimageSet enum_preimages(const Deck& d, std::size_t c, Mode mode) {
  SearchResult r = search_preimages(d, c, mode, false);
  PreimageSet out;
  out.mode = mode;
  out.preimages.reserve(r.accepted.size());
  for (auto& [cert, g] : r.accepted) {
    out.preimages.push_back(std::move(g));
  }
  return out;
}

std::optional<Graph> find_vertex_preimage(const Deck& d, std::size_t c, Mode mode) {
  if (is_edge_kind(d)) {
    throw InputError("find_vertex_preimage takes a vertex deck");
  }
  validate_search(d, c);
  if (mode == Mode::sub) {
    const std::size_t n = d.card_order() + c;
    if (n <= kMaxOrder && d.size() > binomial(n, c)) {
      throw InputError("subdeck has " + std::to_string(d.size()) +
                       " cards but a preimage has only " + std::to_string(binomial(n, c)) +
                       " cards");
    }
    std::optional<Graph> witness;
    switch (vertex_subdeck_shortcut(d, c, witness)) {
      case Shortcut::rejected:
        return std::nullopt;
      case Shortcut::accepted:
        return witness;
      case Shortcut::undecided:
        break;
    }
  }
  return first_of(search_vertex_preimages(d, c, mode, true));
}

std::optional<Graph> find_edge_preimage(const Deck& d, std::size_t c, Mode mode) {
  if (!is_edge_kind(d)) {
    throw InputError("find_edge_preimage takes an edge deck");
  }
  validate_search(d, c);
  return first_of(search_edge_preimages(d, c, mode, true));
}

bool legit_vertex(const Deck& d, std::size_t c, Mode mode) {
  return find_vertex_preimage(d, c, mode).has_value();
}

bool legit_edge(const Deck& d, std::size_t c, Mode mode) {
  return find_edge_preimage(d, c, mode).has_value();
}

std::vector<DeletionMatch> matching_deletions(const Graph& g1, const Graph& g2, std::size_t c,
                                              std::size_t limit) {
  if (g1.order() != g2.order()) {
    throw InputError("two-card test needs cards of equal order");
  }
  std::vector<DeletionMatch> out;
  const std::size_t n = g1.order();
  for (std::size_t s = 1; s <= std::min(c, n) && out.size() < limit; ++s) {
    std::vector<std::pair<Mask, std::uint64_t>> side1;
    std::vector<std::pair<Mask, std::uint64_t>> side2;
    auto collect = [s](const Graph& g, std::vector<std::pair<Mask, std::uint64_t>>& side) {
      std::size_t i = 0;
      std::vector<Mask> masks;
      for_each_combination(g.order(), s, [&](std::span<const std::size_t> idx) {
        masks.push_back(mask_of(idx));
        return true;
      });
      scan_vertex_cards(g, s, [&](std::uint64_t inv, auto&&) {
        side.emplace_back(masks[i++], inv);
        return true;
      });
    };
    collect(g1, side1);
    collect(g2, side2);
    std::unordered_set<std::uint64_t> inv1;
    std::unordered_set<std::uint64_t> inv2;
    for (const auto& [m, inv] : side1) {
      inv1.insert(inv);
    }
    for (const auto& [m, inv] : side2) {
      inv2.insert(inv);
    }
    std::unordered_map<Certificate, std::vector<Mask>, CertificateHash> by_cert;
    for (const auto& [m, inv] : side1) {
      if (inv2.contains(inv)) {
        by_cert[certificate(delete_vertex_mask(g1, m))].push_back(m);
      }
    }
    for (const auto& [m2, inv] : side2) {
      if (!inv1.contains(inv)) {
        continue;
      }
      const auto it = by_cert.find(certificate(delete_vertex_mask(g2, m2)));
      if (it == by_cert.end()) {
        continue;
      }
      for (Mask m1 : it->second) {
        out.push_back({m1, m2});
        if (out.size() >= limit) {
          return out;
        }
      }
    }
  }
  return out;
}

bool two_lvd(const Graph& g1, const Graph& g2, std::size_t c) {
  if (c == 0) {
    throw InputError("c must be at least 1");
  }
  return !matching_deletions(g1, g2, c, 1).empty();
}

Graph glue_preimage(const Graph& g1, const Graph& g2, const DeletionMatch& match, std::size_t c) {
  const Mask keep1 = g1.vertex_mask() & ~match.u1;
  const Mask keep2 = g2.vertex_mask() & ~match.u2;
  const auto psi = find_isomorphism(induced_subgraph(g1, keep1), induced_subgraph(g2, keep2));
  if (!psi || std::popcount(match.u1) != std::popcount(match.u2) ||
      static_cast<std::size_t>(std::popcount(match.u1)) > c) {
    throw InputError("glue_preimage needs a valid deletion match");
  }
  // Original vertex -> index in g1 - u1, and index in g2 - u2 -> original vertex.
  std::vector<Vertex> compact1(g1.order(), 0);
  Vertex next = 0;
  for_each_bit(keep1, [&](Vertex v) { compact1[v] = next++; });
  std::vector<Vertex> expand2;
  for_each_bit(keep2, [&](Vertex v) { expand2.push_back(v); });

  std::vector<Vertex> removed1;
  for_each_bit(match.u1, [&](Vertex v) { removed1.push_back(v); });
  Graph out = g2;
  std::vector<Vertex> added;
  for (std::size_t i = 0; i < c; ++i) {
    added.push_back(out.add_vertex());
  }
  for (std::size_t i = 0; i < removed1.size(); ++i) {
    for_each_bit(g1.neighbors(removed1[i]) & keep1, [&](Vertex w) {
      out.add_edge(added[i], expand2[(*psi)[compact1[w]]]);
    });
    for (std::size_t j = i + 1; j < removed1.size(); ++j) {
      if ((g1.neighbors(removed1[i]) & bit(removed1[j])) != 0) {
        out.add_edge(added[i], added[j]);
      }
    }
  }
  return out;
}

}  // namespace reconkit
