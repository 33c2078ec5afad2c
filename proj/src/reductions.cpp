#include "reconkit/reductions.hpp"

#include <algorithm>
#include <map>

#include "reconkit/combinatorics.hpp"
#include "reconkit/deciders.hpp"
#include "reconkit/enumerate.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/graph6.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"
#include "reconkit/parallel.hpp"

namespace reconkit {

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::gi_to_lvd:
      return "gi_to_lvd";
    case ReductionKind::gi_to_led:
      return "gi_to_led";
    case ReductionKind::kedc_to_kvdc:
      return "kedc_to_kvdc";
    case ReductionKind::gi_to_kedc:
      return "gi_to_kedc";
    case ReductionKind::gi_to_klvd:
      return "gi_to_klvd";
    case ReductionKind::gi_to_kled:
      return "gi_to_kled";
  }
  return "gi_to_lvd";
}

const std::vector<ReductionKind>& all_reduction_kinds() {
  static const std::vector<ReductionKind> kinds = {
      ReductionKind::gi_to_lvd,  ReductionKind::gi_to_led,  ReductionKind::kedc_to_kvdc,
      ReductionKind::gi_to_kedc, ReductionKind::gi_to_klvd, ReductionKind::gi_to_kled};
  return kinds;
}

ReductionKind parse_reduction_kind(std::string_view text) {
  std::string name(text);
  std::replace(name.begin(), name.end(), '-', '_');
  for (ReductionKind kind : all_reduction_kinds()) {
    if (name == to_string(kind)) {
      return kind;
    }
  }
  throw InputError("unknown reduction '" + std::string(text) + "'");
}

namespace {

void require_gi_pair(const Graph& g, const Graph& h, std::size_t min_order, const char* what) {
  if (g.order() != h.order()) {
    throw InputError(std::string(what) + ": inputs must have equal order");
  }
  if (g.order() < min_order) {
    throw InputError(std::string(what) + ": inputs need at least " + std::to_string(min_order) +
                     " vertices");
  }
  if (!is_connected(g) || !is_connected(h)) {
    throw InputError(std::string(what) + ": inputs must be connected");
  }
}

void require_c(std::size_t c) {
  if (c == 0) {
    throw InputError("c must be at least 1");
  }
}

Graph clique_minus(std::size_t order, std::size_t c, std::size_t j) {
  // j-th (1-based) lexicographic c-subset of K_order's lexicographic edge list.
  Graph k = complete_graph(order);
  const std::vector<Edge> edges = k.edges();
  if (j == 0 || j > binomial(edges.size(), c)) {
    throw InputError("edge subset index out of range");
  }
  std::size_t seen = 0;
  for_each_combination(edges.size(), c, [&](std::span<const std::size_t> idx) {
    if (++seen < j) {
      return true;
    }
    for (std::size_t i : idx) {
      k.remove_edge(edges[i].u, edges[i].v);
    }
    return false;
  });
  return k;
}

// Removes one card certificate-equal to `target` from `cards`.
void remove_one(std::vector<Graph>& cards, const Graph& target) {
  const Certificate cert = certificate(target);
  for (auto it = cards.begin(); it != cards.end(); ++it) {
    if (certificate(*it) == cert) {
      cards.erase(it);
      return;
    }
  }
  throw Error("reduction invariant broken: the card to remove is missing");
}

std::vector<Graph> card_graphs(const Deck& d) {
  std::vector<Graph> out;
  out.reserve(d.size());
  for (const Card& card : d.cards()) {
    out.push_back(card.graph);
  }
  return out;
}

}  // namespace

Deck gi_to_lvd(const Graph& g, const Graph& h, std::size_t c) {
  require_c(c);
  require_gi_pair(g, h, 3, "gi_to_lvd");
  std::vector<Graph> cards = card_graphs(
      build_deck(disjoint_union({g, empty_graph(c + 1)}), DeckKind::vertex, c));
  remove_one(cards, disjoint_union({g, empty_graph(1)}));
  cards.push_back(disjoint_union({h, empty_graph(1)}));
  return Deck(DeckKind::vertex, std::move(cards));
}

Deck gi_to_led(const Graph& g, const Graph& h, std::size_t c) {
  require_c(c);
  require_gi_pair(g, h, std::max<std::size_t>(c, 2) + 1, "gi_to_led");
  const std::size_t l = g.order() + 1;
  const Graph base = disjoint_union({g, copies(complete_graph(2), c), complete_graph(l)});
  std::vector<Graph> cards = card_graphs(build_deck(base, DeckKind::edge, c));
  // The card dropping exactly the cK2 edges.
  remove_one(cards, disjoint_union({g, empty_graph(2 * c), complete_graph(l)}));
  cards.push_back(disjoint_union({h, empty_graph(2 * c), complete_graph(l)}));
  return Deck(DeckKind::edge, std::move(cards));
}

Graph hat_graph(const Graph& h) {
  const std::size_t n = h.order();
  return join({h, disjoint_union({complete_graph(n + 1), empty_graph(1)})});
}

CheckInstance kedc_to_kvdc(const Graph& g, const Deck& cards, std::size_t c) {
  require_c(c);
  if (cards.kind() != DeckKind::edge) {
    throw InputError("kedc_to_kvdc takes an edge deck");
  }
  if (g.order() <= c) {
    throw InputError("kedc_to_kvdc needs more than c vertices");
  }
  std::vector<Graph> out_cards;
  out_cards.reserve(cards.size());
  for (const Card& card : cards.cards()) {
    if (card.graph.order() != g.order()) {
      throw InputError("kedc_to_kvdc: cards and graph must have equal order");
    }
    out_cards.push_back(line_graph(hat_graph(card.graph)));
  }
  return {line_graph(hat_graph(g)), Deck(DeckKind::vertex, std::move(out_cards))};
}

CheckInstance gi_to_kedc(const Graph& g, const Graph& h, std::size_t c, std::size_t k) {
  require_c(c);
  require_gi_pair(g, h, 3, "gi_to_kedc");
  if (k < 2) {
    throw InputError("gi_to_kedc needs k >= 2");
  }
  const Graph base = disjoint_union({g, copies(complete_graph(2), c)});
  const std::vector<Edge> edges = base.edges();
  if (binomial(edges.size(), c) < k) {
    throw InputError("gi_to_kedc: the reduced deck has fewer than k-1 cards");
  }
  // The cK2 edges come last in the lexicographic edge list.
  std::vector<std::size_t> skipped(c);
  for (std::size_t i = 0; i < c; ++i) {
    skipped[i] = edges.size() - c + i;
  }
  std::vector<Graph> cards = {disjoint_union({h, empty_graph(2 * c)})};
  for_each_combination(edges.size(), c, [&](std::span<const std::size_t> idx) {
    if (std::equal(idx.begin(), idx.end(), skipped.begin())) {
      return true;
    }
    Graph card = base;
    for (std::size_t i : idx) {
      card.remove_edge(edges[i].u, edges[i].v);
    }
    cards.push_back(std::move(card));
    return cards.size() < k;
  });
  return {base, Deck(DeckKind::edge, std::move(cards))};
}

Deck gi_to_klvd(const Graph& g, const Graph& h, std::size_t c, std::size_t k) {
  require_c(c);
  require_gi_pair(g, h, c + 1, "gi_to_klvd");
  if (k < 2) {
    throw InputError("gi_to_klvd needs k >= 2");
  }
  const std::size_t l = g.order() + k;
  std::vector<Graph> cards(k - 1,
                           disjoint_union({complete_graph(l), complete_graph(l + 2 * c), g}));
  cards.push_back(disjoint_union({complete_graph(l + c), complete_graph(l + c), h}));
  return Deck(DeckKind::vertex, std::move(cards));
}

Deck gi_to_kled(const Graph& g, const Graph& h, std::size_t c, std::size_t k) {
  require_c(c);
  require_gi_pair(g, h, c + 1, "gi_to_kled");
  if (k < 2) {
    throw InputError("gi_to_kled needs k >= 2");
  }
  const std::size_t l = g.order() + k;
  if (k - 1 > binomial(binomial(l, 2), c)) {
    throw InputError("gi_to_kled: not enough edge subsets for k-1 cards");
  }
  std::vector<Graph> cards;
  for (std::size_t j = 1; j < k; ++j) {
    cards.push_back(disjoint_union({g, clique_minus(l, c, j), complete_graph(l + 1)}));
  }
  cards.push_back(disjoint_union({h, complete_graph(l), clique_minus(l + 1, c, 1)}));
  return Deck(DeckKind::edge, std::move(cards));
}

bool admissible_pair(ReductionKind kind, const Graph& g, const Graph& h, std::size_t c,
                     std::size_t k) {
  if (c == 0 || g.order() != h.order() || !is_connected(g) || !is_connected(h)) {
    return false;
  }
  const std::size_t n = g.order();
  switch (kind) {
    case ReductionKind::gi_to_lvd:
      return n >= 3;
    case ReductionKind::gi_to_led:
      return n > std::max<std::size_t>(c, 2);
    case ReductionKind::gi_to_kedc:
      return n >= 3 && k >= 2 && binomial(g.edge_count() + c, c) >= k;
    case ReductionKind::gi_to_klvd:
      return n > c && k >= 2;
    case ReductionKind::gi_to_kled:
      return n > c && k >= 2 && k - 1 <= binomial(binomial(n + k, 2), c);
    case ReductionKind::kedc_to_kvdc:
      return false;
  }
  return false;
}

bool decide_gi_gadget(ReductionKind kind, const Graph& g, const Graph& h, std::size_t c,
                      std::size_t k) {
  switch (kind) {
    case ReductionKind::gi_to_lvd:
      return legit_vertex(gi_to_lvd(g, h, c), c, Mode::pure);
    case ReductionKind::gi_to_led:
      return legit_edge(gi_to_led(g, h, c), c, Mode::pure);
    case ReductionKind::gi_to_kedc: {
      const CheckInstance inst = gi_to_kedc(g, h, c, k);
      return subdeck_check(inst.graph, inst.cards, c);
    }
    case ReductionKind::gi_to_klvd:
      return legit_vertex(gi_to_klvd(g, h, c, k), c, Mode::sub);
    case ReductionKind::gi_to_kled:
      return legit_edge(gi_to_kled(g, h, c, k), c, Mode::sub);
    case ReductionKind::kedc_to_kvdc:
      break;
  }
  throw InputError("kedc_to_kvdc is not a GI gadget");
}

namespace {

struct SweepItem {
  Graph g;
  // GI gadgets: the second graph. Transfer sweep: unused.
  Graph h;
  std::vector<Graph> cards;
};

std::vector<SweepItem> gi_items(ReductionKind kind, std::size_t lo, std::size_t hi,
                                std::size_t c, std::size_t k) {
  std::vector<SweepItem> items;
  for (std::size_t n = lo; n <= hi; ++n) {
    const std::vector<Graph> connected = enumerate_connected_graphs(n);
    for (const Graph& g : connected) {
      for (const Graph& h : connected) {
        if (admissible_pair(kind, g, h, c, k)) {
          items.push_back({g, h, {}});
        }
      }
    }
  }
  return items;
}

std::vector<SweepItem> transfer_items(std::size_t lo, std::size_t hi, std::size_t c,
                                      std::size_t k) {
  std::vector<SweepItem> items;
  for (std::size_t n = std::max(lo, c + 1); n <= hi; ++n) {
    const std::vector<Graph>& all = enumerate_graphs(n);
    for (const Graph& g : all) {
      if (g.edge_count() < c) {
        continue;
      }
      std::vector<const Graph*> shapes;
      for (const Graph& s : all) {
        if (s.edge_count() + c == g.edge_count()) {
          shapes.push_back(&s);
        }
      }
      // Every k-multiset of shape classes, as nondecreasing index sequences.
      std::vector<std::size_t> idx(k, 0);
      while (!shapes.empty()) {
        SweepItem item{g, Graph(0), {}};
        for (std::size_t i : idx) {
          item.cards.push_back(*shapes[i]);
        }
        items.push_back(std::move(item));
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == shapes.size() - 1) {
          --pos;
        }
        if (pos == 0) {
          break;
        }
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) {
          idx[j] = idx[pos - 1];
        }
      }
    }
  }
  return items;
}

}  // namespace

ReductionReport verify_reduction(ReductionKind kind, std::size_t n_max, std::size_t c,
                                 std::size_t k, std::optional<std::size_t> n_min) {
  if (n_max > kMaxSweepOrder) {
    throw CapacityError("verify_reduction supports n_max <= " + std::to_string(kMaxSweepOrder));
  }
  ReductionReport report;
  report.kind = kind;
  report.c = c;
  report.k = k;
  report.n_min = n_min.value_or(3);
  report.n_max = n_max;
  const bool transfer = kind == ReductionKind::kedc_to_kvdc;
  const std::vector<SweepItem> items = transfer
                                           ? transfer_items(report.n_min, n_max, c, k)
                                           : gi_items(kind, report.n_min, n_max, c, k);
  report.instances = items.size();

  std::vector<std::optional<ReductionViolation>> outcome(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const SweepItem& item = items[i];
    ReductionViolation v;
    v.g = encode_graph6(item.g);
    try {
      if (transfer) {
        const Deck cards(DeckKind::edge, item.cards);
        v.expected = subdeck_check(item.g, cards, c);
        const CheckInstance image = kedc_to_kvdc(item.g, cards, c);
        v.actual = subdeck_check(image.graph, image.cards, c);
        for (const Graph& card : item.cards) {
          v.h += (v.h.empty() ? "" : ",") + encode_graph6(card);
        }
      } else {
        v.h = encode_graph6(item.h);
        v.expected = are_isomorphic(item.g, item.h);
        v.actual = decide_gi_gadget(kind, item.g, item.h, c, k);
      }
      if (v.expected != v.actual) {
        outcome[i] = std::move(v);
      }
    } catch (const std::exception& e) {
      v.detail = e.what();
      outcome[i] = std::move(v);
    }
  });
  for (auto& v : outcome) {
    if (v) {
      report.violations.push_back(std::move(*v));
    }
  }
  return report;
}

}  // namespace reconkit
