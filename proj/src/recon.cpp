#include "reconkit/recon.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>
#include <vector>

#include "reconkit/combinatorics.hpp"
#include "reconkit/deciders.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"

namespace reconkit {

std::string_view to_string(Quantifier q) { return q == Quantifier::exists ? "exists" : "forall"; }

Quantifier parse_quantifier(std::string_view text) {
  if (text == "exists") {
    return Quantifier::exists;
  }
  if (text == "forall") {
    return Quantifier::forall;
  }
  throw InputError("unknown quantifier '" + std::string(text) + "'");
}

std::string ReconNumber::str() const { return value ? std::to_string(*value) : "inf"; }

std::string_view to_string(ThresholdProblem p) {
  switch (p) {
    case ThresholdProblem::exist_vrn:
      return "EXIST-VRN";
    case ThresholdProblem::univ_vrn:
      return "UNIV-VRN";
    case ThresholdProblem::exist_ern:
      return "EXIST-ERN";
    case ThresholdProblem::univ_ern:
      return "UNIV-ERN";
  }
  return "EXIST-VRN";
}

ThresholdProblem parse_threshold_problem(std::string_view text) {
  std::string name;
  for (char ch : text) {
    name += ch == '_' ? '-' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  for (ThresholdProblem p : {ThresholdProblem::exist_vrn, ThresholdProblem::univ_vrn,
                             ThresholdProblem::exist_ern, ThresholdProblem::univ_ern}) {
    if (name == to_string(p)) {
      return p;
    }
  }
  throw InputError("unknown threshold problem '" + std::string(text) + "'");
}

namespace {

void check_caps(const Graph& g, DeckKind kind) {
  if (kind == DeckKind::edge) {
    if (g.edge_count() > kMaxReconEdgeCount) {
      throw CapacityError("edge reconstruction numbers support at most " +
                          std::to_string(kMaxReconEdgeCount) + " edges");
    }
  } else if (g.order() > kMaxReconVertexOrder) {
    throw CapacityError("vertex reconstruction numbers support at most " +
                        std::to_string(kMaxReconVertexOrder) + " vertices");
  }
}

DeckKind normalized(DeckKind kind) {
  return kind == DeckKind::edge ? DeckKind::edge : DeckKind::vertex;
}

// The universe is every graph of g's order (and edge count, for edge kind).
bool singleton_universe(const Graph& g, DeckKind kind) {
  if (kind != DeckKind::edge) {
    return g.order() <= 1;
  }
  const std::size_t pairs = binomial(g.order(), 2);
  return g.order() <= 3 || g.edge_count() <= 1 || g.edge_count() + 1 >= pairs;
}

// Graphs with `card` as a 1-card: one new vertex with any neighbourhood, or one new edge.
template <class F>
void for_each_extension(const Graph& card, DeckKind kind, F&& f) {
  if (kind == DeckKind::edge) {
    for (const Edge& e : complement(card).edges()) {
      Graph h = card;
      h.add_edge(e.u, e.v);
      f(h);
    }
    return;
  }
  const std::size_t n = card.order();
  for (Mask nbrs = 0; nbrs < (Mask{1} << n); ++nbrs) {
    Graph h = card;
    const Vertex v = h.add_vertex();
    for_each_bit(nbrs, [&](Vertex u) { h.add_edge(u, v); });
    f(h);
  }
}

Deck as_kind(const Deck& s, DeckKind kind) {
  if (s.kind() == kind) {
    return s;
  }
  std::vector<Graph> cards;
  for (const Card& c : s.cards()) {
    cards.push_back(c.graph);
  }
  return Deck(kind, std::move(cards));
}

struct ReconContext {
  Deck deck;
  std::vector<Certificate> classes;
  std::vector<std::size_t> multiplicity;
  // Per rival h (not isomorphic to g, sharing a card class with g): how many cards of each class
  // deck(h) holds, clipped to g's multiplicities.
  std::set<std::vector<std::size_t>> rivals;
  bool singleton = false;
};

ReconContext make_context(const Graph& g, DeckKind kind) {
  ReconContext ctx;
  ctx.deck = build_deck(g, kind, 1);
  ctx.singleton = singleton_universe(g, kind);
  for (std::size_t i = 0; i < ctx.deck.size(); ++i) {
    if (i == 0 || ctx.deck[i].certificate != ctx.deck[i - 1].certificate) {
      ctx.classes.push_back(ctx.deck[i].certificate);
      ctx.multiplicity.push_back(0);
    }
    ++ctx.multiplicity.back();
  }
  const Certificate self = certificate(g);
  std::unordered_set<Certificate, CertificateHash> seen;
  for (std::size_t i = 0; i < ctx.deck.size(); ++i) {
    if (i > 0 && ctx.deck[i].certificate == ctx.deck[i - 1].certificate) {
      continue;
    }
    for_each_extension(ctx.deck[i].graph, kind, [&](const Graph& h) {
      Certificate cert = certificate(h);
      if (cert == self || !seen.insert(cert).second) {
        return;
      }
      std::vector<std::size_t> counts(ctx.classes.size(), 0);
      const Deck hd = build_deck(h, kind, 1);
      for (const Card& card : hd.cards()) {
        const auto it = std::lower_bound(ctx.classes.begin(), ctx.classes.end(), card.certificate);
        if (it != ctx.classes.end() && *it == card.certificate) {
          const auto j = static_cast<std::size_t>(it - ctx.classes.begin());
          counts[j] = std::min(counts[j] + 1, ctx.multiplicity[j]);
        }
      }
      ctx.rivals.insert(std::move(counts));
    });
  }
  return ctx;
}

bool dominated(const ReconContext& ctx, const std::vector<std::size_t>& profile) {
  return std::any_of(ctx.rivals.begin(), ctx.rivals.end(), [&](const auto& r) {
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (r[i] < profile[i]) {
        return false;
      }
    }
    return true;
  });
}

bool profile_identifies(const ReconContext& ctx, const std::vector<std::size_t>& profile) {
  const bool empty = std::all_of(profile.begin(), profile.end(), [](std::size_t x) { return x == 0; });
  return empty ? ctx.singleton : !dominated(ctx, profile);
}

Deck subdeck_of(const ReconContext& ctx, const std::vector<std::size_t>& profile) {
  std::vector<Graph> cards;
  std::size_t start = 0;
  for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
    for (std::size_t j = 0; j < profile[i]; ++j) {
      cards.push_back(ctx.deck[start + j].graph);
    }
    start += ctx.multiplicity[i];
  }
  return Deck(ctx.deck.kind(), std::move(cards));
}

// Calls f(profile, size) for every profile 0 <= profile <= multiplicity in mixed-radix order.
template <class F>
void for_each_profile(const std::vector<std::size_t>& multiplicity, F&& f) {
  std::vector<std::size_t> p(multiplicity.size(), 0);
  std::size_t size = 0;
  for (;;) {
    f(p, size);
    std::size_t i = 0;
    while (i < p.size() && p[i] == multiplicity[i]) {
      size -= p[i];
      p[i] = 0;
      ++i;
    }
    if (i == p.size()) {
      return;
    }
    ++p[i];
    ++size;
  }
}

}  // namespace

bool identifies(const Graph& g, const Deck& s, DeckKind kind) {
  kind = normalized(kind);
  // The edge-count cap bounds the profile search only; one query is cheap.
  if (kind == DeckKind::vertex) {
    check_caps(g, kind);
  }
  if (!kinds_compatible(s.kind(), kind)) {
    throw InputError("subdeck kind does not match the requested kind");
  }
  const Deck query = as_kind(s, kind);
  if (!subdeck_contained(query, build_deck(g, kind, 1))) {
    throw InputError("the cards are not a subdeck of the graph's deck");
  }
  if (query.empty()) {
    return singleton_universe(g, kind);
  }
  const Certificate self = certificate(g);
  bool ok = true;
  std::unordered_set<Certificate, CertificateHash> seen;
  for_each_extension(query[0].graph, kind, [&](const Graph& h) {
    if (!ok) {
      return;
    }
    Certificate cert = certificate(h);
    if (cert == self || !seen.insert(cert).second) {
      return;
    }
    if (subdeck_check(h, query, 1)) {
      ok = false;
    }
  });
  return ok;
}

ReconNumber recon_number(const Graph& g, DeckKind kind, Quantifier q) {
  kind = normalized(kind);
  check_caps(g, kind);
  const ReconContext ctx = make_context(g, kind);

  std::optional<std::vector<std::size_t>> smallest_identifying;
  std::size_t smallest_size = 0;
  std::optional<std::vector<std::size_t>> largest_failing;
  std::size_t largest_size = 0;
  for_each_profile(ctx.multiplicity, [&](const std::vector<std::size_t>& p, std::size_t size) {
    if (profile_identifies(ctx, p)) {
      if (!smallest_identifying || size < smallest_size) {
        smallest_identifying = p;
        smallest_size = size;
      }
    } else if (!largest_failing || size > largest_size) {
      largest_failing = p;
      largest_size = size;
    }
  });

  ReconNumber out;
  if (q == Quantifier::exists) {
    if (smallest_identifying) {
      out.value = smallest_size;
      out.witness = subdeck_of(ctx, *smallest_identifying);
    }
    return out;
  }
  // By monotonicity every profile larger than the largest failing one identifies.
  if (!largest_failing) {
    out.value = 0;
    return out;
  }
  if (largest_size == ctx.deck.size()) {
    out.counterexample = subdeck_of(ctx, *largest_failing);
    return out;
  }
  out.value = largest_size + 1;
  if (largest_size > 0) {
    out.counterexample = subdeck_of(ctx, *largest_failing);
  }
  return out;
}

bool threshold(const Graph& g, std::size_t k, ThresholdProblem which) {
  const DeckKind kind = which == ThresholdProblem::exist_vrn || which == ThresholdProblem::univ_vrn
                            ? DeckKind::vertex
                            : DeckKind::edge;
  const Quantifier q = which == ThresholdProblem::exist_vrn || which == ThresholdProblem::exist_ern
                           ? Quantifier::exists
                           : Quantifier::forall;
  const ReconNumber r = recon_number(g, kind, q);
  return r.value && *r.value <= k;
}

}  // namespace reconkit
