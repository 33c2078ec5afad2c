#include "reconkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "reconkit/deciders.hpp"
#include "reconkit/deck.hpp"
#include "reconkit/enumerate.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/families.hpp"
#include "reconkit/graph6.hpp"
#include "reconkit/graph_ops.hpp"
#include "reconkit/iso.hpp"
#include "reconkit/recon.hpp"
#include "reconkit/reductions.hpp"

namespace reconkit {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  // Records a failure; keeps only the first few messages.
  void fail(const std::string& message) {
    if (passed || failures < 5) {
      detail << (failures == 0 ? "" : "; ") << message;
    }
    passed = false;
    ++failures;
  }

  std::size_t failures = 0;
};

std::vector<Graph> graphs_of_orders(std::size_t lo, std::size_t hi) {
  std::vector<Graph> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto& gs = enumerate_graphs(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

void kelly_ulam(const AcceptanceOptions&, Outcome& out) {
  std::size_t pairs = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto& gs = enumerate_graphs(n);
    std::vector<Deck> decks;
    for (const Graph& g : gs) {
      decks.push_back(build_deck(g, DeckKind::vertex, 1));
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        ++pairs;
        if (deck_equal(decks[i], decks[j])) {
          out.fail("equal decks: " + encode_graph6(gs[i]) + " " + encode_graph6(gs[j]));
        }
      }
    }
  }
  const auto& two = enumerate_graphs(2);
  const bool exception_holds =
      deck_equal(build_deck(two[0], DeckKind::vertex, 1), build_deck(two[1], DeckKind::vertex, 1));
  if (!exception_holds) {
    out.fail("K2 and 2K1 should share a deck");
  }
  out.detail << (out.passed ? "" : "; ") << pairs << " nonisomorphic pairs compared";
}

std::size_t capped(const AcceptanceOptions& options, std::size_t n) {
  return options.n_max ? std::min(*options.n_max, n) : n;
}

void record(const ReductionReport& r, Outcome& out, std::size_t& instances) {
  instances += r.instances;
  for (const ReductionViolation& v : r.violations) {
    out.fail(std::string(to_string(r.kind)) + " c=" + std::to_string(r.c) + " k=" +
             std::to_string(r.k) + " (" + v.g + ", " + v.h + "): " + v.detail);
  }
}

void reduction_iff(const AcceptanceOptions& options, Outcome& out) {
  std::size_t instances = 0;
  for (ReductionKind kind : all_reduction_kinds()) {
    if (kind == ReductionKind::kedc_to_kvdc) {
      continue;
    }
    const bool uses_k = kind == ReductionKind::gi_to_kedc || kind == ReductionKind::gi_to_klvd ||
                        kind == ReductionKind::gi_to_kled;
    for (std::size_t c : {1, 2}) {
      const std::size_t n_max = capped(options, c == 1 ? 5 : 4);
      for (std::size_t k : uses_k ? std::vector<std::size_t>{2, 3} : std::vector<std::size_t>{2}) {
        record(verify_reduction(kind, n_max, c, k), out, instances);
      }
    }
  }
  out.detail << (out.passed ? "" : "; ") << instances << " instances";
}

void edge_to_vertex_transfer(const AcceptanceOptions& options, Outcome& out) {
  std::size_t instances = 0;
  record(verify_reduction(ReductionKind::kedc_to_kvdc, capped(options, 4), 1, 2, 3), out,
         instances);
  out.detail << (out.passed ? "" : "; ") << instances << " instances";
}

void line_graph_deck(const AcceptanceOptions&, Outcome& out) {
  std::size_t checked = 0;
  for (const Graph& g : graphs_of_orders(1, 5)) {
    for (std::size_t c : {1, 2}) {
      if (c > g.edge_count()) {
        continue;
      }
      std::vector<Graph> lines;
      const Deck edge_deck = build_deck(g, DeckKind::edge, c);
      for (const Card& card : edge_deck.cards()) {
        lines.push_back(line_graph(card.graph));
      }
      ++checked;
      if (!deck_equal(Deck(DeckKind::vertex, std::move(lines)),
                      build_deck(line_graph(g), DeckKind::vertex, c))) {
        out.fail("mismatch for " + encode_graph6(g) + " c=" + std::to_string(c));
      }
    }
  }
  out.detail << (out.passed ? "" : "; ") << checked << " (graph, c) cases";
}

void two_card_legitimacy(const AcceptanceOptions&, Outcome& out) {
  std::size_t checked = 0;
  for (std::size_t n : {3, 4}) {
    const auto& gs = enumerate_graphs(n);
    for (const Graph& a : gs) {
      for (const Graph& b : gs) {
        for (std::size_t c : {1, 2}) {
          const Deck d(DeckKind::vertex, {a, b});
          const bool pair_test = two_lvd(a, b, c);
          const bool decider = legit_vertex(d, c, Mode::sub);
          const bool exhaustive = !enum_preimages(d, c, Mode::sub).preimages.empty();
          ++checked;
          if (pair_test != decider || pair_test != exhaustive) {
            out.fail(encode_graph6(a) + " " + encode_graph6(b) + " c=" + std::to_string(c));
          }
        }
      }
    }
  }
  out.detail << (out.passed ? "" : "; ") << checked << " ordered pairs";
}

void selector_family(const AcceptanceOptions&, Outcome& out) {
  std::ostringstream counts;
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 1}}) {
    const std::string cell = "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
    const Deck d = selector_deck(k, n);
    const std::size_t order = ((std::size_t{1} << (k - 1)) + 1) * n + k;
    if (d.size() != k || d.card_order() != order || d.classes().size() != 1) {
      out.fail(cell + " deck shape");
    }
    const std::vector<Graph> pre = selector_preimages(k, n);
    std::set<Certificate> distinct;
    for (const Graph& h : pre) {
      distinct.insert(certificate(h));
      if (h.order() != order + 1 || !subdeck_contained(d, build_deck(h, DeckKind::vertex, 1))) {
        out.fail(cell + " preimage " + encode_graph6(h) + " does not contain the deck");
      }
    }
    if (pre.size() != (std::size_t{1} << n) || distinct.size() != pre.size()) {
      out.fail(cell + " expected " + std::to_string(std::size_t{1} << n) + " distinct preimages");
    }
    counts << (counts.tellp() == 0 ? "" : ", ") << distinct.size();
  }
  out.detail << (out.passed ? "" : "; ") << "preimage counts " << counts.str();
}

void clique_pair_numbers(const AcceptanceOptions&, Outcome& out) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const std::size_t t = n / 2;
    const CliquePair p = clique_pair(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    if (p.g.order() != n || p.h.order() != n) {
      out.fail(at + "wrong orders");
    }
    const ReconNumber ex = recon_number(p.g, DeckKind::vertex, Quantifier::exists);
    const ReconNumber fg = recon_number(p.g, DeckKind::vertex, Quantifier::forall);
    const ReconNumber fh = recon_number(p.h, DeckKind::vertex, Quantifier::forall);
    if (ex.value != std::optional<std::size_t>(3)) {
      out.fail(at + "exists(G) = " + ex.str());
    }
    if (fg.value != std::optional<std::size_t>(t + 2) || fh.value != fg.value) {
      out.fail(at + "forall(G) = " + fg.str() + ", forall(H) = " + fh.str());
    }
    const Deck dg = build_deck(p.g, DeckKind::vertex, 1);
    const Deck dh = build_deck(p.h, DeckKind::vertex, 1);
    Graph shared = disjoint_union({complete_graph(t), complete_graph(t - 1)});
    if (n % 2 == 1) {
      shared = disjoint_union({shared, complete_graph(1)});
    }
    const Certificate cls = certificate(shared);
    const auto count = [&](const Deck& d) {
      return std::count_if(d.cards().begin(), d.cards().end(),
                           [&](const Card& card) { return card.certificate == cls; });
    };
    const std::size_t common = shared_card_count(dg, dh);
    if (common != t + 1 || static_cast<std::size_t>(count(dg)) != t + 1 ||
        static_cast<std::size_t>(count(dh)) < t + 1) {
      out.fail(at + "shared cards " + std::to_string(common));
    }
  }
  out.detail << (out.passed ? "" : "; ") << "n = 4..8";
}

void clique_union_cards(const AcceptanceOptions&, Outcome& out) {
  std::size_t premise = 0;
  for (const Graph& g : graphs_of_orders(5, 7)) {
    const Deck d = build_deck(g, DeckKind::vertex, 1);
    const auto cliques = std::count_if(d.cards().begin(), d.cards().end(),
                                       [](const Card& c) { return is_clique_union(c.graph); });
    if (cliques >= 4) {
      ++premise;
      if (!is_clique_union(g)) {
        out.fail("counterexample " + encode_graph6(g));
      }
    }
  }
  out.detail << (out.passed ? "" : "; ") << premise << " graphs meet the premise";
}

void whitney(const AcceptanceOptions&, Outcome& out) {
  std::size_t pairs = 0;
  for (std::size_t n : {4, 5}) {
    const std::vector<Graph> gs = enumerate_connected_graphs(n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        ++pairs;
        if (are_isomorphic(line_graph(gs[i]), line_graph(gs[j]))) {
          out.fail("isomorphic line graphs: " + encode_graph6(gs[i]) + " " + encode_graph6(gs[j]));
        }
      }
    }
  }
  if (!are_isomorphic(line_graph(complete_graph(3)), line_graph(star_graph(3)))) {
    out.fail("L(K3) and L(K1,3) should be isomorphic");
  }
  out.detail << (out.passed ? "" : "; ") << pairs << " pairs";
}

// Permutation search, independent of the canonical labeler.
bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
    return false;
  }
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    if (is_isomorphism(g, h, p)) {
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

void iso_soundness(const AcceptanceOptions&, Outcome& out) {
  std::mt19937 rng(20261014);
  std::size_t relabelings = 0;
  for (const Graph& g : graphs_of_orders(0, 6)) {
    const Certificate expected = canonical_labeling(g).certificate;
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ++relabelings;
      if (canonical_labeling(relabel(g, perm)).certificate != expected) {
        out.fail("relabeling changes the certificate of " + encode_graph6(g));
        break;
      }
    }
  }
  const auto& gs = enumerate_graphs(5);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i; j < gs.size(); ++j) {
      const bool same = i == j;
      if (are_isomorphic(gs[i], gs[j]) != same || brute_isomorphic(gs[i], gs[j]) != same) {
        out.fail("pair " + encode_graph6(gs[i]) + " " + encode_graph6(gs[j]));
      }
    }
  }
  out.detail << (out.passed ? "" : "; ") << relabelings << " relabelings, " << gs.size()
             << " classes on 5 vertices";
}

// Upper-triangle bits in column order, six per byte, offset 63; orders below 63 only.
std::string hand_graph6(const Graph& g) {
  std::string out(1, static_cast<char>(63 + g.order()));
  int value = 0;
  int used = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = value * 2 + (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(63 + value);
        value = 0;
        used = 0;
      }
    }
  }
  if (used > 0) {
    out += static_cast<char>(63 + (value << (6 - used)));
  }
  return out;
}

void graph6_codec(const AcceptanceOptions&, Outcome& out) {
  std::size_t labeled = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        pairs.push_back({u, v});
      }
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((bits >> i) & 1) {
          g.add_edge(pairs[i].u, pairs[i].v);
        }
      }
      ++labeled;
      const std::string line = encode_graph6(g);
      if (line != hand_graph6(g) || decode_graph6(line) != g ||
          encode_graph6(decode_graph6(line)) != line) {
        out.fail("round trip fails for " + line);
      }
    }
  }
  if (encode_graph6(complete_graph(3)) != "Bw" || encode_graph6(empty_graph(2)) != "A?") {
    out.fail("K3 or 2K1 encodes incorrectly");
  }
  out.detail << (out.passed ? "" : "; ") << labeled << " labeled graphs";
}

using CriterionFn = void (*)(const AcceptanceOptions&, Outcome&);

struct Criterion {
  const char* name;
  CriterionFn run;
};

constexpr Criterion kCriteria[] = {
    {"kelly-ulam", kelly_ulam},
    {"reduction-iff", reduction_iff},
    {"edge-to-vertex-transfer", edge_to_vertex_transfer},
    {"line-graph-deck", line_graph_deck},
    {"two-card-legitimacy", two_card_legitimacy},
    {"selector-preimages", selector_family},
    {"clique-pair-numbers", clique_pair_numbers},
    {"clique-union-cards", clique_union_cards},
    {"whitney", whitney},
    {"iso-soundness", iso_soundness},
    {"graph6", graph6_codec},
};

CriterionResult run_index(std::size_t index, const AcceptanceOptions& options) {
  CriterionResult result;
  result.id = static_cast<int>(index + 1);
  result.name = kCriteria[index].name;
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    kCriteria[index].run(options, out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = out.passed;
  result.detail = out.detail.str();
  return result;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Criterion& c : kCriteria) {
      v.emplace_back(c.name);
    }
    return v;
  }();
  return names;
}

CriterionResult run_criterion(std::string_view name, const AcceptanceOptions& options) {
  if (options.n_max && *options.n_max < 3) {
    throw InputError("--n-max must be at least 3");
  }
  for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
    if (name == kCriteria[i].name || name == std::to_string(i + 1)) {
      return run_index(i, options);
    }
  }
  throw InputError("unknown criterion '" + std::string(name) + "'");
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const std::string& name : criterion_names()) {
    results.push_back(run_criterion(name, options));
    if (on_result) {
      on_result(results.back());
    }
  }
  return results;
}

}  // namespace reconkit
