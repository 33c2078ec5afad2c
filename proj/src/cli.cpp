#include "reconkit/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "reconkit/acceptance.hpp"
#include "reconkit/deciders.hpp"
#include "reconkit/deck.hpp"
#include "reconkit/deck_io.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/families.hpp"
#include "reconkit/graph6.hpp"
#include "reconkit/recon.hpp"
#include "reconkit/reductions.hpp"

namespace reconkit {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Clock::time_point start = Clock::now();
  bool json = false;

  [[nodiscard]] long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  }
};

GraphFile load(Io& io, const std::string& path) {
  if (path == "-") {
    return read_graph_file(io.in, "<stdin>");
  }
  std::ifstream file(path);
  if (!file) {
    throw InputError(path + ": cannot open file");
  }
  return read_graph_file(file, path);
}

Graph load_graph(Io& io, const std::string& path) {
  GraphFile f = load(io, path);
  if (f.graphs.size() != 1) {
    throw InputError(path + ": expected exactly one graph, found " +
                     std::to_string(f.graphs.size()));
  }
  return std::move(f.graphs.front());
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    return fallback;
  }
  file.open(path);
  if (!file) {
    throw InputError(path + ": cannot write file");
  }
  return file;
}

json graph6_list(const std::vector<Graph>& graphs) {
  json list = json::array();
  for (const Graph& g : graphs) {
    list.push_back(encode_graph6(g));
  }
  return list;
}

json graph6_list(const Deck& d) {
  json list = json::array();
  for (const Card& card : d.cards()) {
    list.push_back(encode_graph6(card.graph));
  }
  return list;
}

// Flags shared by the deck-reading subcommands; flags override file metadata.
struct DeckFlags {
  std::string kind;
  std::optional<std::size_t> c;
};

void add_deck_flags(CLI::App* cmd, DeckFlags& flags) {
  cmd->add_option("--kind", flags.kind, "vertex, edge or endvertex (default: file metadata)");
  cmd->add_option("--c", flags.c, "deletion count (default: file metadata, else 1)")
      ->check(CLI::PositiveNumber);
}

DeckKind resolve_kind(const DeckFlags& flags, const DeckMetadata& meta, DeckKind fallback) {
  if (!flags.kind.empty()) {
    return parse_deck_kind(flags.kind);
  }
  return meta.kind.value_or(fallback);
}

std::size_t resolve_c(const DeckFlags& flags, const DeckMetadata& meta) {
  return flags.c.value_or(meta.c.value_or(1));
}

int decision(Io& io, const std::string& problem, bool answer, const json& witness) {
  if (io.json) {
    io.out << json{{"problem", problem},
                   {"answer", answer},
                   {"witness", witness},
                   {"elapsed_ms", io.elapsed_ms()}}
                  .dump()
           << "\n";
  } else {
    io.out << (answer ? "yes" : "no") << "\n";
    for (const auto& g : witness) {
      io.out << g.get<std::string>() << "\n";
    }
  }
  return answer ? kExitYes : kExitNo;
}

struct DeckCmd {
  DeckFlags flags;
  std::string graph_path;

  void setup(CLI::App* cmd) {
    add_deck_flags(cmd, flags);
    cmd->add_option("graph", graph_path, "graph6 file with one graph ('-' for stdin)")->required();
  }

  int run(Io& io) const {
    const Graph g = load_graph(io, graph_path);
    const DeckKind kind = flags.kind.empty() ? DeckKind::vertex : parse_deck_kind(flags.kind);
    const std::size_t c = flags.c.value_or(1);
    const Deck d = kind == DeckKind::endvertex ? endvertex_deck(g) : build_deck(g, kind, c);
    DeckMetadata meta;
    meta.kind = kind;
    if (kind != DeckKind::endvertex) {
      meta.c = c;
    }
    if (io.json) {
      io.out << json{{"problem", "deck"},
                     {"answer", true},
                     {"kind", std::string(to_string(kind))},
                     {"witness", graph6_list(d)},
                     {"elapsed_ms", io.elapsed_ms()}}
                    .dump()
             << "\n";
    } else {
      write_deck_file(io.out, d, meta);
    }
    return kExitYes;
  }
};

struct CheckCmd {
  DeckFlags flags;
  std::string mode = "pure";
  std::string graph_path;
  std::string deck_path;

  void setup(CLI::App* cmd) {
    add_deck_flags(cmd, flags);
    cmd->add_option("--mode", mode, "pure (whole deck) or sub (subdeck)")
        ->check(CLI::IsMember({"pure", "sub"}));
    cmd->add_option("graph", graph_path, "graph6 file with one graph")->required();
    cmd->add_option("deck", deck_path, "deck file")->required();
  }

  int run(Io& io) const {
    const Graph g = load_graph(io, graph_path);
    const GraphFile f = load(io, deck_path);
    const std::size_t c = resolve_c(flags, f.metadata);
    // Without a kind, cards as large as the graph must be edge cards.
    const bool edge_shaped = !f.graphs.empty() && f.graphs.front().order() == g.order();
    const DeckKind kind =
        resolve_kind(flags, f.metadata, edge_shaped ? DeckKind::edge : DeckKind::vertex);
    const Deck d(kind, f.graphs);
    const Mode m = parse_mode(mode);
    const bool answer = m == Mode::pure ? deck_check(g, d, c) : subdeck_check(g, d, c);
    const std::string problem = std::string(m == Mode::pure ? "" : "k-") +
                                (kind == DeckKind::edge ? "EDC" : "VDC") + "_" + std::to_string(c);
    return decision(io, problem, answer, json::array());
  }
};

struct LegitCmd {
  DeckFlags flags;
  std::string mode = "pure";
  std::string deck_path;

  void setup(CLI::App* cmd) {
    add_deck_flags(cmd, flags);
    cmd->add_option("--mode", mode, "pure, sub, or two (the two-card vertex test)")
        ->check(CLI::IsMember({"pure", "sub", "two"}));
    cmd->add_option("deck", deck_path, "deck file")->required();
  }

  int run(Io& io) const {
    const GraphFile f = load(io, deck_path);
    const std::size_t c = resolve_c(flags, f.metadata);
    const DeckKind kind = resolve_kind(flags, f.metadata, DeckKind::vertex);
    const std::string suffix = "_" + std::to_string(c);
    if (mode == "two") {
      if (kind == DeckKind::edge || f.graphs.size() != 2) {
        throw InputError("--mode two takes exactly two vertex cards");
      }
      return decision(io, "2-LVD" + suffix, two_lvd(f.graphs[0], f.graphs[1], c), json::array());
    }
    if (kind == DeckKind::endvertex) {
      throw InputError("legit takes a vertex or edge deck");
    }
    const Mode m = parse_mode(mode);
    const Deck d(kind, f.graphs);
    const std::optional<Graph> pre =
        kind == DeckKind::edge ? find_edge_preimage(d, c, m) : find_vertex_preimage(d, c, m);
    const std::string problem =
        std::string(m == Mode::sub ? "k-" : "") + (kind == DeckKind::edge ? "LED" : "LVD") + suffix;
    return decision(io, problem, pre.has_value(),
                    pre ? graph6_list(std::vector<Graph>{*pre}) : json::array());
  }
};

struct PreimagesCmd {
  DeckFlags flags;
  std::string mode = "pure";
  bool count_only = false;
  std::string deck_path;

  void setup(CLI::App* cmd) {
    add_deck_flags(cmd, flags);
    cmd->add_option("--mode", mode, "pure or sub")->check(CLI::IsMember({"pure", "sub"}));
    cmd->add_flag("--count", count_only, "print only the number of preimages");
    cmd->add_option("deck", deck_path, "deck file")->required();
  }

  int run(Io& io) const {
    const GraphFile f = load(io, deck_path);
    const DeckKind kind = resolve_kind(flags, f.metadata, DeckKind::vertex);
    if (kind == DeckKind::endvertex) {
      throw InputError("preimages takes a vertex or edge deck");
    }
    const PreimageSet set =
        enum_preimages(Deck(kind, f.graphs), resolve_c(flags, f.metadata), parse_mode(mode));
    const bool any = !set.preimages.empty();
    if (io.json) {
      io.out << json{{"problem", "preimages"},
                     {"answer", any},
                     {"count", set.preimages.size()},
                     {"witness", count_only ? json::array() : graph6_list(set.preimages)},
                     {"elapsed_ms", io.elapsed_ms()}}
                    .dump()
             << "\n";
    } else if (count_only) {
      io.out << set.preimages.size() << "\n";
    } else {
      write_graphs(io.out, set.preimages);
    }
    return any ? kExitYes : kExitNo;
  }
};

struct RnCmd {
  std::string kind = "vertex";
  std::string quantifier = "exists";
  std::string threshold_problem;
  std::optional<std::size_t> k;
  std::string graph_path;

  void setup(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
    cmd->add_option("--quantifier", quantifier, "exists or forall")
        ->check(CLI::IsMember({"exists", "forall"}));
    auto* problem = cmd->add_option("--threshold", threshold_problem,
                                    "EXIST-VRN, UNIV-VRN, EXIST-ERN or UNIV-ERN; decides value <= k");
    cmd->add_option("--k", k, "threshold bound")->needs(problem);
    problem->needs("--k");
    cmd->add_option("graph", graph_path, "graph6 file with one graph")->required();
  }

  int run(Io& io) const {
    const Graph g = load_graph(io, graph_path);
    DeckKind deck_kind = parse_deck_kind(kind);
    Quantifier q = parse_quantifier(quantifier);
    std::optional<ThresholdProblem> which;
    if (!threshold_problem.empty()) {
      which = parse_threshold_problem(threshold_problem);
      deck_kind = *which == ThresholdProblem::exist_vrn || *which == ThresholdProblem::univ_vrn
                      ? DeckKind::vertex
                      : DeckKind::edge;
      q = *which == ThresholdProblem::exist_vrn || *which == ThresholdProblem::exist_ern
              ? Quantifier::exists
              : Quantifier::forall;
    }
    const ReconNumber r = recon_number(g, deck_kind, q);
    const bool answer = which ? (r.value && *r.value <= *k) : true;
    const std::string problem =
        which ? std::string(to_string(*which))
              : std::string(deck_kind == DeckKind::edge ? "ern-" : "vrn-") + std::string(to_string(q));
    if (io.json) {
      json report{{"problem", problem},
                  {"answer", answer},
                  {"value", r.value ? json(*r.value) : json("inf")},
                  {"witness", r.witness ? graph6_list(*r.witness) : json::array()},
                  {"elapsed_ms", io.elapsed_ms()}};
      if (r.counterexample) {
        report["counterexample"] = graph6_list(*r.counterexample);
      }
      io.out << report.dump() << "\n";
    } else {
      io.out << problem << " " << r.str() << "\n";
      if (which) {
        io.out << (answer ? "yes" : "no") << "\n";
      }
    }
    return answer ? kExitYes : kExitNo;
  }
};

struct ReduceCmd {
  std::string kind_name;
  std::size_t c = 1;
  std::size_t k = 2;
  std::vector<std::string> inputs;
  std::string out_path;
  std::string graph_out_path;

  void setup(CLI::App* cmd) {
    cmd->add_option("kind", kind_name,
                    "gi_to_lvd, gi_to_led, kedc_to_kvdc, gi_to_kedc, gi_to_klvd or gi_to_kled")
        ->required();
    cmd->add_option("--c", c, "deletion count")->check(CLI::PositiveNumber);
    cmd->add_option("--k", k, "card count for the k-card gadgets")->check(CLI::Range(2, 1 << 20));
    cmd->add_option("inputs", inputs,
                    "GI gadgets: one file with two graphs, or two files; kedc_to_kvdc: graph and "
                    "edge deck")
        ->required();
    cmd->add_option("--out", out_path, "deck output file (default stdout)");
    cmd->add_option("--graph-out", graph_out_path, "graph output file for instance outputs");
  }

  int run(Io& io) const {
    const ReductionKind kind = parse_reduction_kind(kind_name);
    if (inputs.size() > 2) {
      throw InputError("reduce takes one or two input files");
    }
    std::optional<Graph> graph;
    Deck deck;
    DeckKind out_kind = DeckKind::vertex;
    std::vector<Graph> first = load(io, inputs[0]).graphs;
    if (kind == ReductionKind::kedc_to_kvdc) {
      if (inputs.size() != 2 || first.size() != 1) {
        throw InputError("kedc_to_kvdc takes a graph file and an edge deck file");
      }
      CheckInstance image = kedc_to_kvdc(first[0], Deck(DeckKind::edge, load(io, inputs[1]).graphs), c);
      graph = std::move(image.graph);
      deck = std::move(image.cards);
    } else {
      if (inputs.size() == 2) {
        const std::vector<Graph> second = load(io, inputs[1]).graphs;
        first.insert(first.end(), second.begin(), second.end());
      }
      if (first.size() != 2) {
        throw InputError("GI gadgets take exactly two graphs");
      }
      const Graph& g = first[0];
      const Graph& h = first[1];
      switch (kind) {
        case ReductionKind::gi_to_lvd:
          deck = gi_to_lvd(g, h, c);
          break;
        case ReductionKind::gi_to_led:
          deck = gi_to_led(g, h, c);
          break;
        case ReductionKind::gi_to_kedc: {
          CheckInstance image = gi_to_kedc(g, h, c, k);
          graph = std::move(image.graph);
          deck = std::move(image.cards);
          break;
        }
        case ReductionKind::gi_to_klvd:
          deck = gi_to_klvd(g, h, c, k);
          break;
        case ReductionKind::gi_to_kled:
          deck = gi_to_kled(g, h, c, k);
          break;
        case ReductionKind::kedc_to_kvdc:
          break;
      }
    }
    out_kind = deck.kind();
    DeckMetadata meta;
    meta.kind = out_kind;
    meta.c = c;
    meta.extra.emplace_back("reduction", std::string(to_string(kind)));
    if (kind == ReductionKind::gi_to_kedc || kind == ReductionKind::gi_to_klvd ||
        kind == ReductionKind::gi_to_kled) {
      meta.extra.emplace_back("k", std::to_string(k));
    }
    if (graph) {
      meta.extra.emplace_back("graph", encode_graph6(*graph));
    }
    if (graph && !graph_out_path.empty()) {
      std::ofstream file;
      write_graphs(open_output(graph_out_path, file, io.out), {*graph});
    }
    if (io.json) {
      json report{{"problem", std::string(to_string(kind))},
                  {"answer", true},
                  {"kind", std::string(to_string(out_kind))},
                  {"witness", graph6_list(deck)},
                  {"elapsed_ms", io.elapsed_ms()}};
      if (graph) {
        report["graph"] = encode_graph6(*graph);
      }
      io.out << report.dump() << "\n";
    } else {
      std::ofstream file;
      write_deck_file(open_output(out_path, file, io.out), deck, meta);
    }
    return kExitYes;
  }
};

struct FamilyCmd {
  std::string name;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  bool emit_preimages = false;
  std::string preimages_out;

  void setup(CLI::App* cmd) {
    cmd->add_option("family", name, "clique-pair (alias lemma43) or selector (alias thm46)")
        ->required()
        ->check(CLI::IsMember({"clique-pair", "lemma43", "selector", "thm46"}));
    cmd->add_option("--n", n, "family size parameter")->required();
    cmd->add_option("--k", k, "card count (selector)");
    cmd->add_flag("--emit-preimages", emit_preimages, "also write the selector preimages");
    cmd->add_option("--preimages-out", preimages_out, "preimage file (default: after the deck)");
  }

  int run(Io& io) const {
    if (name == "clique-pair" || name == "lemma43") {
      const CliquePair p = clique_pair(*n);
      if (io.json) {
        io.out << json{{"problem", "clique-pair"},
                       {"answer", true},
                       {"witness", graph6_list(std::vector<Graph>{p.g, p.h})},
                       {"elapsed_ms", io.elapsed_ms()}}
                      .dump()
               << "\n";
      } else {
        write_graphs(io.out, {p.g, p.h});
      }
      return kExitYes;
    }
    if (!k) {
      throw InputError("the selector family needs --k");
    }
    const Deck d = selector_deck(*k, *n);
    std::vector<Graph> pre;
    if (emit_preimages) {
      pre = selector_preimages(*k, *n);
    }
    if (io.json) {
      json report{{"problem", "selector"},
                  {"answer", true},
                  {"witness", graph6_list(d)},
                  {"elapsed_ms", io.elapsed_ms()}};
      if (emit_preimages) {
        report["preimages"] = graph6_list(pre);
      }
      io.out << report.dump() << "\n";
      return kExitYes;
    }
    DeckMetadata meta;
    meta.kind = DeckKind::vertex;
    meta.c = 1;
    meta.extra.emplace_back("family", "selector");
    meta.extra.emplace_back("k", std::to_string(*k));
    meta.extra.emplace_back("n", std::to_string(*n));
    write_deck_file(io.out, d, meta);
    if (emit_preimages) {
      std::ofstream file;
      std::ostream& dest = open_output(preimages_out, file, io.out);
      if (&dest == &io.out) {
        io.out << "# preimages\n";
      }
      write_graphs(dest, pre);
    }
    return kExitYes;
  }
};

struct VerifyCmd {
  std::vector<std::string> names;
  std::optional<std::size_t> n_max;

  void setup(CLI::App* cmd) {
    cmd->add_option("criteria", names, "criterion names or ids, or 'all' (default)");
    cmd->add_option("--n-max", n_max, "largest order for the reduction sweeps");
  }

  int run(Io& io) const {
    AcceptanceOptions options;
    options.n_max = n_max;
    std::vector<std::string> selected = names;
    if (selected.empty() || (selected.size() == 1 && selected[0] == "all")) {
      selected = criterion_names();
    }
    bool all_passed = true;
    json results = json::array();
    for (const std::string& name : selected) {
      const CriterionResult r = run_criterion(name, options);
      all_passed = all_passed && r.passed;
      if (io.json) {
        results.push_back({{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
      } else {
        io.out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << r.seconds
               << " s) " << r.detail << std::endl;
      }
    }
    if (io.json) {
      io.out << json{{"problem", "verify"},
                     {"answer", all_passed},
                     {"witness", json::array()},
                     {"criteria", results},
                     {"elapsed_ms", io.elapsed_ms()}}
                    .dump()
             << "\n";
    }
    return all_passed ? kExitYes : kExitNo;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Graph reconstruction toolkit"};
  app.require_subcommand(1);
  Io io{in, out, err};
  app.add_flag("--json", io.json, "print a JSON report");

  DeckCmd deck_cmd;
  CheckCmd check_cmd;
  LegitCmd legit_cmd;
  PreimagesCmd preimages_cmd;
  RnCmd rn_cmd;
  ReduceCmd reduce_cmd;
  FamilyCmd family_cmd;
  VerifyCmd verify_cmd;
  auto* deck = app.add_subcommand("deck", "build the vertex, edge or endvertex deck of a graph");
  auto* check = app.add_subcommand("check", "deck or subdeck checking");
  auto* legit = app.add_subcommand("legit", "legitimate deck decision");
  auto* preimages = app.add_subcommand("preimages", "enumerate or count preimages of a deck");
  auto* rn = app.add_subcommand("rn", "reconstruction numbers and threshold decisions");
  auto* reduce = app.add_subcommand("reduce", "build a reduction gadget");
  auto* family = app.add_subcommand("family", "emit an explicit graph family");
  auto* verify = app.add_subcommand("verify", "run acceptance criteria");
  deck_cmd.setup(deck);
  check_cmd.setup(check);
  legit_cmd.setup(legit);
  preimages_cmd.setup(preimages);
  rn_cmd.setup(rn);
  reduce_cmd.setup(reduce);
  family_cmd.setup(family);
  verify_cmd.setup(verify);
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  io.start = Clock::now();
  try {
    const std::pair<CLI::App*, std::function<int()>> handlers[] = {
        {deck, [&] { return deck_cmd.run(io); }},
        {check, [&] { return check_cmd.run(io); }},
        {legit, [&] { return legit_cmd.run(io); }},
        {preimages, [&] { return preimages_cmd.run(io); }},
        {rn, [&] { return rn_cmd.run(io); }},
        {reduce, [&] { return reduce_cmd.run(io); }},
        {family, [&] { return family_cmd.run(io); }},
        {verify, [&] { return verify_cmd.run(io); }},
    };
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) {
        return handler();
      }
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace reconkit
