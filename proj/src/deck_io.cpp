#include "reconkit/deck_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "reconkit/errors.hpp"
#include "reconkit/graph6.hpp"

namespace reconkit {

namespace {

std::string located(const std::string& source, std::size_t line, const std::string& message) {
  return source + ":" + std::to_string(line) + ": " + message;
}

DeckMetadata parse_metadata(std::string_view text, const std::string& source, std::size_t line) {
  DeckMetadata meta;
  std::istringstream tokens{std::string(text)};
  std::string token;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      continue;
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    try {
      if (key == "kind") {
        meta.kind = parse_deck_kind(value);
      } else if (key == "c") {
        std::size_t used = 0;
        const unsigned long c = std::stoul(value, &used);
        if (used != value.size()) {
          throw InputError("bad c value '" + value + "'");
        }
        meta.c = c;
      } else {
        meta.extra.emplace_back(std::move(key), std::move(value));
      }
    } catch (const InputError& e) {
      throw InputError(located(source, line, e.what()));
    } catch (const std::exception&) {
      throw InputError(located(source, line, "bad " + key + " value '" + value + "'"));
    }
  }
  return meta;
}

}  // namespace

GraphFile read_graph_file(std::istream& in, const std::string& source) {
  GraphFile file;
  bool metadata_seen = false;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') {
      text.pop_back();
    }
    if (text.empty()) {
      continue;
    }
    if (text.front() == '#') {
      // Only the first comment line can carry metadata.
      if (!metadata_seen) {
        file.metadata = parse_metadata(std::string_view(text).substr(1), source, line);
        metadata_seen = true;
      }
      continue;
    }
    try {
      file.graphs.push_back(decode_graph6(text));
    } catch (const Error& e) {
      throw InputError(located(source, line, e.what()));
    }
  }
  return file;
}

std::string format_metadata(const DeckMetadata& metadata) {
  std::string out = "#";
  if (metadata.kind) {
    out += " kind=";
    out += to_string(*metadata.kind);
  }
  if (metadata.c) {
    out += " c=" + std::to_string(*metadata.c);
  }
  for (const auto& [key, value] : metadata.extra) {
    out += " " + key + "=" + value;
  }
  return out;
}

void write_deck_file(std::ostream& out, const Deck& deck, const DeckMetadata& metadata) {
  DeckMetadata meta = metadata;
  if (!meta.kind) {
    meta.kind = deck.kind();
  }
  out << format_metadata(meta) << '\n';
  for (const Card& card : deck.cards()) {
    out << encode_graph6(card.graph) << '\n';
  }
}

void write_graphs(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) {
    out << encode_graph6(g) << '\n';
  }
}

}  // namespace reconkit
