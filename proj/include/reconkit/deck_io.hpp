#ifndef RECONKIT_DECK_IO_HPP
#define RECONKIT_DECK_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reconkit/deck.hpp"
#include "reconkit/graph.hpp"

namespace reconkit {

/// Key/value pairs from the first comment line, e.g. "# kind=edge c=2 reduction=gi_to_led".
struct DeckMetadata {
  std::optional<DeckKind> kind;
  std::optional<std::size_t> c;
  std::vector<std::pair<std::string, std::string>> extra;
};

struct GraphFile {
  DeckMetadata metadata;
  std::vector<Graph> graphs;
};

/// Newline-separated graph6, '#' lines and blank lines ignored. Errors are InputErrors prefixed
/// with "<source>:<line>: ".
GraphFile read_graph_file(std::istream& in, const std::string& source);

/// "# kind=<kind> [c=<c>] [key=value ...]".
std::string format_metadata(const DeckMetadata& metadata);

/// Metadata line (when `metadata` carries anything) followed by one graph6 line per card.
void write_deck_file(std::ostream& out, const Deck& deck, const DeckMetadata& metadata);
void write_graphs(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace reconkit

#endif  // RECONKIT_DECK_IO_HPP
