#ifndef RECONKIT_GRAPH6_HPP
#define RECONKIT_GRAPH6_HPP

#include <string>
#include <string_view>

#include "reconkit/graph.hpp"

namespace reconkit {

/// Standard graph6 line (no trailing newline, no ">>graph6<<" header).
std::string encode_graph6(const Graph& g);

/// Parses one graph6 line. An optional ">>graph6<<" header and trailing CR/LF are accepted.
/// Throws ParseError carrying the byte offset of the first offending character.
Graph decode_graph6(std::string_view line);

}  // namespace reconkit

#endif  // RECONKIT_GRAPH6_HPP
