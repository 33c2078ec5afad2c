#ifndef RECONKIT_ENUMERATE_HPP
#define RECONKIT_ENUMERATE_HPP

#include <cstddef>
#include <vector>

#include "reconkit/graph.hpp"

namespace reconkit {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// One canonical representative per isomorphism class on n vertices, sorted by certificate.
/// Throws CapacityError for n > kMaxEnumerationOrder.
const std::vector<Graph>& enumerate_graphs(std::size_t n);

/// The connected members of enumerate_graphs(n), same order.
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

}  // namespace reconkit

#endif  // RECONKIT_ENUMERATE_HPP
