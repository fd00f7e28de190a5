#pragma once

#include <cstddef>
#include <vector>

namespace fproot {

/// Adjacency lists of a directed graph on vertices 0..n-1. Parallel edges
/// and self-loops are allowed.
using Digraph = std::vector<std::vector<std::size_t>>;

struct SccDecomposition {
  /// component[v] is the component index of v. Components are numbered in
  /// reverse topological order (Tarjan's emission order): every edge u -> v
  /// has component[u] >= component[v].
  std::vector<std::size_t> component;
  std::vector<std::vector<std::size_t>> members;

  /// True when the component carries a cycle: more than one vertex, or one
  /// vertex with a self-loop.
  std::vector<bool> cyclic;
};

SccDecomposition strongly_connected_components(const Digraph& g);

}  // namespace fproot
