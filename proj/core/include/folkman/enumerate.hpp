#pragma once

#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

inline constexpr int kMaxEnumerationOrder = 7;

/// True iff g's upper-triangle bit string, read in graph6 column order, is
/// lexicographically smallest over all relabelings of g.
bool is_canonical(const Graph& g);

/// One representative per isomorphism class of graphs on n vertices, each
/// in canonical labeling. Built by extending canonical graphs on n-1
/// vertices with a new last vertex and keeping canonical results. Throws
/// InvalidArgument for n < 0 or n > 7; larger orders come from external
/// graph6 files.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace folkman
