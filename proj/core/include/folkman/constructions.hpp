#pragma once

#include <span>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// K_m. Throws CapacityError for m > 64.
Graph complete(int m);

/// C_m. Throws InvalidArgument for m < 3.
Graph cycle(int m);

struct CirculantResult {
  Graph graph;
  /// True when closing the connection set under d -> m-d added residues.
  bool closure_added = false;
};

/// Circulant graph on Z_m: u ~ v iff (u - v) mod m is a connection.
/// The connection set is closed under negation before use.
CirculantResult make_circulant(int m, std::span<const int> connections);
Graph circulant(int m, std::span<const int> connections);

/// Disjoint copies of g1 and g2 plus every edge between them. The vertices
/// of g1 keep their ids; g2's vertex v becomes g1.order() + v.
Graph join(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

/// Subgraph induced by `keep`, relabeled densely in increasing id order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// G - vs. Throws InvalidArgument when vs holds ids >= order().
Graph remove_vertices(const Graph& g, VertexSet vs);

/// Image of g under a vertex permutation: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// The 13-vertex graph with independence number 2 and clique number 4,
/// realized as the complement of the circulant C13(1, 5).
Graph kery_q();

}  // namespace folkman
