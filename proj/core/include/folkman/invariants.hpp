#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "folkman/graph.hpp"

namespace folkman {

/// Every graph parameter the extremal theory talks about, computed exactly.
struct InvariantReport {
  int n = 0;
  int omega = 0;
  int chi = 0;
  int alpha = 0;
  int f = 0;
  bool vertex_critical = false;
  bool sperner = false;
  int full_vertices = 0;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

void to_json(nlohmann::json& j, const InvariantReport& r);

// Cliques

/// A maximum clique; lowest-id vertices win ties.
VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);

/// Size of a clique grown greedily by highest degree inside the candidate
/// set. A lower bound on clique_number.
int greedy_clique_bound(const Graph& g);

int independence_number(const Graph& g);

/// Every clique of exactly k vertices, in lexicographic order.
std::vector<VertexSet> cliques_of_size(const Graph& g, int k);

// Colorings

/// A proper coloring with colors 0..k-1, or nullopt when none exists.
/// DSATUR backtracking with first-fit symmetry breaking.
std::optional<std::vector<int>> k_coloring(const Graph& g, int k);
bool is_k_colorable(const Graph& g, int k);

/// Colors used by a plain DSATUR pass. An upper bound on chromatic_number.
int dsatur_upper_bound(const Graph& g);

int chromatic_number(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

// Derived predicates

int f_value(const Graph& g);

/// True iff chi(G - v) < chi(G) for every v. Throws InvalidArgument on the
/// empty graph.
bool is_vertex_critical(const Graph& g);

/// Same test given an already known chromatic number.
bool is_vertex_critical(const Graph& g, int chi);

/// True iff N(u) is contained in N(v) for some pair of distinct vertices.
bool is_sperner(const Graph& g);

int full_vertex_count(const Graph& g);

/// Empty graphs report all zeros and false flags.
InvariantReport report(const Graph& g);

}  // namespace folkman
