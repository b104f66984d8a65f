#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "folkman/graph.hpp"

namespace folkman {

/// Factors of G as an iterated join; each factor's complement is connected.
struct JoinDecomposition {
  std::vector<Graph> factors;
  /// Vertex set of each factor in G, ordered by smallest member.
  std::vector<VertexSet> factor_vertex_sets;
};

/// Splits G into the connected components of its complement. A singleton
/// factor is a full vertex. Throws InvalidArgument on the empty graph.
JoinDecomposition join_decompose(const Graph& g);

/// Iterated join of the factors, in recorded order.
Graph rebuild(const JoinDecomposition& d);

/// A bijection p with u ~ v in g1 iff p[u] ~ p[v] in g2, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);
bool is_isomorphic(const Graph& g1, const Graph& g2);

enum class FamilyKind { KmQ, KmTripleC5, NotExtremal };

std::string to_string(FamilyKind kind);

struct FamilyClassification {
  FamilyKind kind = FamilyKind::NotExtremal;
  int m = 0;  // size of the complete part; meaningful for the two families
  int chi = 0;

  friend bool operator==(const FamilyClassification&, const FamilyClassification&) = default;
};

void to_json(nlohmann::json& j, const FamilyClassification& c);

/// Decides whether G is K_m + Q or K_m + C5 + C5 + C5.
///
/// Graphs with f(G) < 3 or |V| != chi + 6 are NotExtremal. Graphs meeting
/// both conditions must match one of the two shapes; anything else raises
/// TheoremViolation carrying the graph6 of G.
FamilyClassification classify_extremal(const Graph& g);

/// ceil(3/2 * (5k/3 - n)) = ceil((5k - 3n) / 2).
int gallai_full_vertex_bound(int k, int n);

/// Checks that a vertex-critical k-chromatic G (k >= 3) has at least
/// gallai_full_vertex_bound(k, n) full vertices. Throws InvalidArgument if
/// G is not vertex-critical or k < 3.
bool gallai_full_vertex_check(const Graph& g);

}  // namespace folkman
