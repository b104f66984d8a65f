#include "folkman/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "folkman/errors.hpp"

namespace folkman {

Graph complete(int m) {
  GraphBuilder b(m);
  for (int u = 0; u < m; ++u) b.connect(u, first_n(m) & ~first_n(u + 1));
  return std::move(b).build("K" + std::to_string(m));
}

Graph cycle(int m) {
  if (m < 3) throw InvalidArgument("cycle needs at least 3 vertices, got " + std::to_string(m));
  GraphBuilder b(m);
  for (int u = 0; u < m; ++u) b.add_edge(u, (u + 1) % m);
  return std::move(b).build("C" + std::to_string(m));
}

CirculantResult make_circulant(int m, std::span<const int> connections) {
  if (m < 1) throw InvalidArgument("circulant needs m >= 1");
  std::set<int> given;
  for (int d : connections) {
    if (d < 1 || d > m - 1) {
      throw InvalidArgument("residue " + std::to_string(d) + " outside 1.." + std::to_string(m - 1));
    }
    given.insert(d);
  }
  std::set<int> closed = given;
  for (int d : given) closed.insert(m - d);

  GraphBuilder b(m);
  for (int u = 0; u < m; ++u) {
    for (int d : closed) b.add_edge(u, (u + d) % m);
  }
  std::string label = "circulant(" + std::to_string(m) + ",{";
  bool first = true;
  for (int d : closed) {
    label += (first ? "" : ",") + std::to_string(d);
    first = false;
  }
  label += "})";
  return {std::move(b).build(std::move(label)), closed.size() != given.size()};
}

Graph circulant(int m, std::span<const int> connections) {
  return make_circulant(m, connections).graph;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > kMaxVertices) {
    throw CapacityError("join of " + std::to_string(n1) + " and " + std::to_string(n2) +
                        " vertices exceeds the 64-vertex capacity");
  }
  GraphBuilder b(n1 + n2);
  const VertexSet right = first_n(n1 + n2) & ~first_n(n1);
  for (int u = 0; u < n1; ++u) b.connect(u, g1.neighbors(u) | right);
  for (int u = 0; u < n2; ++u) b.connect(n1 + u, g2.neighbors(u) << n1);
  std::string label;
  if (!g1.label().empty() && !g2.label().empty()) label = g1.label() + "+" + g2.label();
  return std::move(b).build(std::move(label));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) b.connect(u, ~g.neighbors(u) & first_n(n) & ~bit(u) & ~first_n(u));
  return std::move(b).build(g.label().empty() ? std::string{} : "co(" + g.label() + ")");
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for_each_vertex(keep, [&](int v) { index[static_cast<std::size_t>(v)] = k++; });
  GraphBuilder b(k);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(g.neighbors(u) & keep & ~first_n(u + 1), [&](int v) {
      b.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    });
  });
  return std::move(b).build();
}

Graph remove_vertices(const Graph& g, VertexSet vs) {
  if ((vs & ~g.vertices()) != 0) {
    throw InvalidArgument("vertex set contains ids outside 0.." + std::to_string(g.order() - 1));
  }
  return induced_subgraph(g, g.vertices() & ~vs);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & bit(p)) != 0) throw InvalidArgument("not a permutation");
    seen |= bit(p);
  }
  GraphBuilder b(n);
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return std::move(b).build(g.label());
}

Graph kery_q() {
  static const int kConnections[] = {1, 5, 8, 12};
  return complement(circulant(13, kConnections)).with_label("Q");
}

}  // namespace folkman
