#include "folkman/graph.hpp"

#include <string>

#include "folkman/errors.hpp"

namespace folkman {

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::string label) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build(std::move(label));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(neighbors(u) & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v) {
    if (a.neighbors(v) != b.neighbors(v)) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph on " + std::to_string(n) + " vertices exceeds the 64-vertex capacity");
  }
  g_.n_ = n;
}

void GraphBuilder::check_vertex(int v) const {
  if (v < 0 || v >= g_.n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g_.n_));
  }
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  g_.adj_[static_cast<std::size_t>(u)] |= bit(v);
  g_.adj_[static_cast<std::size_t>(v)] |= bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::connect(int u, VertexSet s) {
  for_each_vertex(s, [&](int v) { add_edge(u, v); });
  return *this;
}

Graph GraphBuilder::build(std::string label) && {
  g_.label_ = std::move(label);
  return std::move(g_);
}

}  // namespace folkman
