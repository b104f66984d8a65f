#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace folkman {

inline constexpr int kMaxVertices = 64;

/// Vertex subset of a graph on at most 64 vertices; bit v is vertex v.
using VertexSet = std::uint64_t;

using Edge = std::pair<int, int>;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// The set {0, ..., n-1}.
constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }

/// Calls fn(v) for every vertex v of s in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

/// Immutable simple undirected graph with bitset adjacency rows.
///
/// Vertices are 0..order()-1. The label is free-form provenance text and
/// does not take part in equality.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws CapacityError for n > 64 and
  /// InvalidArgument for loops or out-of-range endpoints. Duplicate edges
  /// are merged.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          std::string label = {});

  int order() const { return n_; }
  VertexSet vertices() const { return first_n(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const { return popcount(neighbors(v)); }
  std::size_t edge_count() const;

  /// Edges as (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::string label_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return g_.n_; }
  GraphBuilder& add_edge(int u, int v);
  /// Adds every edge between u and the members of s.
  GraphBuilder& connect(int u, VertexSet s);
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }

  Graph build(std::string label = {}) &&;

 private:
  void check_vertex(int v) const;

  Graph g_;
};

}  // namespace folkman
