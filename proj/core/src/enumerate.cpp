#include "folkman/enumerate.hpp"

#include <array>
#include <string>

#include "folkman/errors.hpp"

namespace folkman {
namespace {

// Searches for a relabeling whose bit string is smaller than g's own. Vertex
// j of the relabeled graph is image[j] of g; columns are compared as soon
// as they are fully determined.
class CanonicalityTest {
 public:
  explicit CanonicalityTest(const Graph& g) : g_(g) {}

  bool smaller_exists() { return place(0, 0); }

 private:
  bool place(int j, VertexSet used) {
    const int n = g_.order();
    if (j == n) return false;
    for (int v = 0; v < n; ++v) {
      if ((used & bit(v)) != 0) continue;
      image_[static_cast<std::size_t>(j)] = v;
      int cmp = 0;
      for (int i = 0; i < j && cmp == 0; ++i) {
        const bool relabeled = g_.adjacent(image_[static_cast<std::size_t>(i)], v);
        const bool own = g_.adjacent(i, j);
        if (relabeled != own) cmp = relabeled ? 1 : -1;
      }
      if (cmp < 0) return true;
      if (cmp == 0 && place(j + 1, used | bit(v))) return true;
    }
    return false;
  }

  const Graph& g_;
  std::array<int, kMaxVertices> image_{};
};

}  // namespace

bool is_canonical(const Graph& g) { return !CanonicalityTest(g).smaller_exists(); }

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw InvalidArgument("built-in enumeration covers 0.." + std::to_string(kMaxEnumerationOrder) +
                          " vertices; got " + std::to_string(n) + " (supply a graph6 file instead)");
  }
  std::vector<Graph> level{Graph{}};
  for (int k = 1; k <= n; ++k) {
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      for (VertexSet s = 0; s <= first_n(k - 1); ++s) {
        GraphBuilder b(k);
        for (const auto& [u, v] : parent.edges()) b.add_edge(u, v);
        b.connect(k - 1, s);
        Graph child = std::move(b).build();
        if (is_canonical(child)) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace folkman
