#include "folkman/invariants.hpp"

#include <array>

#include "folkman/constructions.hpp"
#include "folkman/errors.hpp"

namespace folkman {
namespace {

// Branch and bound over candidate sets, bounded by a greedy coloring of the
// candidates (vertices are expanded in reverse color order).
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(0, 0, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet current, int size, VertexSet candidates) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_ = current;
        best_size_ = size;
      }
      return;
    }
    std::array<int, kMaxVertices> order{};
    std::array<int, kMaxVertices> bound{};
    int count = 0;
    VertexSet uncolored = candidates;
    for (int color = 1; uncolored != 0; ++color) {
      VertexSet open = uncolored;
      while (open != 0) {
        const int v = std::countr_zero(open);
        open &= ~bit(v) & ~g_.neighbors(v);
        uncolored &= ~bit(v);
        order[static_cast<std::size_t>(count)] = v;
        bound[static_cast<std::size_t>(count)] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[static_cast<std::size_t>(i)] <= best_size_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(current | bit(v), size + 1, candidates & g_.neighbors(v));
      candidates &= ~bit(v);
    }
  }

  const Graph& g_;
  VertexSet best_ = 0;
  int best_size_ = 0;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k) : g_(g), k_(k), colors_(static_cast<std::size_t>(g.order()), -1) {}

  std::optional<std::vector<int>> run() {
    if (g_.order() == 0) return colors_;
    if (k_ <= 0) return std::nullopt;
    if (k_ > g_.order()) k_ = g_.order();
    if (search(g_.vertices(), 0)) return colors_;
    return std::nullopt;
  }

 private:
  // Colors of the classes that intersect N(v), as a bitmask over 0..used-1.
  std::uint64_t blocked(int v, int used) const {
    std::uint64_t mask = 0;
    const VertexSet nb = g_.neighbors(v);
    for (int c = 0; c < used; ++c) {
      if ((classes_[static_cast<std::size_t>(c)] & nb) != 0) mask |= std::uint64_t{1} << c;
    }
    return mask;
  }

  bool search(VertexSet uncolored, int used) {
    if (uncolored == 0) return true;

    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    std::uint64_t pick_blocked = 0;
    for (VertexSet s = uncolored; s != 0; s &= s - 1) {
      const int v = std::countr_zero(s);
      const std::uint64_t b = blocked(v, used);
      const int sat = std::popcount(b);
      if (sat == k_) return false;
      const int deg = popcount(g_.neighbors(v) & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        pick_blocked = b;
      }
    }

    const std::uint64_t all_used = used >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
    std::uint64_t options = all_used & ~pick_blocked;
    const auto v = static_cast<std::size_t>(pick);
    for (; options != 0; options &= options - 1) {
      const int c = std::countr_zero(options);
      classes_[static_cast<std::size_t>(c)] |= bit(pick);
      colors_[v] = c;
      if (search(uncolored & ~bit(pick), used)) return true;
      classes_[static_cast<std::size_t>(c)] &= ~bit(pick);
    }
    if (used < k_) {
      classes_[static_cast<std::size_t>(used)] = bit(pick);
      colors_[v] = used;
      if (search(uncolored & ~bit(pick), used + 1)) return true;
      classes_[static_cast<std::size_t>(used)] = 0;
    }
    colors_[v] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colors_;
  std::array<VertexSet, kMaxVertices> classes_{};
};

void collect_cliques(const Graph& g, int k, VertexSet current, VertexSet candidates,
                     std::vector<VertexSet>& out) {
  if (popcount(current) == k) {
    out.push_back(current);
    return;
  }
  const int need = k - popcount(current);
  while (popcount(candidates) >= need) {
    const int v = std::countr_zero(candidates);
    candidates &= ~bit(v);
    collect_cliques(g, k, current | bit(v), candidates & g.neighbors(v), out);
  }
}

}  // namespace

void to_json(nlohmann::json& j, const InvariantReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"omega", r.omega},
                     {"chi", r.chi},
                     {"alpha", r.alpha},
                     {"f", r.f},
                     {"vertex_critical", r.vertex_critical},
                     {"sperner", r.sperner},
                     {"full_vertices", r.full_vertices}};
}

VertexSet maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

int clique_number(const Graph& g) { return popcount(maximum_clique(g)); }

int greedy_clique_bound(const Graph& g) {
  VertexSet candidates = g.vertices();
  int size = 0;
  while (candidates != 0) {
    int pick = -1;
    int best = -1;
    for_each_vertex(candidates, [&](int v) {
      const int d = popcount(g.neighbors(v) & candidates);
      if (d > best) {
        best = d;
        pick = v;
      }
    });
    ++size;
    candidates &= g.neighbors(pick);
  }
  return size;
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

std::vector<VertexSet> cliques_of_size(const Graph& g, int k) {
  std::vector<VertexSet> out;
  if (k <= 0) {
    out.push_back(0);
    return out;
  }
  collect_cliques(g, k, 0, g.vertices(), out);
  return out;
}

std::optional<std::vector<int>> k_coloring(const Graph& g, int k) { return ColoringSearch(g, k).run(); }

bool is_k_colorable(const Graph& g, int k) { return k_coloring(g, k).has_value(); }

int dsatur_upper_bound(const Graph& g) {
  std::array<VertexSet, kMaxVertices> classes{};
  int used = 0;
  VertexSet uncolored = g.vertices();
  while (uncolored != 0) {
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for_each_vertex(uncolored, [&](int v) {
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (classes[static_cast<std::size_t>(c)] & g.neighbors(v)) != 0;
      const int deg = popcount(g.neighbors(v) & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    int c = 0;
    while (c < used && (classes[static_cast<std::size_t>(c)] & g.neighbors(pick)) != 0) ++c;
    if (c == used) ++used;
    classes[static_cast<std::size_t>(c)] |= bit(pick);
    uncolored &= ~bit(pick);
  }
  return used;
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int upper = dsatur_upper_bound(g);
  for (int k = clique_number(g); k < upper; ++k) {
    if (is_k_colorable(g, k)) return k;
  }
  return upper;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

int f_value(const Graph& g) { return chromatic_number(g) - clique_number(g); }

bool is_vertex_critical(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("vertex criticality is undefined on the empty graph");
  return is_vertex_critical(g, chromatic_number(g));
}

bool is_vertex_critical(const Graph& g, int chi) {
  if (g.order() == 0) throw InvalidArgument("vertex criticality is undefined on the empty graph");
  for (int v = 0; v < g.order(); ++v) {
    if (!is_k_colorable(remove_vertices(g, bit(v)), chi - 1)) return false;
  }
  return true;
}

bool is_sperner(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && (g.neighbors(u) & ~g.neighbors(v)) == 0) return true;
    }
  }
  return false;
}

int full_vertex_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == g.order() - 1;
  return count;
}

InvariantReport report(const Graph& g) {
  InvariantReport r;
  r.n = g.order();
  if (r.n == 0) return r;
  r.omega = clique_number(g);
  r.chi = chromatic_number(g);
  r.alpha = independence_number(g);
  r.f = r.chi - r.omega;
  r.vertex_critical = is_vertex_critical(g, r.chi);
  r.sperner = is_sperner(g);
  r.full_vertices = full_vertex_count(g);
  return r;
}

}  // namespace folkman
