#include "folkman/structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

#include "folkman/constructions.hpp"
#include "folkman/errors.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"

namespace folkman {
namespace {

VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start);
  VertexSet frontier = bit(start);
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (rest != 0) {
    const VertexSet c = component_of(g, std::countr_zero(rest), rest);
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

int triangles_at(const Graph& g, int v) {
  int twice = 0;
  for_each_vertex(g.neighbors(v), [&](int u) { twice += popcount(g.neighbors(u) & g.neighbors(v)); });
  return twice / 2;
}

// Colour refinement run on both graphs with a shared palette so that the
// resulting classes are comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_jointly(const Graph& a, const Graph& b) {
  const Graph* graphs[2] = {&a, &b};
  std::vector<int> color[2];
  std::map<std::pair<int, int>, int> initial;
  for (int side = 0; side < 2; ++side) {
    const Graph& g = *graphs[side];
    for (int v = 0; v < g.order(); ++v) initial.try_emplace({g.degree(v), triangles_at(g, v)}, 0);
  }
  int next_id = 0;
  for (auto& [key, id] : initial) id = next_id++;
  for (int side = 0; side < 2; ++side) {
    const Graph& g = *graphs[side];
    for (int v = 0; v < g.order(); ++v) color[side].push_back(initial.at({g.degree(v), triangles_at(g, v)}));
  }

  int classes = next_id;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    std::vector<std::pair<int, std::vector<int>>> sig[2];
    for (int side = 0; side < 2; ++side) {
      const Graph& g = *graphs[side];
      for (int v = 0; v < g.order(); ++v) {
        std::vector<int> around;
        for_each_vertex(g.neighbors(v), [&](int u) { around.push_back(color[side][static_cast<std::size_t>(u)]); });
        std::sort(around.begin(), around.end());
        sig[side].emplace_back(color[side][static_cast<std::size_t>(v)], std::move(around));
        palette.try_emplace(sig[side].back(), 0);
      }
    }
    int id = 0;
    for (auto& [key, value] : palette) value = id++;
    for (int side = 0; side < 2; ++side) {
      for (std::size_t v = 0; v < sig[side].size(); ++v) color[side][v] = palette.at(sig[side][v]);
    }
    if (id == classes) break;
    classes = id;
  }
  return {std::move(color[0]), std::move(color[1])};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), map_(static_cast<std::size_t>(a.order()), -1) {
    // Smallest classes first, then vertices adjacent to those already placed.
    std::map<int, int> class_size;
    for (int c : ca_) ++class_size[c];
    VertexSet placed = 0;
    for (int step = 0; step < a_.order(); ++step) {
      int pick = -1;
      std::tuple<int, int, int> best{};
      for_each_vertex(a_.vertices() & ~placed, [&](int v) {
        std::tuple<int, int, int> key{-class_size[ca_[static_cast<std::size_t>(v)]],
                                      popcount(a_.neighbors(v) & placed), -v};
        if (pick < 0 || key > best) {
          best = key;
          pick = v;
        }
      });
      order_.push_back(pick);
      placed |= bit(pick);
    }
  }

  std::optional<std::vector<int>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int v = 0; v < b_.order(); ++v) {
      if ((used_ & bit(v)) != 0 || cb_[static_cast<std::size_t>(v)] != ca_[static_cast<std::size_t>(u)]) continue;
      if (!consistent(u, v)) continue;
      map_[static_cast<std::size_t>(u)] = v;
      used_ |= bit(v);
      if (extend(depth + 1)) return true;
      used_ &= ~bit(v);
      map_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  bool consistent(int u, int v) const {
    bool ok = true;
    for_each_vertex(mapped_a(), [&](int w) {
      if (a_.adjacent(u, w) != b_.adjacent(v, map_[static_cast<std::size_t>(w)])) ok = false;
    });
    return ok;
  }

  VertexSet mapped_a() const {
    VertexSet s = 0;
    for (std::size_t i = 0; i < map_.size(); ++i) {
      if (map_[i] >= 0) s |= bit(static_cast<int>(i));
    }
    return s;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_;
  std::vector<int> cb_;
  std::vector<int> map_;
  std::vector<int> order_;
  VertexSet used_ = 0;
};

}  // namespace

JoinDecomposition join_decompose(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("join decomposition of the empty graph");
  JoinDecomposition d;
  d.factor_vertex_sets = components(complement(g));
  for (VertexSet s : d.factor_vertex_sets) d.factors.push_back(induced_subgraph(g, s));
  return d;
}

Graph rebuild(const JoinDecomposition& d) {
  Graph g;
  for (const auto& f : d.factors) g = join(g, f);
  return g;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto [c1, c2] = refine_jointly(g1, g2);
  auto s1 = c1;
  auto s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  return IsoSearch(g1, g2, std::move(c1), std::move(c2)).run();
}

bool is_isomorphic(const Graph& g1, const Graph& g2) { return find_isomorphism(g1, g2).has_value(); }

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::KmQ: return "KmQ";
    case FamilyKind::KmTripleC5: return "KmTripleC5";
    case FamilyKind::NotExtremal: return "NotExtremal";
  }
  return "NotExtremal";
}

void to_json(nlohmann::json& j, const FamilyClassification& c) {
  j = nlohmann::json{{"kind", to_string(c.kind)}, {"chi", c.chi}};
  if (c.kind != FamilyKind::NotExtremal) j["m"] = c.m;
}

FamilyClassification classify_extremal(const Graph& g) {
  FamilyClassification out;
  if (g.order() == 0) return out;
  const int omega = clique_number(g);
  out.chi = chromatic_number(g);
  if (out.chi - omega < 3 || g.order() != out.chi + 6) return out;

  std::vector<Graph> rest;
  int singletons = 0;
  for (VertexSet s : components(complement(g))) {
    if (popcount(s) == 1) {
      ++singletons;
    } else {
      rest.push_back(induced_subgraph(g, s));
    }
  }
  out.m = singletons;

  if (rest.size() == 1 && rest[0].order() == 13 && is_isomorphic(rest[0], kery_q())) {
    out.kind = FamilyKind::KmQ;
  } else if (rest.size() == 3 && std::all_of(rest.begin(), rest.end(), [](const Graph& f) {
               return f.order() == 5 && is_isomorphic(f, cycle(5));
             })) {
    out.kind = FamilyKind::KmTripleC5;
  } else {
    throw TheoremViolation("graph with f >= 3 and |V| = chi + 6 is neither K_m+Q nor K_m+C5+C5+C5",
                           emit_graph6(g));
  }

  const int expected_chi = out.m + (out.kind == FamilyKind::KmQ ? 7 : 9);
  if (out.chi != expected_chi) {
    throw TheoremViolation("extremal family member with inconsistent chromatic number", emit_graph6(g));
  }
  return out;
}

int gallai_full_vertex_bound(int k, int n) {
  const int twice = 5 * k - 3 * n;
  // ceil(twice / 2) for either sign
  return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2);
}

bool gallai_full_vertex_check(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("full-vertex bound needs a non-empty graph");
  const int k = chromatic_number(g);
  if (k < 3) throw InvalidArgument("full-vertex bound needs chromatic number at least 3");
  if (!is_vertex_critical(g, k)) throw InvalidArgument("full-vertex bound needs a vertex-critical graph");
  const int bound = gallai_full_vertex_bound(k, g.order());
  if (bound <= 0) return true;
  return full_vertex_count(g) >= bound;
}

}  // namespace folkman
