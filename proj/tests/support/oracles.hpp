#pragma once

// Test-only reference implementations. Everything here is deliberately
// naive and shares no code with the solvers under test beyond the Graph
// value type.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman::oracle {

inline bool subset_is_clique(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u) {
    if (!((s >> u) & 1U)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (((s >> v) & 1U) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline bool subset_is_independent(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u) {
    if (!((s >> u) & 1U)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (((s >> v) & 1U) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

/// Maximum over all 2^n vertex subsets.
inline int clique_number(const Graph& g) {
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t s = 0; s < total; ++s) {
    const int size = std::popcount(s);
    if (size > best && subset_is_clique(g, s)) best = size;
  }
  return best;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t s = 0; s < total; ++s) {
    const int size = std::popcount(s);
    if (size > best && subset_is_independent(g, s)) best = size;
  }
  return best;
}

/// Fewest independent sets covering V, by dynamic programming over all
/// vertex subsets: best[S] = 1 + min best[S \ I] over independent I that
/// contain the lowest vertex of S. Exponential, fine up to ~16 vertices.
inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<bool> independent(full + 1);
  for (std::uint64_t s = 0; s <= full; ++s) independent[s] = subset_is_independent(g, s);
  std::vector<int> best(full + 1, n + 1);
  best[0] = 0;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t rest = s ^ low;
    // Enumerate subsets t of rest; the class is t plus the lowest vertex.
    for (std::uint64_t t = rest;; t = (t - 1) & rest) {
      const std::uint64_t cls = t | low;
      if (independent[cls]) best[s] = std::min(best[s], best[s ^ cls] + 1);
      if (t == 0) break;
    }
  }
  return best[full];
}

/// All k-cliques via subset enumeration.
inline std::vector<std::uint64_t> cliques(const Graph& g, int k) {
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t s = 0; s < total; ++s) {
    if (std::popcount(s) == k && subset_is_clique(g, s)) out.push_back(s);
  }
  return out;
}

/// Result of enumerating all r^|E| edge colourings.
struct ColoringCensus {
  std::uint64_t total = 0;
  std::uint64_t good = 0;
};

/// Counts good colourings (no colour i containing an a_i-clique) by
/// visiting every colouring. Intended for r^|E| up to a few million.
inline ColoringCensus census(const Graph& g, const std::vector<int>& targets) {
  const std::vector<Edge> edges = g.edges();
  const int r = static_cast<int>(targets.size());
  std::vector<std::vector<std::vector<int>>> clique_edges(static_cast<std::size_t>(r));
  for (int c = 0; c < r; ++c) {
    for (std::uint64_t k : cliques(g, targets[static_cast<std::size_t>(c)])) {
      std::vector<int> es;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (((k >> edges[e].first) & 1U) && ((k >> edges[e].second) & 1U)) es.push_back(static_cast<int>(e));
      }
      clique_edges[static_cast<std::size_t>(c)].push_back(es);
    }
  }
  ColoringCensus out;
  std::vector<int> color(edges.size(), 0);
  while (true) {
    ++out.total;
    bool good = true;
    for (int c = 0; c < r && good; ++c) {
      for (const auto& es : clique_edges[static_cast<std::size_t>(c)]) {
        if (std::all_of(es.begin(), es.end(), [&](int e) { return color[static_cast<std::size_t>(e)] == c; })) {
          good = false;
          break;
        }
      }
    }
    out.good += good;
    std::size_t i = 0;
    while (i < color.size() && ++color[i] == r) color[i++] = 0;
    if (i == color.size()) break;
  }
  return out;
}

/// A DIMACS CNF as read back from text.
struct Cnf {
  int declared_variables = 0;
  int declared_clauses = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::string> comments;
};

inline Cnf parse_dimacs(std::istream& in) {
  Cnf cnf;
  std::string line;
  bool header = false;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      cnf.comments.push_back(line);
      continue;
    }
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.declared_variables >> cnf.declared_clauses;
      if (fmt != "cnf") throw std::runtime_error("not a cnf header");
      header = true;
      continue;
    }
    if (!header) throw std::runtime_error("clause before header");
    int lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!current.empty()) throw std::runtime_error("unterminated clause");
  return cnf;
}

/// Plain DPLL: unit propagation plus chronological branching on the lowest
/// unassigned variable, false first. Returns a model when satisfiable.
class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : cnf_(cnf), value_(static_cast<std::size_t>(cnf.declared_variables) + 1, 0) {}

  std::optional<std::vector<int>> solve() {
    if (search()) return value_;
    return std::nullopt;
  }

  std::uint64_t decisions() const { return decisions_; }

 private:
  int lit_value(int lit) const {
    const int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : -v;
  }

  // 0 = conflict, 1 = fine. Appends forced literals to trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : cnf_.clauses) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : clause) {
          const int v = lit_value(lit);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          value_[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last));
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) value_[static_cast<std::size_t>(v)] = 0;
      return false;
    }
    int pick = 0;
    for (int v = 1; v <= cnf_.declared_variables; ++v) {
      if (value_[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == 0) return true;
    for (int val : {-1, 1}) {
      ++decisions_;
      value_[static_cast<std::size_t>(pick)] = val;
      if (search()) return true;
      value_[static_cast<std::size_t>(pick)] = 0;
    }
    for (int v : trail) value_[static_cast<std::size_t>(v)] = 0;
    return false;
  }

  const Cnf& cnf_;
  std::vector<int> value_;
  std::uint64_t decisions_ = 0;
};

inline bool satisfiable(const Cnf& cnf) { return Dpll(cnf).solve().has_value(); }

/// Number of automorphisms by trying all n! permutations.
inline std::uint64_t automorphism_count(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v) != g.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) {
          ok = false;
          break;
        }
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Smallest upper-triangle mask over all n! relabelings; equal iff isomorphic.
inline std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    int k = 0;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u, ++k) {
        if (g.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) mask |= std::uint64_t{1} << k;
      }
    }
    best = std::min(best, mask);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_mask(a) == canonical_mask(b);
}

/// The graph whose upper-triangle bits (pairs in graph6 column order) are
/// given by mask.
inline Graph from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1U) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace folkman::oracle
