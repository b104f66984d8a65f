#include "folkman/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "folkman/invariants.hpp"

namespace folkman {

CnfSummary export_cnf(const ArrowingInstance& inst, std::ostream& out) {
  validate_targets(inst.targets);
  const Graph& g = inst.graph;
  const int r = static_cast<int>(inst.targets.size());
  const std::vector<Edge> edges = g.edges();

  std::vector<std::vector<int>> index(static_cast<std::size_t>(g.order()),
                                      std::vector<int>(static_cast<std::size_t>(g.order()), -1));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    index[static_cast<std::size_t>(edges[e].first)][static_cast<std::size_t>(edges[e].second)] = static_cast<int>(e);
  }

  CnfSummary sum;
  sum.edges = edges.size();
  sum.variables = edges.size() * static_cast<std::size_t>(r);

  std::ostringstream body;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (int c = 0; c < r; ++c) body << cnf_variable(e, c, r) << ' ';
    body << "0\n";
    ++sum.at_least_one_clauses;
    for (int c = 0; c < r; ++c) {
      for (int d = c + 1; d < r; ++d) {
        body << -cnf_variable(e, c, r) << ' ' << -cnf_variable(e, d, r) << " 0\n";
        ++sum.at_most_one_clauses;
      }
    }
  }
  for (int c = 0; c < r; ++c) {
    for (VertexSet k : cliques_of_size(g, inst.targets[static_cast<std::size_t>(c)])) {
      for_each_vertex(k, [&](int u) {
        for_each_vertex(k & ~first_n(u + 1), [&](int v) {
          const auto e = static_cast<std::size_t>(index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
          body << -cnf_variable(e, c, r) << ' ';
        });
      });
      body << "0\n";
      ++sum.clique_clauses;
    }
  }
  const bool symmetric = std::adjacent_find(inst.targets.begin(), inst.targets.end(), std::not_equal_to<>()) ==
                         inst.targets.end();
  if (symmetric && r > 1 && !edges.empty()) {
    body << cnf_variable(0, 0, r) << " 0\n";
    ++sum.symmetry_units;
  }
  sum.clauses = sum.at_least_one_clauses + sum.at_most_one_clauses + sum.clique_clauses + sum.symmetry_units;

  out << "c good edge colourings of a graph on " << g.order() << " vertices, targets (" << to_string(inst.targets)
      << ")\n";
  out << "c variable e*" << r << "+c+1 means edge e has colour c+1\n";
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << "c edge " << e << " = " << edges[e].first << ' ' << edges[e].second << '\n';
  }
  out << "p cnf " << sum.variables << ' ' << sum.clauses << '\n';
  out << body.str();
  return sum;
}

CnfSummary export_cnf(const ArrowingInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  CnfSummary sum = export_cnf(inst, out);
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
  return sum;
}

}  // namespace folkman
