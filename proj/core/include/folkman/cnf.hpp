#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "folkman/arrowing.hpp"

namespace folkman {

/// Shape of an exported DIMACS instance.
struct CnfSummary {
  std::size_t variables = 0;
  std::size_t clauses = 0;
  std::size_t edges = 0;
  std::size_t at_least_one_clauses = 0;  // one per edge
  std::size_t at_most_one_clauses = 0;   // C(r, 2) per edge
  std::size_t clique_clauses = 0;        // one per (a_i-clique, colour i)
  std::size_t symmetry_units = 0;
};

/// Variable for "edge e has colour c" (both 0-based), numbered from 1.
inline int cnf_variable(std::size_t edge, int color, int colors) {
  return static_cast<int>(edge) * colors + color + 1;
}

/// Writes a DIMACS CNF whose models are exactly the good colourings of the
/// instance, so UNSAT iff the graph arrows the targets. Edges are numbered
/// in Graph::edges() order. When all targets are equal the first edge is
/// pinned to colour 1.
CnfSummary export_cnf(const ArrowingInstance& inst, std::ostream& out);

/// Same, to a file. Throws Error if the file cannot be written.
CnfSummary export_cnf(const ArrowingInstance& inst, const std::filesystem::path& path);

}  // namespace folkman
