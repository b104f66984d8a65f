#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "folkman/errors.hpp"
#include "folkman/graph.hpp"

namespace folkman {

/// Clique sizes a_1..a_r, one per colour.
using Targets = std::vector<int>;

/// Throws InvalidArgument unless targets is non-empty and every a_i >= 2.
void validate_targets(const Targets& targets);

/// Parses "3,4" or "3, 3, 3". Throws ParseError.
Targets parse_targets(const std::string& text);
std::string to_string(const Targets& targets);

struct ArrowingInstance {
  Graph graph;
  Targets targets;
};

/// Edge colouring with colours 1..r, keyed by (u, v), u < v.
struct EdgeColoring {
  std::map<Edge, int> colors;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

void to_json(nlohmann::json& j, const EdgeColoring& c);

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000;
  std::chrono::milliseconds max_time{std::chrono::minutes(10)};
  /// Worker threads for subtree exploration. Verdicts and witnesses do not
  /// depend on this value.
  int jobs = 1;
};

/// Reads FOLKMAN_BUDGET_NODES when set; otherwise the defaults above.
SearchBudget default_budget();

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

/// Raised when a search hits its node or time cap. Recoverable: callers can
/// fall back to export_cnf.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, SearchStats stats) : Error(what), stats_(stats) {}
  const SearchStats& stats() const noexcept { return stats_; }

 private:
  SearchStats stats_;
};

struct ArrowingVerdict {
  bool arrows = false;
  /// A good colouring; present iff arrows is false.
  std::optional<EdgeColoring> witness;
  SearchStats stats;
};

void to_json(nlohmann::json& j, const ArrowingVerdict& v);

/// True iff the colouring is good: no colour i contains a monochromatic
/// a_i-clique. Throws InvalidArgument when its domain is not exactly E(G)
/// or a colour lies outside 1..r.
bool check_coloring(const ArrowingInstance& inst, const EdgeColoring& coloring);

/// Decides G -> (a_1, ..., a_r) by exhaustive search. A negative verdict
/// carries the first good colouring in the search's fixed edge order.
ArrowingVerdict arrows(const ArrowingInstance& inst, const SearchBudget& budget = default_budget());

struct RamseyResult {
  int value = 0;
  /// Good colouring of K_{value-1}.
  EdgeColoring witness;
  SearchStats stats;
};

/// Least n with K_n -> targets, scanning n upward.
RamseyResult ramsey(const Targets& targets, const SearchBudget& budget = default_budget());

/// G belongs to H_e(targets; q): clique number below q and G arrows.
bool he_member(const Graph& g, const Targets& targets, int q, const SearchBudget& budget = default_budget());

/// The Folkman number F_e(targets; q) exists iff q > max(targets).
bool folkman_exists(const Targets& targets, int q);

/// Lower bound R + 6 on F_e(targets; R - 2). Needs r >= 2 and every a_i >= 3.
int folkman_lower_bound(const Targets& targets, int ramsey_value);

/// chi(G) >= R(targets) must hold whenever G arrows the targets.
bool chromatic_bound_consistent(const Graph& g, int ramsey_value);

enum class BranchOutcome { Arrows, DoesNotArrow, BudgetExceeded, ExportOnly, Inapplicable };

std::string to_string(BranchOutcome outcome);

struct FamilyBranch {
  std::string family;  // e.g. "K2+Q"
  int vertices = 0;
  std::size_t edges = 0;
  BranchOutcome outcome = BranchOutcome::Inapplicable;
  std::optional<EdgeColoring> witness;
  SearchStats stats;
};

void to_json(nlohmann::json& j, const FamilyBranch& b);

struct FamilyTestReport {
  Targets targets;
  int ramsey_value = 0;
  int q = 0;  // R - 2
  FamilyBranch kery;
  FamilyBranch triple_c5;
  /// R + 6 when at least one branch arrows.
  std::optional<int> folkman_value;
};

void to_json(nlohmann::json& j, const FamilyTestReport& r);

struct FamilyTestOptions {
  SearchBudget budget = default_budget();
  /// Branch graphs with more edges are reported as ExportOnly.
  std::size_t local_edge_limit = 150;
};

/// Evaluates whether K_{R-7} + Q or K_{R-9} + C5 + C5 + C5 arrows the
/// targets. If either does, F_e(targets; R - 2) = R + 6. Throws
/// InvalidArgument when R is smaller than max(targets).
FamilyTestReport extremal_family_test(const Targets& targets, int ramsey_value,
                                      const FamilyTestOptions& options = {});

}  // namespace folkman
