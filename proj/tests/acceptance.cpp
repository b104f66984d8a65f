// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
// With --n10-stream, runs the optional 10-vertex scan instead (77 = skipped).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/cnf.hpp"
#include "folkman/constructions.hpp"
#include "folkman/enumerate.hpp"
#include "folkman/family.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"
#include "folkman/ledger.hpp"
#include "folkman/structure.hpp"
#include "folkman/verify.hpp"
#include "support/oracles.hpp"

using namespace folkman;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < limit_seconds, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s");
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << secs << " s)";
  if (!o.detail.empty()) std::cout << "  -- " << o.detail;
  std::cout << std::endl;
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) { return relabel(g, oracle::random_permutation(g.order(), rng)); }

// Ground truth for an arrowing instance from the test-side oracles only:
// every colouring when there are at most 2^15, else DPLL on the exported CNF.
bool oracle_arrows(const ArrowingInstance& inst) {
  double colorings = 1;
  for (std::size_t i = 0; i < inst.graph.edge_count(); ++i) colorings *= static_cast<double>(inst.targets.size());
  if (colorings <= 32768) return oracle::census(inst.graph, inst.targets).good == 0;
  std::stringstream cnf;
  export_cnf(inst, cnf);
  return !oracle::satisfiable(oracle::parse_dimacs(cnf));
}

// Positive verdicts of criterion 6, reused by criterion 8.
std::vector<ArrowingInstance> positives;

int n10_stream() {
  const char* path = std::getenv("FOLKMAN_N10_GRAPH6");
  if (!path || !*path) {
    std::cout << "SKIP  n = 10 scan: FOLKMAN_N10_GRAPH6 is not set" << std::endl;
    return 77;
  }
  std::ifstream in(path);
  if (!in) {
    std::cout << "FAIL  n = 10 scan: cannot read " << path << std::endl;
    return 1;
  }
  Graph6StreamSource src(in, path);
  ScanOptions options;
  options.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  criterion(10, "n = 10: f >= 2 only for C5+C5", 86400, [&](Outcome& o) {
    const VerificationReport r = verify_gap_two(src, options);
    o.require(r.input_errors.empty(), std::to_string(r.input_errors.size()) + " unreadable lines");
    o.require(r.counts_by_n.count(10) && r.counts_by_n.at(10) == 12005168,
              "expected all 12005168 graphs on 10 vertices, got " + std::to_string(r.graph_count));
    o.require(r.pass(), std::to_string(r.violation_count) + " violations");
    o.require(r.equality_cases.size() == 1, std::to_string(r.equality_cases.size()) + " equality cases");
    for (const EqualityCase& e : r.equality_cases) {
      o.require(is_isomorphic(parse_graph6(e.graph6), build_family("C5+C5")), e.graph6 + " is not C5+C5");
    }
  });
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--n10-stream") return n10_stream();

  criterion(1, "Q: n=13, alpha=2, omega=4, chi=7, vertex-critical, not Sperner", 5, [](Outcome& o) {
    const Graph q = kery_q();
    const InvariantReport r = report(q);
    o.require(r.n == 13, "n");
    o.require(r.alpha == 2 && oracle::independence_number(q) == 2, "alpha");
    o.require(r.omega == 4 && oracle::clique_number(q) == 4, "omega");
    o.require(r.chi == 7 && oracle::chromatic_number(q) == 7, "chi");
    o.require(r.vertex_critical, "vertex-critical");
    for (int v = 0; v < 13; ++v) {
      o.require(oracle::chromatic_number(remove_vertices(q, bit(v))) == 6, "chi(Q - " + std::to_string(v) + ")");
    }
    o.require(!r.sperner, "Sperner");
    bool nested = false;
    for (int u = 0; u < 13; ++u) {
      for (int v = 0; v < 13; ++v) {
        if (u != v && (q.neighbors(u) & ~q.neighbors(v)) == 0) nested = true;
      }
    }
    o.require(!nested, "oracle finds a pair with nested neighbourhoods");
  });

  criterion(2, "K_m+Q and K_m+C5+C5+C5 bookkeeping for m = 0..5", 30, [](Outcome& o) {
    for (int m = 0; m <= 5; ++m) {
      const InvariantReport a = report(build_family(kery_family(m)));
      o.require(a.chi == m + 7 && a.omega == m + 4 && a.f == 3 && a.n == a.chi + 6, kery_family(m).to_string());
      const InvariantReport b = report(build_family(triple_c5_family(m)));
      o.require(b.chi == m + 9 && b.omega == m + 6 && b.f == 3 && b.n == b.chi + 6, triple_c5_family(m).to_string());
    }
  });

  criterion(3, "classifier round-trip on 50 relabelings per instance", 120, [](Outcome& o) {
    std::mt19937_64 rng(20260);
    for (int m = 0; m <= 5; ++m) {
      const Graph q = build_family(kery_family(m));
      const Graph t = build_family(triple_c5_family(m));
      for (int i = 0; i < 50; ++i) {
        const FamilyClassification a = classify_extremal(shuffled(q, rng));
        o.require(a.kind == FamilyKind::KmQ && a.m == m, "K" + std::to_string(m) + "+Q");
        const FamilyClassification b = classify_extremal(shuffled(t, rng));
        o.require(b.kind == FamilyKind::KmTripleC5 && b.m == m, "K" + std::to_string(m) + "+C5+C5+C5");
      }
    }
    // The classifier must not raise anywhere on the small-graph corpus.
    for (int n = 1; n <= kMaxEnumerationOrder; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        o.require(classify_extremal(g).kind == FamilyKind::NotExtremal, emit_graph6(g));
      }
    }
  });

  VerificationReport dirac;
  criterion(4, "Dirac bound over all graphs with n <= 7", 600, [&](Outcome& o) {
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
      o.require(enumerate_graphs(n).size() == expected[n - 1], "count at n = " + std::to_string(n));
    }
    EnumerationSource src(1, 7);
    dirac = verify_dirac(src);
    for (int n = 1; n <= 7; ++n) {
      o.require(dirac.counts_by_n[n] == expected[n - 1], "scanned count at n = " + std::to_string(n));
    }
    o.require(dirac.pass(), std::to_string(dirac.violation_count) + " violations");
    o.require(dirac.equality_cases.size() == 3, std::to_string(dirac.equality_cases.size()) + " equality cases");
    for (const EqualityCase& e : dirac.equality_cases) {
      const Graph g = parse_graph6(e.graph6);
      o.require(g.order() >= 5 && oracle::isomorphic(g, join(complete(g.order() - 5), cycle(5))), e.graph6);
    }
  });

  criterion(5, "no graph with n <= 7 has f >= 2", 600, [&](Outcome& o) {
    EnumerationSource src(1, 7);
    const VerificationReport gap_two = verify_gap_two(src);
    o.require(gap_two.graph_count == dirac.graph_count, "scan size");
    o.require(gap_two.pass(), std::to_string(gap_two.violation_count) + " violations");
    o.require(gap_two.equality_cases.empty(), "unexpected equality cases");
    std::size_t gap2 = 0;
    for (int n = 1; n <= 7; ++n) {
      for (const Graph& g : enumerate_graphs(n)) gap2 += oracle::chromatic_number(g) - oracle::clique_number(g) >= 2;
    }
    o.require(gap2 == 0, std::to_string(gap2) + " graphs with f >= 2 by brute force");
  });

  criterion(6, "arrowing ground truth", 600, [](Outcome& o) {
    struct Case {
      std::string name;
      Graph graph;
      Targets targets;
      bool expected;
    };
    const Case cases[] = {
        {"K6 -> (3,3)", complete(6), {3, 3}, true},
        {"K5 -/-> (3,3)", complete(5), {3, 3}, false},
        {"C5 -/-> (3,3)", cycle(5), {3, 3}, false},
        {"K9 -> (3,4)", complete(9), {3, 4}, true},
        {"K8 -/-> (3,4)", complete(8), {3, 4}, false},
    };
    for (const Case& c : cases) {
      const ArrowingInstance inst{c.graph, c.targets};
      const ArrowingVerdict v = arrows(inst);
      o.require(v.arrows == c.expected, c.name + ": search");
      o.require(oracle_arrows(inst) == c.expected, c.name + ": oracle");
      if (!v.arrows) o.require(v.witness && check_coloring(inst, *v.witness), c.name + ": witness");
      if (v.arrows) positives.push_back(inst);
    }
    const RamseyResult r = ramsey({3, 3});
    o.require(r.value == 6, "R(3,3) = " + std::to_string(r.value));
    o.require(check_coloring({complete(5), {3, 3}}, r.witness), "R(3,3) witness");
  });

  criterion(7, "R + 6 bounds from the seeded ledger", 1, [](Outcome& o) {
    const FolkmanLedger ledger = FolkmanLedger::seeded();
    struct Case {
      Targets targets;
      std::string expected;
    };
    for (const Case& c : {Case{{3, 5}, "F_e(3,5;12) >= 20"}, Case{{4, 4}, "F_e(4,4;16) >= 24"},
                          Case{{3, 4}, "F_e(3,4;7) >= 15"}}) {
      const int r = ledger.find_ramsey(c.targets)->value;
      const std::string got = "F_e(" + to_string(c.targets) + ";" + std::to_string(r - 2) +
                              ") >= " + std::to_string(folkman_lower_bound(c.targets, r));
      o.require(got == c.expected, got);
    }
  });

  criterion(8, "chi(G) >= R on every positive verdict", 60, [](Outcome& o) {
    const FolkmanLedger ledger = FolkmanLedger::seeded();
    o.require(positives.size() == 2, "expected two positive verdicts");
    for (const ArrowingInstance& inst : positives) {
      const int r = ledger.find_ramsey(inst.targets)->value;
      o.require(chromatic_bound_consistent(inst.graph, r) && oracle::chromatic_number(inst.graph) >= r,
                emit_graph6(inst.graph));
    }
  });

  criterion(9, "K8+C5+C5+C5 / (3,3,3) exported as DIMACS; n = 10 scan wired as an optional job", 60, [](Outcome& o) {
    const Graph g = build_family("K8+C5+C5+C5");
    const ArrowingInstance inst{g, {3, 3, 3}};
    std::stringstream s;
    const CnfSummary sum = export_cnf(inst, s);
    const oracle::Cnf cnf = oracle::parse_dimacs(s);
    const std::size_t e = g.edge_count();
    const std::size_t triangles = oracle::cliques(g, 3).size();
    o.require(e == 238, "edge count " + std::to_string(e));
    o.require(cnf.declared_variables == static_cast<int>(3 * e), "variables");
    o.require(cnf.clauses.size() == static_cast<std::size_t>(cnf.declared_clauses), "declared clause count");
    o.require(sum.clauses == cnf.clauses.size(), "summary clause count");
    // Sort every clause into its group by shape, then check the groups against the graph.
    std::vector<int> at_least_one(e, 0), at_most_one(e, 0);
    std::size_t clique_clauses = 0, units = 0;
    for (const auto& c : cnf.clauses) {
      for (int lit : c) o.require(std::abs(lit) >= 1 && std::abs(lit) <= cnf.declared_variables, "literal range");
      if (c.size() == 3 && c[0] > 0) {
        const std::size_t edge = static_cast<std::size_t>(c[0] - 1) / 3;
        bool same = true;
        for (int k = 0; k < 3; ++k) same = same && c[static_cast<std::size_t>(k)] == static_cast<int>(edge * 3) + k + 1;
        o.require(same, "malformed at-least-one clause");
        ++at_least_one[edge];
      } else if (c.size() == 2 && c[0] < 0 && c[1] < 0 && (-c[0] - 1) / 3 == (-c[1] - 1) / 3) {
        ++at_most_one[static_cast<std::size_t>(-c[0] - 1) / 3];
      } else if (c.size() == 3 && c[0] < 0) {
        const int color = (-c[0] - 1) % 3;
        bool same = true;
        for (int lit : c) same = same && lit < 0 && (-lit - 1) % 3 == color;
        o.require(same, "mixed-colour clique clause");
        ++clique_clauses;
      } else if (c.size() == 1) {
        ++units;
      } else {
        o.require(false, "unrecognised clause");
      }
    }
    bool exactly_one = true;
    for (std::size_t i = 0; i < e; ++i) exactly_one = exactly_one && at_least_one[i] == 1 && at_most_one[i] == 3;
    o.require(exactly_one, "one exactly-one group per edge");
    o.require(clique_clauses == 3 * triangles, "clique clauses " + std::to_string(clique_clauses) + " vs 3 x " +
                                                   std::to_string(triangles) + " triangles");
    o.require(units == 1, "symmetry unit");
    const char* n10 = std::getenv("FOLKMAN_N10_GRAPH6");
    std::cout << "      n = 10 scan: "
              << (n10 && *n10 ? "configured (ctest -R acceptance_n10_stream)" : "optional job skipped, FOLKMAN_N10_GRAPH6 unset")
              << std::endl;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
