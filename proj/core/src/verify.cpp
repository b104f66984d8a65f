#include "folkman/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>

#include "folkman/constructions.hpp"
#include "folkman/enumerate.hpp"
#include "folkman/errors.hpp"
#include "folkman/family.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"
#include "folkman/structure.hpp"

namespace folkman {

EnumerationSource::EnumerationSource(int min_n, int max_n) : min_n_(min_n), max_n_(max_n), current_n_(min_n - 1) {
  if (min_n < 0 || max_n > kMaxEnumerationOrder || min_n > max_n) {
    throw InvalidArgument("enumeration range " + std::to_string(min_n) + ".." + std::to_string(max_n) +
                          " outside 0.." + std::to_string(kMaxEnumerationOrder));
  }
}

std::optional<Graph> EnumerationSource::next() {
  while (pos_ >= level_.size()) {
    if (current_n_ >= max_n_) return std::nullopt;
    level_ = enumerate_graphs(++current_n_);
    pos_ = 0;
  }
  return level_[pos_++];
}

std::string EnumerationSource::describe() const {
  return "enumeration n=" + std::to_string(min_n_) + ".." + std::to_string(max_n_);
}

Graph6StreamSource::Graph6StreamSource(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

std::optional<Graph> Graph6StreamSource::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      return parse_graph6(line);
    } catch (const Error& e) {
      errors_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

VectorSource::VectorSource(std::vector<Graph> graphs, std::string name)
    : graphs_(std::move(graphs)), name_(std::move(name)) {}

std::optional<Graph> VectorSource::next() {
  if (pos_ >= graphs_.size()) return std::nullopt;
  return graphs_[pos_++];
}

ChainSource::ChainSource(std::vector<std::unique_ptr<GraphSource>> parts) : parts_(std::move(parts)) {}

std::optional<Graph> ChainSource::next() {
  while (current_ < parts_.size()) {
    auto& part = *parts_[current_];
    const std::size_t seen = part.input_errors().size();
    auto g = part.next();
    for (std::size_t i = seen; i < part.input_errors().size(); ++i) errors_.push_back(part.input_errors()[i]);
    if (g) return g;
    ++current_;
  }
  return std::nullopt;
}

std::string ChainSource::describe() const {
  std::string out;
  for (const auto& p : parts_) out += (out.empty() ? "" : " + ") + p->describe();
  return out;
}

namespace {

struct Finding {
  std::vector<Violation> violations;
  std::optional<EqualityCase> equality;
};

// Applies fn to every graph of the source in batches, possibly on several
// threads, and hands results to sink in input order.
template <typename Result>
void map_in_order(GraphSource& source, const ScanOptions& options, const std::function<Result(const Graph&)>& fn,
                  const std::function<void(const Graph&, Result&)>& sink) {
  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  const int jobs = std::max(1, options.jobs);
  std::vector<Graph> graphs;
  std::vector<Result> results;
  while (true) {
    graphs.clear();
    while (graphs.size() < batch) {
      auto g = source.next();
      if (!g) break;
      graphs.push_back(std::move(*g));
    }
    if (graphs.empty()) return;
    results.assign(graphs.size(), Result{});
    if (jobs == 1 || graphs.size() == 1) {
      for (std::size_t i = 0; i < graphs.size(); ++i) results[i] = fn(graphs[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> failures(static_cast<std::size_t>(jobs));
      {
        std::vector<std::jthread> pool;
        for (int w = 0; w < jobs; ++w) {
          pool.emplace_back([&, w] {
            try {
              for (std::size_t i = next++; i < graphs.size(); i = next++) results[i] = fn(graphs[i]);
            } catch (...) {
              failures[static_cast<std::size_t>(w)] = std::current_exception();
            }
          });
        }
      }
      for (auto& f : failures) {
        if (f) std::rethrow_exception(f);
      }
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) sink(graphs[i], results[i]);
  }
}

VerificationReport run_verification(std::string theorem, GraphSource& source, const ScanOptions& options,
                                    const std::function<Finding(const Graph&)>& check) {
  VerificationReport rep;
  rep.theorem = std::move(theorem);
  rep.source = source.describe();
  rep.n_min = kMaxVertices + 1;
  rep.n_max = -1;
  map_in_order<Finding>(source, options, check, [&](const Graph& g, Finding& f) {
    ++rep.graph_count;
    ++rep.counts_by_n[g.order()];
    rep.n_min = std::min(rep.n_min, g.order());
    rep.n_max = std::max(rep.n_max, g.order());
    for (auto& v : f.violations) {
      ++rep.violation_count;
      if (rep.violations.size() < kViolationCap) rep.violations.push_back(std::move(v));
    }
    if (f.equality) rep.equality_cases.push_back(std::move(*f.equality));
  });
  if (rep.graph_count == 0) rep.n_min = rep.n_max = 0;
  rep.input_errors = source.input_errors();
  return rep;
}

// Exact chi and omega, or nullopt when f is certainly below min_gap.
std::optional<std::pair<int, int>> gap_at_least(const Graph& g, int min_gap) {
  if (g.order() == 0) return std::nullopt;
  const int omega = clique_number(g);
  if (dsatur_upper_bound(g) - omega < min_gap) return std::nullopt;
  const int chi = chromatic_number(g);
  if (chi - omega < min_gap) return std::nullopt;
  return std::pair{chi, omega};
}

std::string family_text(int m, const std::string& tail) { return "K" + std::to_string(m) + "+" + tail; }

Finding check_dirac(const Graph& g) {
  Finding out;
  const auto gap = gap_at_least(g, 1);
  if (!gap) return out;
  const int chi = gap->first;
  const int n = g.order();
  const std::string g6 = emit_graph6(g);
  if (n < chi + 2) {
    out.violations.push_back({g6, "f >= 1 but n = " + std::to_string(n) + " < chi + 2 = " + std::to_string(chi + 2)});
  } else if (n == chi + 2) {
    const std::string shape = family_text(chi - 3, "C5");
    if (chi >= 3 && is_isomorphic(g, build_family(shape))) {
      out.equality = EqualityCase{g6, shape};
    } else {
      out.violations.push_back({g6, "equality n = chi + 2 but the graph is not " + shape});
    }
  }
  return out;
}

Finding check_gap_two(const Graph& g) {
  Finding out;
  const auto gap = gap_at_least(g, 2);
  if (!gap) return out;
  const int chi = gap->first;
  const int n = g.order();
  const std::string g6 = emit_graph6(g);
  if (n < 10) out.violations.push_back({g6, "f >= 2 on " + std::to_string(n) + " < 10 vertices"});
  if (n < chi + 4) {
    out.violations.push_back({g6, "f >= 2 but n = " + std::to_string(n) + " < chi + 4 = " + std::to_string(chi + 4)});
  } else if (n == chi + 4) {
    const std::string shape = family_text(chi - 6, "C5+C5");
    if (chi >= 6 && is_isomorphic(g, build_family(shape))) {
      out.equality = EqualityCase{g6, shape};
    } else {
      out.violations.push_back({g6, "equality n = chi + 4 but the graph is not K_{chi-6}+C5+C5"});
    }
  }
  return out;
}

Finding check_gap_three(const Graph& g) {
  Finding out;
  const auto gap = gap_at_least(g, 3);
  if (!gap) return out;
  const int chi = gap->first;
  const int n = g.order();
  const std::string g6 = emit_graph6(g);
  if (n < 13) out.violations.push_back({g6, "f >= 3 on " + std::to_string(n) + " < 13 vertices"});
  if (n < chi + 6) {
    out.violations.push_back({g6, "f >= 3 but n = " + std::to_string(n) + " < chi + 6 = " + std::to_string(chi + 6)});
  } else if (n == chi + 6) {
    try {
      const FamilyClassification c = classify_extremal(g);
      out.equality = EqualityCase{g6, family_text(c.m, c.kind == FamilyKind::KmQ ? "Q" : "C5+C5+C5")};
    } catch (const TheoremViolation& e) {
      out.violations.push_back({g6, e.what()});
    }
  }
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const VerificationReport& r) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [n, c] : r.counts_by_n) counts[std::to_string(n)] = c;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back({{"graph6", v.graph6}, {"message", v.message}});
  nlohmann::json eq = nlohmann::json::array();
  for (const auto& e : r.equality_cases) eq.push_back({{"graph6", e.graph6}, {"classification", e.classification}});
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : r.input_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  j = nlohmann::json{{"theorem", r.theorem},
                     {"source", r.source},
                     {"n_min", r.n_min},
                     {"n_max", r.n_max},
                     {"graph_count", r.graph_count},
                     {"counts_by_n", counts},
                     {"violations", violations},
                     {"violation_count", r.violation_count},
                     {"equality_cases", eq},
                     {"input_errors", errors},
                     {"pass", r.pass()}};
}

VerificationReport verify_dirac(GraphSource& source, const ScanOptions& options) {
  return run_verification("dirac", source, options, check_dirac);
}

VerificationReport verify_gap_two(GraphSource& source, const ScanOptions& options) {
  return run_verification("gap-two", source, options, check_gap_two);
}

VerificationReport verify_gap_three(GraphSource& source, const ScanOptions& options) {
  return run_verification("gap-three", source, options, check_gap_three);
}

void to_json(nlohmann::json& j, const ScanReport& r) {
  nlohmann::json matches = nlohmann::json::array();
  for (const auto& m : r.matches) {
    matches.push_back({{"index", m.index}, {"graph6", m.graph6}, {"invariants", m.invariants}});
  }
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : r.input_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  j = nlohmann::json{{"predicate", r.predicate},
                     {"source", r.source},
                     {"graph_count", r.graph_count},
                     {"matches", matches},
                     {"input_errors", errors}};
}

ScanReport scan_stream(GraphSource& source, const Predicate& predicate, const ScanOptions& options) {
  ScanReport rep;
  rep.predicate = predicate.text();
  rep.source = source.describe();
  map_in_order<std::optional<InvariantReport>>(
      source, options,
      [&](const Graph& g) -> std::optional<InvariantReport> {
        LazyInvariants inv(g);
        if (!evaluate(predicate, inv)) return std::nullopt;
        return report(g);
      },
      [&](const Graph& g, std::optional<InvariantReport>& r) {
        ++rep.graph_count;
        if (r) rep.matches.push_back({rep.graph_count, emit_graph6(g), *r});
      });
  rep.input_errors = source.input_errors();
  return rep;
}

}  // namespace folkman
