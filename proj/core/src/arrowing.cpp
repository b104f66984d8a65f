#include "folkman/arrowing.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "folkman/constructions.hpp"
#include "folkman/family.hpp"
#include "folkman/invariants.hpp"

namespace folkman {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxColors = 8;

struct CliqueRecord {
  int color = 0;
  std::vector<int> edges;
};

// Everything the search needs that depends only on the instance.
struct Prepared {
  int r = 0;
  std::vector<Edge> edges;
  std::vector<int> order;  // static branching order over edge indices
  std::vector<CliqueRecord> cliques;
  std::vector<std::vector<int>> cliques_of_edge;
  std::vector<int> group_prev;  // previous colour with an equal target, or -1

  explicit Prepared(const ArrowingInstance& inst) {
    const Graph& g = inst.graph;
    r = static_cast<int>(inst.targets.size());
    edges = g.edges();
    std::vector<std::vector<int>> index(static_cast<std::size_t>(g.order()),
                                        std::vector<int>(static_cast<std::size_t>(g.order()), -1));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      index[static_cast<std::size_t>(edges[e].first)][static_cast<std::size_t>(edges[e].second)] =
          static_cast<int>(e);
    }
    cliques_of_edge.resize(edges.size());
    for (int c = 0; c < r; ++c) {
      for (VertexSet k : cliques_of_size(g, inst.targets[static_cast<std::size_t>(c)])) {
        CliqueRecord rec{c, {}};
        for_each_vertex(k, [&](int u) {
          for_each_vertex(k & ~first_n(u + 1), [&](int v) {
            rec.edges.push_back(index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
          });
        });
        const int id = static_cast<int>(cliques.size());
        for (int e : rec.edges) cliques_of_edge[static_cast<std::size_t>(e)].push_back(id);
        cliques.push_back(std::move(rec));
      }
    }

    group_prev.assign(static_cast<std::size_t>(r), -1);
    for (int c = 0; c < r; ++c) {
      for (int p = c - 1; p >= 0; --p) {
        if (inst.targets[static_cast<std::size_t>(p)] == inst.targets[static_cast<std::size_t>(c)]) {
          group_prev[static_cast<std::size_t>(c)] = p;
          break;
        }
      }
    }

    build_order();
  }

  // Greedy: next edge is the one whose cliques are already most filled in
  // by placed edges; lowest index on ties.
  void build_order() {
    const std::size_t m = edges.size();
    std::vector<int> placed_in(cliques.size(), 0);
    std::vector<long> score(m, 0);
    std::vector<char> placed(m, 0);
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t pick = m;
      for (std::size_t e = 0; e < m; ++e) {
        if (!placed[e] && (pick == m || score[e] > score[pick])) pick = e;
      }
      placed[pick] = 1;
      order.push_back(static_cast<int>(pick));
      for (int k : cliques_of_edge[pick]) {
        const long before = placed_in[static_cast<std::size_t>(k)];
        ++placed_in[static_cast<std::size_t>(k)];
        const long gain = (before + 1) * (before + 1) - before * before;
        for (int f : cliques[static_cast<std::size_t>(k)].edges) score[static_cast<std::size_t>(f)] += gain;
      }
    }
  }
};

struct Shared {
  const SearchBudget* budget = nullptr;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> witness_task{std::numeric_limits<std::size_t>::max()};
};

enum class Result { Found, Exhausted, Aborted };

class Searcher {
 public:
  Searcher(const Prepared& p, Shared& shared)
      : p_(p),
        shared_(shared),
        domain_(p.edges.size(), static_cast<std::uint8_t>((1U << p.r) - 1)),
        color_(p.edges.size(), -1),
        same_(p.cliques.size(), 0),
        blocked_(p.cliques.size(), 0),
        used_(static_cast<std::size_t>(p.r), 0) {}

  // Cliques with a single edge forbid their colour on that edge outright.
  bool initial_filter() {
    for (const auto& k : p_.cliques) {
      if (k.edges.size() == 1) {
        auto& d = domain_[static_cast<std::size_t>(k.edges[0])];
        d = static_cast<std::uint8_t>(d & ~(1U << k.color));
        if (d == 0) return false;
      }
    }
    return true;
  }

  /// Replays a prefix of branching decisions; false if it is inconsistent.
  bool replay(const std::vector<int>& choices) {
    for (std::size_t pos = 0; pos < choices.size(); ++pos) {
      if (!assign(p_.order[pos], choices[pos])) return false;
    }
    depth_ = choices.size();
    return true;
  }

  void set_task(std::size_t task) { task_ = task; }

  Result dfs(std::size_t pos) {
    if (pos == p_.order.size()) return Result::Found;
    const int e = p_.order[pos];
    const unsigned options = domain_[static_cast<std::size_t>(e)];
    for (int c = 0; c < p_.r; ++c) {
      if (((options >> c) & 1U) == 0) continue;
      const int prev = p_.group_prev[static_cast<std::size_t>(c)];
      if (prev >= 0 && used_[static_cast<std::size_t>(prev)] == 0) continue;
      if (!tick()) return Result::Aborted;
      const std::size_t mark = trail_.size();
      if (assign(e, c)) {
        const Result sub = dfs(pos + 1);
        if (sub != Result::Exhausted) return sub;
      }
      unassign(e, c, mark);
    }
    return Result::Exhausted;
  }

  /// Collects all consistent branching prefixes of the given depth, in
  /// DFS order.
  void split(std::size_t pos, std::size_t depth, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (pos == depth || pos == p_.order.size()) {
      out.push_back(prefix);
      return;
    }
    const int e = p_.order[pos];
    const unsigned options = domain_[static_cast<std::size_t>(e)];
    for (int c = 0; c < p_.r; ++c) {
      if (((options >> c) & 1U) == 0) continue;
      const int prev = p_.group_prev[static_cast<std::size_t>(c)];
      if (prev >= 0 && used_[static_cast<std::size_t>(prev)] == 0) continue;
      const std::size_t mark = trail_.size();
      if (assign(e, c)) {
        prefix.push_back(c);
        split(pos + 1, depth, prefix, out);
        prefix.pop_back();
      }
      unassign(e, c, mark);
    }
  }

  EdgeColoring coloring() const {
    EdgeColoring out;
    for (std::size_t e = 0; e < p_.edges.size(); ++e) out.colors[p_.edges[e]] = color_[e] + 1;
    return out;
  }

  std::size_t depth() const { return depth_; }

 private:
  bool tick() {
    const std::uint64_t n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.out_of_budget.load(std::memory_order_relaxed)) return false;
    if (shared_.witness_task.load(std::memory_order_relaxed) < task_) return false;
    if (n > shared_.budget->max_nodes) {
      shared_.out_of_budget = true;
      return false;
    }
    if ((n & 0xFFF) == 0 && Clock::now() - shared_.start > shared_.budget->max_time) {
      shared_.out_of_budget = true;
      return false;
    }
    return true;
  }

  bool assign(int e, int c) {
    const auto ue = static_cast<std::size_t>(e);
    color_[ue] = c;
    ++used_[static_cast<std::size_t>(c)];
    bool ok = true;
    for (int k : p_.cliques_of_edge[ue]) {
      const auto uk = static_cast<std::size_t>(k);
      const CliqueRecord& rec = p_.cliques[uk];
      if (rec.color != c) {
        ++blocked_[uk];
        continue;
      }
      ++same_[uk];
      if (blocked_[uk] != 0) continue;
      const int size = static_cast<int>(rec.edges.size());
      if (same_[uk] == size) {
        ok = false;
      } else if (same_[uk] == size - 1) {
        for (int f : rec.edges) {
          const auto uf = static_cast<std::size_t>(f);
          if (color_[uf] >= 0 || ((domain_[uf] >> c) & 1U) == 0) continue;
          trail_.emplace_back(f, domain_[uf]);
          domain_[uf] = static_cast<std::uint8_t>(domain_[uf] & ~(1U << c));
          if (domain_[uf] == 0) ok = false;
        }
      }
    }
    return ok;
  }

  void unassign(int e, int c, std::size_t mark) {
    const auto ue = static_cast<std::size_t>(e);
    for (int k : p_.cliques_of_edge[ue]) {
      const auto uk = static_cast<std::size_t>(k);
      if (p_.cliques[uk].color != c) {
        --blocked_[uk];
      } else {
        --same_[uk];
      }
    }
    while (trail_.size() > mark) {
      const auto [f, d] = trail_.back();
      domain_[static_cast<std::size_t>(f)] = d;
      trail_.pop_back();
    }
    --used_[static_cast<std::size_t>(c)];
    color_[ue] = -1;
  }

  const Prepared& p_;
  Shared& shared_;
  std::vector<std::uint8_t> domain_;
  std::vector<int> color_;
  std::vector<int> same_;
  std::vector<int> blocked_;
  std::vector<int> used_;
  std::vector<std::pair<int, std::uint8_t>> trail_;
  std::size_t task_ = 0;
  std::size_t depth_ = 0;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

[[noreturn]] void throw_budget(const Shared& shared) {
  SearchStats stats{shared.nodes.load(), seconds_since(shared.start)};
  throw BudgetExceeded("arrowing search exceeded its budget after " + std::to_string(stats.nodes) + " nodes",
                       stats);
}

ArrowingVerdict run_parallel(const Prepared& p, Shared& shared, int jobs) {
  std::vector<std::vector<int>> tasks;
  {
    Searcher root(p, shared);
    if (!root.initial_filter()) return {true, std::nullopt, {}};
    std::vector<int> prefix;
    std::size_t depth = 1;
    while (depth <= p.order.size()) {
      tasks.clear();
      root.split(0, depth, prefix, tasks);
      if (tasks.size() >= static_cast<std::size_t>(4 * jobs) || depth == p.order.size()) break;
      ++depth;
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::optional<EdgeColoring> best;
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || shared.out_of_budget || shared.witness_task.load() < t) return;
      Searcher s(p, shared);
      s.set_task(t);
      if (!s.initial_filter() || !s.replay(tasks[t])) continue;
      if (s.dfs(s.depth()) == Result::Found) {
        std::lock_guard lock(mu);
        if (t < shared.witness_task.load()) {
          shared.witness_task = t;
          best = s.coloring();
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  pool.clear();

  // A witness from task t is final once every earlier task has been
  // exhausted, which holds here because tasks are claimed in order and
  // only later tasks are abandoned.
  if (best) return {false, best, {}};
  if (shared.out_of_budget) throw_budget(shared);
  return {true, std::nullopt, {}};
}

}  // namespace

void validate_targets(const Targets& targets) {
  if (targets.empty()) throw InvalidArgument("at least one target clique size is required");
  if (static_cast<int>(targets.size()) > kMaxColors) {
    throw InvalidArgument("at most " + std::to_string(kMaxColors) + " colours are supported");
  }
  for (int a : targets) {
    if (a < 2) throw InvalidArgument("target clique sizes must be at least 2, got " + std::to_string(a));
  }
}

Targets parse_targets(const std::string& text) {
  Targets out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        item.size() > 3) {
      throw ParseError("bad target list '" + text + "'");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw ParseError("empty target list");
  return out;
}

std::string to_string(const Targets& targets) {
  std::string out;
  for (int a : targets) out += (out.empty() ? "" : ",") + std::to_string(a);
  return out;
}

void to_json(nlohmann::json& j, const EdgeColoring& c) {
  j = nlohmann::json::array();
  for (const auto& [e, color] : c.colors) j.push_back({e.first, e.second, color});
}

SearchBudget default_budget() {
  SearchBudget b;
  if (const char* env = std::getenv("FOLKMAN_BUDGET_NODES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_nodes = v;
  }
  return b;
}

void to_json(nlohmann::json& j, const ArrowingVerdict& v) {
  j = nlohmann::json{{"arrows", v.arrows},
                     {"stats", {{"nodes", v.stats.nodes}, {"elapsed_seconds", v.stats.elapsed_seconds}}}};
  if (v.witness) j["witness"] = *v.witness;
}

bool check_coloring(const ArrowingInstance& inst, const EdgeColoring& coloring) {
  validate_targets(inst.targets);
  const Graph& g = inst.graph;
  const int r = static_cast<int>(inst.targets.size());
  if (coloring.colors.size() != g.edge_count()) {
    throw InvalidArgument("colouring covers " + std::to_string(coloring.colors.size()) + " edges, graph has " +
                          std::to_string(g.edge_count()));
  }
  std::vector<GraphBuilder> classes;
  for (int c = 0; c < r; ++c) classes.emplace_back(g.order());
  for (const auto& [e, color] : coloring.colors) {
    if (e.first >= e.second || e.first < 0 || e.second >= g.order() || !g.adjacent(e.first, e.second)) {
      throw InvalidArgument("colouring names a non-edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    }
    if (color < 1 || color > r) throw InvalidArgument("colour " + std::to_string(color) + " outside 1..r");
    classes[static_cast<std::size_t>(color - 1)].add_edge(e.first, e.second);
  }
  for (int c = 0; c < r; ++c) {
    const Graph h = std::move(classes[static_cast<std::size_t>(c)]).build();
    if (clique_number(h) >= inst.targets[static_cast<std::size_t>(c)]) return false;
  }
  return true;
}

ArrowingVerdict arrows(const ArrowingInstance& inst, const SearchBudget& budget) {
  validate_targets(inst.targets);
  const Prepared p(inst);
  Shared shared;
  shared.budget = &budget;
  shared.start = Clock::now();

  ArrowingVerdict verdict;
  if (budget.jobs > 1 && p.edges.size() > 8) {
    verdict = run_parallel(p, shared, budget.jobs);
  } else {
    Searcher s(p, shared);
    if (!s.initial_filter()) {
      verdict.arrows = true;
    } else {
      switch (s.dfs(0)) {
        case Result::Found:
          verdict.arrows = false;
          verdict.witness = s.coloring();
          break;
        case Result::Exhausted: verdict.arrows = true; break;
        case Result::Aborted: throw_budget(shared);
      }
    }
  }
  verdict.stats = {shared.nodes.load(), seconds_since(shared.start)};
  return verdict;
}

RamseyResult ramsey(const Targets& targets, const SearchBudget& budget) {
  validate_targets(targets);
  RamseyResult out;
  EdgeColoring previous;
  for (int n = 1; n <= kMaxVertices; ++n) {
    const ArrowingVerdict v = arrows({complete(n), targets}, budget);
    out.stats.nodes += v.stats.nodes;
    out.stats.elapsed_seconds += v.stats.elapsed_seconds;
    if (v.arrows) {
      out.value = n;
      out.witness = std::move(previous);
      return out;
    }
    previous = *v.witness;
  }
  throw CapacityError("Ramsey number of (" + to_string(targets) + ") exceeds 64");
}

bool he_member(const Graph& g, const Targets& targets, int q, const SearchBudget& budget) {
  validate_targets(targets);
  if (q < 2) throw InvalidArgument("q must be at least 2");
  if (clique_number(g) >= q) return false;
  return arrows({g, targets}, budget).arrows;
}

bool folkman_exists(const Targets& targets, int q) {
  validate_targets(targets);
  return q > *std::max_element(targets.begin(), targets.end());
}

int folkman_lower_bound(const Targets& targets, int ramsey_value) {
  validate_targets(targets);
  if (targets.size() < 2) throw InvalidArgument("the R + 6 bound needs at least two colours");
  for (int a : targets) {
    if (a < 3) throw InvalidArgument("the R + 6 bound needs every target at least 3");
  }
  if (ramsey_value <= *std::max_element(targets.begin(), targets.end())) {
    throw InvalidArgument("Ramsey value " + std::to_string(ramsey_value) + " is too small for (" +
                          to_string(targets) + ")");
  }
  return ramsey_value + 6;
}

bool chromatic_bound_consistent(const Graph& g, int ramsey_value) {
  return chromatic_number(g) >= ramsey_value;
}

std::string to_string(BranchOutcome outcome) {
  switch (outcome) {
    case BranchOutcome::Arrows: return "arrows";
    case BranchOutcome::DoesNotArrow: return "does-not-arrow";
    case BranchOutcome::BudgetExceeded: return "budget-exceeded";
    case BranchOutcome::ExportOnly: return "export-only";
    case BranchOutcome::Inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

void to_json(nlohmann::json& j, const FamilyBranch& b) {
  j = nlohmann::json{{"family", b.family},
                     {"vertices", b.vertices},
                     {"edges", b.edges},
                     {"outcome", to_string(b.outcome)},
                     {"stats", {{"nodes", b.stats.nodes}, {"elapsed_seconds", b.stats.elapsed_seconds}}}};
  if (b.witness) j["witness"] = *b.witness;
}

namespace {

FamilyBranch evaluate_branch(const FamilyExpr& expr, const Targets& targets, const FamilyTestOptions& options) {
  FamilyBranch b;
  b.family = expr.to_string();
  const Graph g = build_family(expr);
  b.vertices = g.order();
  b.edges = g.edge_count();
  if (b.edges > options.local_edge_limit) {
    b.outcome = BranchOutcome::ExportOnly;
    return b;
  }
  try {
    ArrowingVerdict v = arrows({g, targets}, options.budget);
    b.outcome = v.arrows ? BranchOutcome::Arrows : BranchOutcome::DoesNotArrow;
    b.witness = std::move(v.witness);
    b.stats = v.stats;
  } catch (const BudgetExceeded& e) {
    b.outcome = BranchOutcome::BudgetExceeded;
    b.stats = e.stats();
  }
  return b;
}

}  // namespace

void to_json(nlohmann::json& j, const FamilyTestReport& r) {
  j = nlohmann::json{{"targets", r.targets},
                     {"ramsey", r.ramsey_value},
                     {"q", r.q},
                     {"branches", {r.kery, r.triple_c5}}};
  j["folkman_value"] = r.folkman_value ? nlohmann::json(*r.folkman_value) : nlohmann::json(nullptr);
  const bool any_instance = r.kery.outcome != BranchOutcome::Inapplicable ||
                            r.triple_c5.outcome != BranchOutcome::Inapplicable;
  j["family_instance_exists"] = any_instance;
}

FamilyTestReport extremal_family_test(const Targets& targets, int ramsey_value, const FamilyTestOptions& options) {
  validate_targets(targets);
  if (ramsey_value <= *std::max_element(targets.begin(), targets.end())) {
    throw InvalidArgument("Ramsey value " + std::to_string(ramsey_value) + " is too small for (" +
                          to_string(targets) + ")");
  }
  FamilyTestReport rep;
  rep.targets = targets;
  rep.ramsey_value = ramsey_value;
  rep.q = ramsey_value - 2;
  rep.kery.family = "K" + std::to_string(ramsey_value - 7) + "+Q";
  rep.triple_c5.family = "K" + std::to_string(ramsey_value - 9) + "+C5+C5+C5";
  if (ramsey_value >= 7) rep.kery = evaluate_branch(kery_family(ramsey_value - 7), targets, options);
  if (ramsey_value >= 9) rep.triple_c5 = evaluate_branch(triple_c5_family(ramsey_value - 9), targets, options);
  if (rep.kery.outcome == BranchOutcome::Arrows || rep.triple_c5.outcome == BranchOutcome::Arrows) {
    rep.folkman_value = ramsey_value + 6;
  }
  return rep;
}

}  // namespace folkman
