#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "folkman/arrowing.hpp"
#include "folkman/cnf.hpp"
#include "folkman/constructions.hpp"
#include "folkman/enumerate.hpp"
#include "folkman/errors.hpp"
#include "folkman/family.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"
#include "folkman/ledger.hpp"
#include "folkman/structure.hpp"
#include "folkman/verify.hpp"

namespace folkman::cli {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct GraphOptions {
  std::string graph;
  std::string family;
  std::string file;
  std::string circulant;
};

void add_graph_options(CLI::App* sub, GraphOptions& o) {
  sub->add_option("--graph", o.graph, "graph6 string, K<n>, C<n> or Q");
  sub->add_option("--family", o.family, "join expression such as \"K2+Q\"");
  sub->add_option("--file", o.file, "file whose first non-empty line is a graph6 string");
  sub->add_option("--circulant", o.circulant, "circulant graph as m:d1,d2,...");
}

Graph parse_graph_literal(const std::string& text) {
  static const std::regex named(R"(^\s*([KC])(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, named)) {
    const int size = std::stoi(m[2]);
    return m[1] == "K" ? complete(size) : cycle(size);
  }
  if (text == "Q") return kery_q();
  return parse_graph6(text);
}

struct LoadedGraph {
  Graph graph;
  std::optional<bool> closure_added;
};

LoadedGraph load_graph(const GraphOptions& o) {
  const int given = !o.graph.empty() + !o.family.empty() + !o.file.empty() + !o.circulant.empty();
  if (given == 0) throw UsageError("a graph source is required: --graph, --family, --file or --circulant");
  if (given > 1) throw UsageError("give exactly one of --graph, --family, --file, --circulant");
  if (!o.graph.empty()) return {parse_graph_literal(o.graph), std::nullopt};
  if (!o.family.empty()) return {build_family(o.family), std::nullopt};
  if (!o.circulant.empty()) {
    const auto colon = o.circulant.find(':');
    if (colon == std::string::npos) throw ParseError("circulant must look like m:d1,d2,...");
    int m = 0;
    try {
      m = std::stoi(o.circulant.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("bad circulant order in '" + o.circulant + "'");
    }
    const Targets residues = parse_targets(o.circulant.substr(colon + 1));
    CirculantResult c = make_circulant(m, residues);
    return {std::move(c.graph), c.closure_added};
  }
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot read '" + o.file + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return {parse_graph6(line), std::nullopt};
  }
  throw ParseError("'" + o.file + "' holds no graph");
}

struct BudgetOptions {
  std::optional<std::uint64_t> nodes;
  std::optional<double> seconds;
  int jobs = 1;
};

void add_budget_options(CLI::App* sub, BudgetOptions& b) {
  sub->add_option("--budget-nodes", b.nodes, "search node cap (default 1e9 or $FOLKMAN_BUDGET_NODES)");
  sub->add_option("--time-limit", b.seconds, "wall-clock cap in seconds (default 600)");
  sub->add_option("--jobs", b.jobs, "worker threads")->check(CLI::Range(1, 256));
}

SearchBudget make_budget(const BudgetOptions& o) {
  SearchBudget b = default_budget();
  if (o.nodes) b.max_nodes = *o.nodes;
  if (o.seconds) b.max_time = std::chrono::milliseconds(static_cast<long long>(*o.seconds * 1000.0));
  b.jobs = o.jobs;
  return b;
}

json stats_json(const SearchStats& s) { return {{"nodes", s.nodes}, {"elapsed_seconds", s.elapsed_seconds}}; }

FolkmanLedger open_ledger(const std::string& path, bool* from_file = nullptr) {
  const bool exists = std::filesystem::exists(path);
  if (from_file) *from_file = exists;
  return exists ? FolkmanLedger::load(path) : FolkmanLedger::seeded();
}

int ramsey_for(const FolkmanLedger& ledger, const Targets& targets) {
  auto e = ledger.find_ramsey(targets);
  if (!e) throw UsageError("no Ramsey value for (" + to_string(targets) + ") in the ledger");
  return e->value;
}

std::string bound_statement(const Targets& targets, int q, int bound) {
  return "F_e(" + to_string(targets) + ";" + std::to_string(q) + ") >= " + std::to_string(bound);
}

struct Context {
  std::ostream& err;
  bool verbose = false;
  void log(const std::string& msg) const {
    if (verbose) err << "folkman: " << msg << '\n';
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for chromatic-gap extremal graphs and edge Folkman arrowing", "folkman"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool verbose = false;
  app.add_option("--out", out_path, "write the JSON document here instead of stdout");
  app.add_flag("--verbose", verbose, "progress notes on stderr");

  GraphOptions gopt;
  BudgetOptions bopt;
  std::string targets_text;
  std::string ledger_path = "folkman-ledger.json";

  auto* invariants_cmd = app.add_subcommand("invariants", "exact omega, chi, alpha, f and criticality flags");
  add_graph_options(invariants_cmd, gopt);

  auto* construct_cmd = app.add_subcommand("construct", "build a graph and print its graph6");
  add_graph_options(construct_cmd, gopt);

  auto* classify_cmd = app.add_subcommand("classify", "test for K_m+Q or K_m+C5+C5+C5");
  add_graph_options(classify_cmd, gopt);

  std::optional<int> q_opt;
  auto* arrows_cmd = app.add_subcommand("arrows", "decide G -> (a_1,...,a_r)");
  add_graph_options(arrows_cmd, gopt);
  add_budget_options(arrows_cmd, bopt);
  arrows_cmd->add_option("--targets", targets_text, "comma-separated clique sizes")->required();
  arrows_cmd->add_option("--q", q_opt, "also test membership in H_e(targets; q)");
  arrows_cmd->add_option("--ledger", ledger_path, "ledger consulted for R(targets)");

  bool record = false;
  auto* ramsey_cmd = app.add_subcommand("ramsey", "least n with K_n -> (a_1,...,a_r)");
  add_budget_options(ramsey_cmd, bopt);
  ramsey_cmd->add_option("--targets", targets_text, "comma-separated clique sizes")->required();
  ramsey_cmd->add_option("--ledger", ledger_path, "ledger file");
  ramsey_cmd->add_flag("--record", record, "store the computed value and witness in the ledger");

  std::string theorem;
  int min_n = 1;
  int max_n = kMaxEnumerationOrder;
  std::string stream_file;
  std::vector<std::string> injections;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive small-graph verification");
  verify_cmd->add_option("theorem", theorem, "dirac | gap-two | gap-three")
      ->required()
      ->check(CLI::IsMember({"dirac", "gap-two", "gap-three"}));
  verify_cmd->add_option("--min-n", min_n, "smallest order to enumerate")->check(CLI::Range(0, 7));
  verify_cmd->add_option("--max-n", max_n, "largest order to enumerate")->check(CLI::Range(0, 7));
  verify_cmd->add_option("--file", stream_file, "graph6 stream to scan instead of the enumeration ('-' = stdin)");
  verify_cmd->add_option("--inject", injections, "extra graph (graph6, K<n>, C<n>, Q or family expression)");
  verify_cmd->add_option("--jobs", bopt.jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string predicate_text;
  auto* scan_cmd = app.add_subcommand("scan", "filter a graph6 stream by an invariant predicate");
  scan_cmd->add_option("--file", stream_file, "graph6 stream ('-' = stdin)")->required();
  scan_cmd->add_option("--predicate", predicate_text, "e.g. \"f>=2 and n<=10\"")->required();
  scan_cmd->add_option("--jobs", bopt.jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string cnf_path;
  auto* cnf_cmd = app.add_subcommand("export-cnf", "write the good-colouring DIMACS instance");
  add_graph_options(cnf_cmd, gopt);
  cnf_cmd->add_option("--targets", targets_text, "comma-separated clique sizes")->required();
  cnf_cmd->add_option("--cnf", cnf_path, "DIMACS output path")->required();

  std::string ledger_action;
  std::size_t edge_limit = FamilyTestOptions{}.local_edge_limit;
  auto* ledger_cmd = app.add_subcommand("ledger", "Ramsey values and edge Folkman bounds");
  ledger_cmd->add_option("action", ledger_action, "show | seed | bound | family-test | audit")
      ->required()
      ->check(CLI::IsMember({"show", "seed", "bound", "family-test", "audit"}));
  ledger_cmd->add_option("--ledger", ledger_path, "ledger file");
  ledger_cmd->add_option("--targets", targets_text, "comma-separated clique sizes");
  ledger_cmd->add_flag("--record", record, "store derived bounds in the ledger");
  ledger_cmd->add_option("--edge-limit", edge_limit, "family graphs above this many edges are export-only");
  add_budget_options(ledger_cmd, bopt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Context ctx{err, verbose};
  json doc;
  int code = kSuccess;
  const std::string command = app.get_subcommands().front()->get_name();
  doc["command"] = command;

  try {
    if (command == "invariants") {
      const Graph g = load_graph(gopt).graph;
      doc["graph6"] = emit_graph6(g);
      doc["label"] = g.label();
      doc.update(json(report(g)));
    } else if (command == "construct") {
      const LoadedGraph lg = load_graph(gopt);
      doc["graph6"] = emit_graph6(lg.graph);
      doc["label"] = lg.graph.label();
      doc["n"] = lg.graph.order();
      doc["edges"] = lg.graph.edge_count();
      if (lg.closure_added) doc["closure_added"] = *lg.closure_added;
    } else if (command == "classify") {
      const Graph g = load_graph(gopt).graph;
      doc["graph6"] = emit_graph6(g);
      doc.update(json(classify_extremal(g)));
    } else if (command == "arrows") {
      const Graph g = load_graph(gopt).graph;
      const Targets targets = parse_targets(targets_text);
      const SearchBudget budget = make_budget(bopt);
      ctx.log("searching " + std::to_string(g.edge_count()) + " edges");
      const ArrowingVerdict v = arrows({g, targets}, budget);
      doc["graph6"] = emit_graph6(g);
      doc["targets"] = targets;
      doc["arrows"] = v.arrows;
      doc["stats"] = stats_json(v.stats);
      if (v.witness) {
        doc["witness"] = *v.witness;
        const bool ok = check_coloring({g, targets}, *v.witness);
        doc["witness_valid"] = ok;
        if (!ok) code = kAssertionFailure;
      }
      if (q_opt) {
        doc["q"] = *q_opt;
        doc["folkman_exists"] = folkman_exists(targets, *q_opt);
        doc["he_member"] = v.arrows && clique_number(g) < *q_opt;
      }
      if (v.arrows) {
        const FolkmanLedger ledger = open_ledger(ledger_path);
        if (auto r = ledger.find_ramsey(targets)) {
          const int chi = chromatic_number(g);
          const bool consistent = chi >= r->value;
          doc["chromatic_bound"] = {{"ramsey", r->value}, {"chi", chi}, {"consistent", consistent}};
          if (!consistent) code = kAssertionFailure;
        }
      }
    } else if (command == "ramsey") {
      const Targets targets = parse_targets(targets_text);
      const RamseyResult r = ramsey(targets, make_budget(bopt));
      FolkmanLedger scratch;
      scratch.record_computed_ramsey(targets, r);
      const RamseyEntry entry = *scratch.find_ramsey(targets);
      doc["targets"] = targets;
      doc["value"] = r.value;
      doc["witness_graph6"] = *entry.witness_graph6;
      doc["stats"] = stats_json(r.stats);
      bool from_file = false;
      FolkmanLedger ledger = open_ledger(ledger_path, &from_file);
      if (auto known = ledger.find_ramsey(targets); known && known->value != r.value) {
        doc["ledger_conflict"] = known->value;
        code = kAssertionFailure;
      } else if (record) {
        ledger.record_ramsey(entry);
        ledger.save(ledger_path);
        doc["recorded"] = ledger_path;
      }
    } else if (command == "verify") {
      std::vector<std::unique_ptr<GraphSource>> parts;
      std::ifstream file_in;
      if (!stream_file.empty()) {
        std::istream* in = &std::cin;
        if (stream_file != "-") {
          file_in.open(stream_file);
          if (!file_in) throw UsageError("cannot read '" + stream_file + "'");
          in = &file_in;
        }
        parts.push_back(std::make_unique<Graph6StreamSource>(*in, stream_file));
      } else {
        if (min_n > max_n) throw UsageError("--min-n exceeds --max-n");
        parts.push_back(std::make_unique<EnumerationSource>(min_n, max_n));
      }
      if (!injections.empty()) {
        std::vector<Graph> extra;
        for (const auto& text : injections) {
          extra.push_back(text.find('+') != std::string::npos ? build_family(text) : parse_graph_literal(text));
        }
        parts.push_back(std::make_unique<VectorSource>(std::move(extra), "injected"));
      }
      ChainSource source(std::move(parts));
      const ScanOptions options{bopt.jobs};
      VerificationReport rep = theorem == "dirac"     ? verify_dirac(source, options)
                               : theorem == "gap-two" ? verify_gap_two(source, options)
                                                      : verify_gap_three(source, options);
      doc.update(json(rep));
      if (!rep.input_errors.empty()) code = kUsageError;
      if (!rep.pass()) code = kAssertionFailure;
    } else if (command == "scan") {
      const Predicate predicate = Predicate::parse(predicate_text);
      std::ifstream file_in;
      std::istream* in = &std::cin;
      if (stream_file != "-") {
        file_in.open(stream_file);
        if (!file_in) throw UsageError("cannot read '" + stream_file + "'");
        in = &file_in;
      }
      Graph6StreamSource source(*in, stream_file);
      const ScanReport rep = scan_stream(source, predicate, ScanOptions{bopt.jobs});
      doc.update(json(rep));
      if (!rep.input_errors.empty()) code = kUsageError;
    } else if (command == "export-cnf") {
      const Graph g = load_graph(gopt).graph;
      const Targets targets = parse_targets(targets_text);
      const CnfSummary s = export_cnf({g, targets}, std::filesystem::path(cnf_path));
      doc["graph6"] = emit_graph6(g);
      doc["targets"] = targets;
      doc["path"] = cnf_path;
      doc["variables"] = s.variables;
      doc["clauses"] = s.clauses;
      doc["edges"] = s.edges;
      doc["at_least_one_clauses"] = s.at_least_one_clauses;
      doc["at_most_one_clauses"] = s.at_most_one_clauses;
      doc["clique_clauses"] = s.clique_clauses;
      doc["symmetry_units"] = s.symmetry_units;
    } else if (command == "ledger") {
      bool from_file = false;
      FolkmanLedger ledger = open_ledger(ledger_path, &from_file);
      doc["ledger"] = ledger_path;
      doc["from_file"] = from_file;
      auto need_targets = [&] {
        if (targets_text.empty()) throw UsageError("ledger " + ledger_action + " needs --targets");
        return parse_targets(targets_text);
      };
      if (ledger_action == "show") {
        doc["entries"] = ledger;
      } else if (ledger_action == "seed") {
        ledger.seed();
        ledger.save(ledger_path);
        doc["entries"] = ledger;
      } else if (ledger_action == "bound") {
        const Targets targets = need_targets();
        const int r = ramsey_for(ledger, targets);
        const int bound = folkman_lower_bound(targets, r);
        doc["targets"] = targets;
        doc["ramsey"] = r;
        doc["q"] = r - 2;
        doc["lower_bound"] = bound;
        doc["statement"] = bound_statement(targets, r - 2, bound);
        if (record) {
          ledger.record_folkman({targets, r - 2, bound, std::nullopt, Provenance::Derived});
          ledger.save(ledger_path);
        }
      } else if (ledger_action == "family-test") {
        const Targets targets = need_targets();
        FamilyTestOptions options;
        options.budget = make_budget(bopt);
        options.local_edge_limit = edge_limit;
        const FamilyTestReport rep = extremal_family_test(targets, ramsey_for(ledger, targets), options);
        doc.update(json(rep));
        for (const FamilyBranch* b : {&rep.kery, &rep.triple_c5}) {
          if (b->witness && !check_coloring({build_family(b->family), targets}, *b->witness)) {
            code = kAssertionFailure;
          }
        }
        if (record && rep.folkman_value) {
          ledger.record_folkman({targets, rep.q, rep.folkman_value, rep.folkman_value, Provenance::Computed});
          ledger.save(ledger_path);
        }
      } else {
        json results = json::array();
        for (const auto& e : ledger.ramsey_entries()) {
          if (e.provenance != Provenance::Computed) continue;
          const bool ok = audit_ramsey_entry(e, make_budget(bopt));
          results.push_back({{"targets", e.targets}, {"value", e.value}, {"ok", ok}});
          if (!ok) code = kAssertionFailure;
        }
        doc["audited"] = results;
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "folkman: " << e.what() << '\n';
    doc["error"] = "budget-exceeded";
    doc["stats"] = stats_json(e.stats());
    code = kBudgetExceeded;
  } catch (const TheoremViolation& e) {
    err << "folkman: " << e.what() << '\n';
    doc["error"] = "theorem-violation";
    doc["graph6"] = e.graph6();
    code = kAssertionFailure;
  } catch (const Error& e) {
    err << "folkman: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "folkman: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string text = doc.dump(2);
  if (out_path.empty()) {
    out << text << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "folkman: cannot write '" << out_path << "'\n";
      return kUsageError;
    }
    f << text << '\n';
  }
  return code;
}

}  // namespace folkman::cli
