#include "folkman/ledger.hpp"

#include <algorithm>
#include <fstream>

#include "folkman/constructions.hpp"
#include "folkman/graph6.hpp"

namespace folkman {
namespace {

Targets sorted(Targets t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<std::string> witness_classes(const EdgeColoring& coloring, int n, int r) {
  std::vector<GraphBuilder> classes;
  for (int c = 0; c < r; ++c) classes.emplace_back(n);
  for (const auto& [e, color] : coloring.colors) classes[static_cast<std::size_t>(color - 1)].add_edge(e.first, e.second);
  std::vector<std::string> out;
  for (auto& b : classes) out.push_back(emit_graph6(std::move(b).build()));
  return out;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Literature: return "literature";
    case Provenance::Derived: return "derived";
  }
  return "literature";
}

Provenance parse_provenance(const std::string& text) {
  if (text == "computed") return Provenance::Computed;
  if (text == "literature") return Provenance::Literature;
  if (text == "derived") return Provenance::Derived;
  throw ParseError("unknown provenance '" + text + "'");
}

void to_json(nlohmann::json& j, const RamseyEntry& e) {
  j = nlohmann::json{{"targets", e.targets}, {"value", e.value}, {"provenance", to_string(e.provenance)}};
  if (e.witness_graph6) j["witness_graph6"] = *e.witness_graph6;
}

void from_json(const nlohmann::json& j, RamseyEntry& e) {
  e.targets = j.at("targets").get<Targets>();
  e.value = j.at("value").get<int>();
  e.provenance = parse_provenance(j.at("provenance").get<std::string>());
  if (j.contains("witness_graph6")) e.witness_graph6 = j.at("witness_graph6").get<std::vector<std::string>>();
}

void to_json(nlohmann::json& j, const FolkmanEntry& e) {
  j = nlohmann::json{{"targets", e.targets}, {"q", e.q}, {"provenance", to_string(e.provenance)}};
  j["lower"] = e.lower ? nlohmann::json(*e.lower) : nlohmann::json(nullptr);
  j["upper"] = e.upper ? nlohmann::json(*e.upper) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, FolkmanEntry& e) {
  e.targets = j.at("targets").get<Targets>();
  e.q = j.at("q").get<int>();
  e.provenance = parse_provenance(j.at("provenance").get<std::string>());
  if (j.contains("lower") && !j.at("lower").is_null()) e.lower = j.at("lower").get<int>();
  if (j.contains("upper") && !j.at("upper").is_null()) e.upper = j.at("upper").get<int>();
}

void to_json(nlohmann::json& j, const FolkmanLedger& l) {
  j = nlohmann::json{{"ramsey", l.ramsey_}, {"folkman", l.folkman_}};
}

void from_json(const nlohmann::json& j, FolkmanLedger& l) {
  l.ramsey_ = j.value("ramsey", nlohmann::json::array()).get<std::vector<RamseyEntry>>();
  l.folkman_ = j.value("folkman", nlohmann::json::array()).get<std::vector<FolkmanEntry>>();
}

FolkmanLedger FolkmanLedger::seeded() {
  FolkmanLedger l;
  l.seed();
  return l;
}

void FolkmanLedger::seed() {
  const RamseyEntry ramsey_constants[] = {
      {{3, 3}, 6, Provenance::Literature, std::nullopt},   {{3, 4}, 9, Provenance::Literature, std::nullopt},
      {{3, 5}, 14, Provenance::Literature, std::nullopt},  {{4, 4}, 18, Provenance::Literature, std::nullopt},
      {{3, 3, 3}, 17, Provenance::Literature, std::nullopt},
  };
  for (const auto& e : ramsey_constants) {
    if (!find_ramsey(e.targets)) ramsey_.push_back(e);
  }
  const FolkmanEntry folkman_constants[] = {
      {{3, 3, 3}, 15, 23, 23, Provenance::Literature},
      {{3, 4}, 8, 16, 16, Provenance::Literature},
      {{3, 4}, 7, 17, std::nullopt, Provenance::Literature},
  };
  for (const auto& e : folkman_constants) {
    if (!find_folkman(e.targets, e.q)) folkman_.push_back(e);
  }
}

FolkmanLedger FolkmanLedger::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read ledger '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in).get<FolkmanLedger>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed ledger '" + path.string() + "': " + e.what());
  }
}

void FolkmanLedger::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write ledger '" + path.string() + "'");
  out << nlohmann::json(*this).dump(2) << '\n';
  if (!out) throw Error("failed writing ledger '" + path.string() + "'");
}

std::optional<RamseyEntry> FolkmanLedger::find_ramsey(const Targets& targets) const {
  const Targets key = sorted(targets);
  for (const auto& e : ramsey_) {
    if (sorted(e.targets) == key) return e;
  }
  return std::nullopt;
}

std::optional<FolkmanEntry> FolkmanLedger::find_folkman(const Targets& targets, int q) const {
  const Targets key = sorted(targets);
  for (const auto& e : folkman_) {
    if (e.q == q && sorted(e.targets) == key) return e;
  }
  return std::nullopt;
}

void FolkmanLedger::record_ramsey(RamseyEntry entry) {
  validate_targets(entry.targets);
  const Targets key = sorted(entry.targets);
  for (auto& e : ramsey_) {
    if (sorted(e.targets) != key) continue;
    if (e.value != entry.value) {
      throw InvalidArgument("R(" + to_string(entry.targets) + ") = " + std::to_string(entry.value) +
                            " contradicts stored value " + std::to_string(e.value));
    }
    e = std::move(entry);
    return;
  }
  ramsey_.push_back(std::move(entry));
}

void FolkmanLedger::record_computed_ramsey(const Targets& targets, const RamseyResult& result) {
  record_ramsey({targets, result.value, Provenance::Computed,
                 witness_classes(result.witness, result.value - 1, static_cast<int>(targets.size()))});
}

void FolkmanLedger::record_folkman(FolkmanEntry entry) {
  validate_targets(entry.targets);
  const Targets key = sorted(entry.targets);
  for (auto& e : folkman_) {
    if (e.q != entry.q || sorted(e.targets) != key) continue;
    if (entry.lower && (!e.lower || *entry.lower > *e.lower)) {
      e.lower = entry.lower;
      if (e.provenance == Provenance::Literature && entry.provenance != Provenance::Literature) {
        e.provenance = entry.provenance;
      }
    }
    if (entry.upper && (!e.upper || *entry.upper < *e.upper)) e.upper = entry.upper;
    return;
  }
  folkman_.push_back(std::move(entry));
}

bool audit_ramsey_entry(const RamseyEntry& entry, const SearchBudget& budget) {
  validate_targets(entry.targets);
  if (!entry.witness_graph6 || entry.witness_graph6->size() != entry.targets.size()) return false;
  const int below = entry.value - 1;
  EdgeColoring coloring;
  for (std::size_t c = 0; c < entry.witness_graph6->size(); ++c) {
    const Graph h = parse_graph6((*entry.witness_graph6)[c]);
    if (h.order() != below) return false;
    for (const Edge& e : h.edges()) {
      if (!coloring.colors.emplace(e, static_cast<int>(c) + 1).second) return false;
    }
  }
  if (!check_coloring({complete(below), entry.targets}, coloring)) return false;
  return arrows({complete(entry.value), entry.targets}, budget).arrows;
}

}  // namespace folkman
