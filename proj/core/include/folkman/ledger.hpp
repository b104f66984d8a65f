#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "folkman/arrowing.hpp"

namespace folkman {

enum class Provenance { Computed, Literature, Derived };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

struct RamseyEntry {
  Targets targets;
  int value = 0;
  Provenance provenance = Provenance::Literature;
  /// graph6 of each colour class of a good colouring of K_{value-1}.
  std::optional<std::vector<std::string>> witness_graph6;
};

/// Known bounds on F_e(targets; q). A missing side is unknown.
struct FolkmanEntry {
  Targets targets;
  int q = 0;
  std::optional<int> lower;
  std::optional<int> upper;
  Provenance provenance = Provenance::Literature;
};

void to_json(nlohmann::json& j, const RamseyEntry& e);
void from_json(const nlohmann::json& j, RamseyEntry& e);
void to_json(nlohmann::json& j, const FolkmanEntry& e);
void from_json(const nlohmann::json& j, FolkmanEntry& e);

/// Ramsey values and edge Folkman bounds with their provenance. Target
/// lists are compared as multisets.
class FolkmanLedger {
 public:
  /// Ledger holding only the literature constants.
  static FolkmanLedger seeded();

  /// Throws Error if the file cannot be read and ParseError on bad JSON.
  static FolkmanLedger load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const std::vector<RamseyEntry>& ramsey_entries() const { return ramsey_; }
  const std::vector<FolkmanEntry>& folkman_entries() const { return folkman_; }

  std::optional<RamseyEntry> find_ramsey(const Targets& targets) const;
  std::optional<FolkmanEntry> find_folkman(const Targets& targets, int q) const;

  /// Inserts or replaces; a computed value never silently contradicts a
  /// stored one (throws InvalidArgument instead).
  void record_ramsey(RamseyEntry entry);
  void record_computed_ramsey(const Targets& targets, const RamseyResult& result);
  /// Merges a bound, keeping the tighter side of each.
  void record_folkman(FolkmanEntry entry);

  /// Adds the literature constants missing from this ledger.
  void seed();

  friend void to_json(nlohmann::json& j, const FolkmanLedger& l);
  friend void from_json(const nlohmann::json& j, FolkmanLedger& l);

 private:
  std::vector<RamseyEntry> ramsey_;
  std::vector<FolkmanEntry> folkman_;
};

/// Re-derives a computed Ramsey entry: the stored witness must be a good
/// colouring of K_{value-1} and K_value must arrow the targets.
bool audit_ramsey_entry(const RamseyEntry& entry, const SearchBudget& budget = default_budget());

}  // namespace folkman
