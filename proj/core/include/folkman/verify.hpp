#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "folkman/graph.hpp"
#include "folkman/predicate.hpp"

namespace folkman {

/// A stream of graphs to scan. Sources report unreadable input through
/// input_errors() and keep going.
class GraphSource {
 public:
  struct InputError {
    std::size_t line = 0;
    std::string message;
  };

  virtual ~GraphSource() = default;
  virtual std::optional<Graph> next() = 0;
  virtual std::string describe() const = 0;
  const std::vector<InputError>& input_errors() const { return errors_; }

 protected:
  std::vector<InputError> errors_;
};

/// Every isomorphism class on min_n..max_n vertices (max_n <= 7).
class EnumerationSource final : public GraphSource {
 public:
  EnumerationSource(int min_n, int max_n);
  std::optional<Graph> next() override;
  std::string describe() const override;

 private:
  int min_n_;
  int max_n_;
  int current_n_;
  std::vector<Graph> level_;
  std::size_t pos_ = 0;
};

/// One graph6 string per line; blank lines are skipped.
class Graph6StreamSource final : public GraphSource {
 public:
  Graph6StreamSource(std::istream& in, std::string name);
  std::optional<Graph> next() override;
  std::string describe() const override { return name_; }
  std::size_t lines_read() const { return line_; }

 private:
  std::istream& in_;
  std::string name_;
  std::size_t line_ = 0;
};

class VectorSource final : public GraphSource {
 public:
  VectorSource(std::vector<Graph> graphs, std::string name);
  std::optional<Graph> next() override;
  std::string describe() const override { return name_; }

 private:
  std::vector<Graph> graphs_;
  std::string name_;
  std::size_t pos_ = 0;
};

/// Drains each source in turn.
class ChainSource final : public GraphSource {
 public:
  explicit ChainSource(std::vector<std::unique_ptr<GraphSource>> parts);
  std::optional<Graph> next() override;
  std::string describe() const override;

 private:
  std::vector<std::unique_ptr<GraphSource>> parts_;
  std::size_t current_ = 0;
};

struct EqualityCase {
  std::string graph6;
  std::string classification;
};

struct Violation {
  std::string graph6;
  std::string message;
};

inline constexpr std::size_t kViolationCap = 100;

struct VerificationReport {
  std::string theorem;
  std::string source;
  int n_min = 0;
  int n_max = 0;
  std::size_t graph_count = 0;
  std::map<int, std::size_t> counts_by_n;
  /// First kViolationCap violations; violation_count has the total.
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  std::vector<EqualityCase> equality_cases;
  std::vector<GraphSource::InputError> input_errors;

  bool pass() const { return violation_count == 0; }
};

void to_json(nlohmann::json& j, const VerificationReport& r);

struct ScanOptions {
  int jobs = 1;
  std::size_t batch = 4096;
};

/// For f >= 1: n >= chi + 2, with equality only for K_{chi-3} + C5.
VerificationReport verify_dirac(GraphSource& source, const ScanOptions& options = {});

/// For f >= 2: n >= chi + 4 and n >= 10; equality n = chi + 4 only for
/// K_{chi-6} + C5 + C5 (so n = 10 forces C5 + C5).
VerificationReport verify_gap_two(GraphSource& source, const ScanOptions& options = {});

/// For f >= 3: n >= chi + 6 and n >= 13; every equality case must classify
/// as K_m + Q or K_m + C5 + C5 + C5.
VerificationReport verify_gap_three(GraphSource& source, const ScanOptions& options = {});

struct ScanMatch {
  std::size_t index = 0;  // position in the stream, from 1
  std::string graph6;
  InvariantReport invariants;
};

struct ScanReport {
  std::string predicate;
  std::string source;
  std::size_t graph_count = 0;
  std::vector<ScanMatch> matches;
  std::vector<GraphSource::InputError> input_errors;
};

void to_json(nlohmann::json& j, const ScanReport& r);

/// Streams graphs and keeps those satisfying the predicate, evaluating
/// invariants lazily. Matches come back in input order.
ScanReport scan_stream(GraphSource& source, const Predicate& predicate, const ScanOptions& options = {});

}  // namespace folkman
