#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"
#include "folkman/invariants.hpp"

namespace folkman {

enum class Field { N, Chi, Omega, Alpha, F };
enum class Comparator { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };

struct Comparison {
  Field field = Field::N;
  Comparator op = Comparator::Equal;
  int value = 0;
};

/// Conjunction of comparisons over n, chi, omega, alpha and f, e.g.
/// "f>=2 and n<=10". Terms are joined by "and", "&&" or ",".
class Predicate {
 public:
  /// Throws ParseError.
  static Predicate parse(std::string_view text);

  const std::string& text() const { return text_; }
  const std::vector<Comparison>& terms() const { return terms_; }

  bool matches(const InvariantReport& r) const;

 private:
  std::string text_;
  std::vector<Comparison> terms_;
};

/// Invariants of one graph, computed on demand. Cheap greedy bounds come
/// first; exact solvers run only for fields a predicate cannot decide from
/// the bounds.
class LazyInvariants {
 public:
  explicit LazyInvariants(const Graph& g);

  struct Interval {
    int lo = 0;
    int hi = 0;
  };

  Interval bounds(Field field) const;
  bool exact(Field field) const;
  void refine(Field field);

  int omega();
  int chi();
  int alpha();
  int f() { return chi() - omega(); }

 private:
  const Graph& g_;
  Interval omega_;
  Interval chi_;
  Interval alpha_;
  bool omega_exact_ = false;
  bool chi_exact_ = false;
  bool alpha_exact_ = false;
};

/// Decides the predicate, refining only the fields it needs.
bool evaluate(const Predicate& p, LazyInvariants& inv);

}  // namespace folkman
