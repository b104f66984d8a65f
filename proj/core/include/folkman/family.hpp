#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// One term of an iterated join: K<m>, C<m> or Q.
struct FamilyAtom {
  enum class Kind { Complete, Cycle, Kery };

  Kind kind = Kind::Complete;
  int size = 0;  // ignored for Kery

  int order() const { return kind == Kind::Kery ? 13 : size; }
  friend bool operator==(const FamilyAtom&, const FamilyAtom&) = default;
};

/// Iterated join G1 + G2 + ... written as atoms separated by '+'.
struct FamilyExpr {
  std::vector<FamilyAtom> terms;

  int order() const;
  std::string to_string() const;
  friend bool operator==(const FamilyExpr&, const FamilyExpr&) = default;
};

/// Parses e.g. "K2 + Q", "C5+C5+C5", "K0+C5". Whitespace is ignored.
/// Throws ParseError on malformed text and InvalidArgument for C<m> with
/// m < 3.
FamilyExpr parse_family(std::string_view text);

/// Left fold of join over the atoms. Throws CapacityError beyond 64
/// vertices. The result is labeled with the canonical expression text.
Graph build_family(const FamilyExpr& expr);
Graph build_family(std::string_view text);

/// K_m + Q and K_m + C5 + C5 + C5.
FamilyExpr kery_family(int m);
FamilyExpr triple_c5_family(int m);

}  // namespace folkman
