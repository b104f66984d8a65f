#include "folkman/family.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "folkman/constructions.hpp"
#include "folkman/errors.hpp"

namespace folkman {

int FamilyExpr::order() const {
  int total = 0;
  for (const auto& t : terms) total += t.order();
  return total;
}

std::string FamilyExpr::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += '+';
    switch (t.kind) {
      case FamilyAtom::Kind::Complete: out += "K" + std::to_string(t.size); break;
      case FamilyAtom::Kind::Cycle: out += "C" + std::to_string(t.size); break;
      case FamilyAtom::Kind::Kery: out += "Q"; break;
    }
  }
  return out;
}

FamilyExpr parse_family(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParseError("empty family expression");

  FamilyExpr expr;
  std::string_view rest = compact;
  while (true) {
    auto plus = rest.find('+');
    std::string_view atom = rest.substr(0, plus);
    if (atom.empty()) throw ParseError("empty term in family expression '" + std::string(text) + "'");

    FamilyAtom a;
    if (atom == "Q") {
      a.kind = FamilyAtom::Kind::Kery;
    } else if (atom.front() == 'K' || atom.front() == 'C') {
      a.kind = atom.front() == 'K' ? FamilyAtom::Kind::Complete : FamilyAtom::Kind::Cycle;
      std::string_view digits = atom.substr(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), a.size);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("bad term '" + std::string(atom) + "'");
      }
      if (a.kind == FamilyAtom::Kind::Cycle && a.size < 3) {
        throw InvalidArgument("cycle term needs at least 3 vertices: '" + std::string(atom) + "'");
      }
    } else {
      throw ParseError("unknown term '" + std::string(atom) + "'");
    }
    expr.terms.push_back(a);
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  return expr;
}

Graph build_family(const FamilyExpr& expr) {
  if (expr.order() > kMaxVertices) {
    throw CapacityError("family '" + expr.to_string() + "' has " + std::to_string(expr.order()) +
                        " vertices, above the 64-vertex capacity");
  }
  Graph g;
  for (const auto& t : expr.terms) {
    switch (t.kind) {
      case FamilyAtom::Kind::Complete: g = join(g, complete(t.size)); break;
      case FamilyAtom::Kind::Cycle: g = join(g, cycle(t.size)); break;
      case FamilyAtom::Kind::Kery: g = join(g, kery_q()); break;
    }
  }
  return g.with_label(expr.to_string());
}

Graph build_family(std::string_view text) { return build_family(parse_family(text)); }

FamilyExpr kery_family(int m) {
  return {{{FamilyAtom::Kind::Complete, m}, {FamilyAtom::Kind::Kery, 0}}};
}

FamilyExpr triple_c5_family(int m) {
  const FamilyAtom c5{FamilyAtom::Kind::Cycle, 5};
  return {{{FamilyAtom::Kind::Complete, m}, c5, c5, c5}};
}

}  // namespace folkman
