#include "folkman/predicate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "folkman/constructions.hpp"
#include "folkman/errors.hpp"

namespace folkman {
namespace {

enum class Truth { False, True, Unknown };

Truth compare(LazyInvariants::Interval iv, Comparator op, int value) {
  auto decide = [](bool always, bool never) { return always ? Truth::True : never ? Truth::False : Truth::Unknown; };
  switch (op) {
    case Comparator::Less: return decide(iv.hi < value, iv.lo >= value);
    case Comparator::LessEqual: return decide(iv.hi <= value, iv.lo > value);
    case Comparator::Greater: return decide(iv.lo > value, iv.hi <= value);
    case Comparator::GreaterEqual: return decide(iv.lo >= value, iv.hi < value);
    case Comparator::Equal: return decide(iv.lo == value && iv.hi == value, value < iv.lo || value > iv.hi);
    case Comparator::NotEqual: return decide(value < iv.lo || value > iv.hi, iv.lo == value && iv.hi == value);
  }
  return Truth::Unknown;
}

int field_value(const InvariantReport& r, Field f) {
  switch (f) {
    case Field::N: return r.n;
    case Field::Chi: return r.chi;
    case Field::Omega: return r.omega;
    case Field::Alpha: return r.alpha;
    case Field::F: return r.f;
  }
  return 0;
}

}  // namespace

Predicate Predicate::parse(std::string_view text) {
  Predicate p;
  p.text_ = std::string(text);

  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("predicate '" + std::string(text) + "': " + why + " at offset " + std::to_string(pos));
  };

  while (true) {
    skip_space();
    const std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    const std::string name = s.substr(start, pos - start);
    Comparison c;
    if (name == "n") c.field = Field::N;
    else if (name == "chi") c.field = Field::Chi;
    else if (name == "omega") c.field = Field::Omega;
    else if (name == "alpha") c.field = Field::Alpha;
    else if (name == "f") c.field = Field::F;
    else throw fail("unknown field '" + name + "'");

    skip_space();
    static const std::pair<std::string_view, Comparator> kOps[] = {
        {"<=", Comparator::LessEqual}, {">=", Comparator::GreaterEqual}, {"==", Comparator::Equal},
        {"!=", Comparator::NotEqual},  {"<", Comparator::Less},          {">", Comparator::Greater},
        {"=", Comparator::Equal},
    };
    bool found = false;
    for (const auto& [tok, op] : kOps) {
      if (s.compare(pos, tok.size(), tok) == 0) {
        c.op = op;
        pos += tok.size();
        found = true;
        break;
      }
    }
    if (!found) throw fail("expected a comparison operator");

    skip_space();
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, c.value);
    if (ec != std::errc{}) throw fail("expected an integer");
    pos = static_cast<std::size_t>(ptr - s.data());
    p.terms_.push_back(c);

    skip_space();
    if (pos == s.size()) break;
    if (s.compare(pos, 3, "and") == 0) pos += 3;
    else if (s.compare(pos, 2, "&&") == 0) pos += 2;
    else if (s[pos] == ',') pos += 1;
    else throw fail("expected 'and'");
  }
  return p;
}

bool Predicate::matches(const InvariantReport& r) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Comparison& c) {
    return compare({field_value(r, c.field), field_value(r, c.field)}, c.op, c.value) == Truth::True;
  });
}

LazyInvariants::LazyInvariants(const Graph& g) : g_(g) {
  if (g.order() == 0) {
    omega_exact_ = chi_exact_ = alpha_exact_ = true;
    return;
  }
  const int clique_lo = greedy_clique_bound(g);
  const int color_hi = dsatur_upper_bound(g);
  omega_ = {clique_lo, color_hi};
  chi_ = {clique_lo, color_hi};
  omega_exact_ = clique_lo == color_hi;
  chi_exact_ = omega_exact_;
  const Graph co = complement(g);
  alpha_ = {greedy_clique_bound(co), dsatur_upper_bound(co)};
  alpha_exact_ = alpha_.lo == alpha_.hi;
}

LazyInvariants::Interval LazyInvariants::bounds(Field field) const {
  switch (field) {
    case Field::N: return {g_.order(), g_.order()};
    case Field::Chi: return chi_;
    case Field::Omega: return omega_;
    case Field::Alpha: return alpha_;
    case Field::F: return {std::max(0, chi_.lo - omega_.hi), chi_.hi - omega_.lo};
  }
  return {};
}

bool LazyInvariants::exact(Field field) const {
  switch (field) {
    case Field::N: return true;
    case Field::Chi: return chi_exact_;
    case Field::Omega: return omega_exact_;
    case Field::Alpha: return alpha_exact_;
    case Field::F: return chi_exact_ && omega_exact_;
  }
  return true;
}

int LazyInvariants::omega() {
  if (!omega_exact_) {
    const int w = clique_number(g_);
    omega_ = {w, w};
    chi_.lo = std::max(chi_.lo, w);
    omega_exact_ = true;
  }
  return omega_.lo;
}

int LazyInvariants::chi() {
  if (!chi_exact_) {
    const int c = chromatic_number(g_);
    chi_ = {c, c};
    omega_.hi = std::min(omega_.hi, c);
    chi_exact_ = true;
  }
  return chi_.lo;
}

int LazyInvariants::alpha() {
  if (!alpha_exact_) {
    const int a = independence_number(g_);
    alpha_ = {a, a};
    alpha_exact_ = true;
  }
  return alpha_.lo;
}

void LazyInvariants::refine(Field field) {
  switch (field) {
    case Field::N: break;
    case Field::Chi: chi(); break;
    case Field::Omega: omega(); break;
    case Field::Alpha: alpha(); break;
    case Field::F:
      omega();
      chi();
      break;
  }
}

bool evaluate(const Predicate& p, LazyInvariants& inv) {
  // Refinement order: cheapest solvers first.
  static const Field kOrder[] = {Field::Omega, Field::Alpha, Field::Chi};
  while (true) {
    bool unknown = false;
    for (const auto& c : p.terms()) {
      const Truth t = compare(inv.bounds(c.field), c.op, c.value);
      if (t == Truth::False) return false;
      if (t == Truth::Unknown) unknown = true;
    }
    if (!unknown) return true;
    bool refined = false;
    for (Field f : kOrder) {
      const bool needed = std::any_of(p.terms().begin(), p.terms().end(), [&](const Comparison& c) {
        const bool uses = c.field == f || (c.field == Field::F && (f == Field::Omega || f == Field::Chi));
        return uses && compare(inv.bounds(c.field), c.op, c.value) == Truth::Unknown;
      });
      if (needed && !inv.exact(f)) {
        inv.refine(f);
        refined = true;
        break;
      }
    }
    if (!refined) return false;  // unreachable: every field is exact by now
  }
}

}  // namespace folkman
