#include <doctest.h>

#include <set>
#include <sstream>

#include "folkman/constructions.hpp"
#include "folkman/enumerate.hpp"
#include "folkman/errors.hpp"
#include "folkman/family.hpp"
#include "folkman/graph6.hpp"
#include "folkman/verify.hpp"
#include "support/oracles.hpp"

using namespace folkman;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

std::string stream_of(int n) {
  std::string out;
  for (const Graph& g : enumerate_graphs(n)) out += emit_graph6(g) + "\n";
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
  CHECK_THROWS_AS(enumerate_graphs(8), InvalidArgument);
  CHECK_THROWS_AS(enumerate_graphs(-1), InvalidArgument);
}

TEST_CASE("enumeration is complete and duplicate-free, by orbit counting") {
  // Representatives are pairwise non-isomorphic and their orbits cover all
  // 2^C(n,2) labelled graphs exactly when the sum of n!/|Aut| matches.
  for (int n = 1; n <= 7; ++n) {
    const auto reps = enumerate_graphs(n);
    std::set<std::uint64_t> forms;
    std::uint64_t labelled = 0;
    for (const Graph& g : reps) {
      forms.insert(oracle::canonical_mask(g));
      labelled += factorial(n) / oracle::automorphism_count(g);
    }
    CHECK(forms.size() == reps.size());
    CHECK(labelled == std::uint64_t{1} << (n * (n - 1) / 2));
  }
}

TEST_CASE("canonicity test") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) CHECK(is_canonical(g));
  }
  // Exactly one labelling per orbit on 4 vertices is canonical.
  std::set<std::uint64_t> seen;
  int canonical = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = oracle::from_mask(4, mask);
    if (is_canonical(g)) {
      ++canonical;
      CHECK(seen.insert(oracle::canonical_mask(g)).second);
    }
  }
  CHECK(canonical == 11);
}

TEST_CASE("Dirac bound over every graph on at most 7 vertices") {
  EnumerationSource src(1, 7);
  const VerificationReport r = verify_dirac(src);
  CHECK(r.pass());
  CHECK(r.graph_count == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
  CHECK(r.counts_by_n.at(7) == 1044);
  CHECK(r.n_min == 1);
  CHECK(r.n_max == 7);
  REQUIRE(r.equality_cases.size() == 3);
  for (const EqualityCase& e : r.equality_cases) {
    const Graph g = parse_graph6(e.graph6);
    CHECK(g.order() >= 5);
    CHECK(oracle::isomorphic(g, join(complete(g.order() - 5), cycle(5))));
    CHECK(e.classification == "K" + std::to_string(g.order() - 5) + "+C5");
  }
}

TEST_CASE("no graph on at most 7 vertices has f >= 2") {
  EnumerationSource two(1, 7), three(1, 7);
  const VerificationReport a = verify_gap_two(two);
  const VerificationReport b = verify_gap_three(three);
  CHECK(a.pass());
  CHECK(b.pass());
  CHECK(a.equality_cases.empty());
  CHECK(b.equality_cases.empty());
}

TEST_CASE("small orders have no Dirac equality case below 5 vertices") {
  EnumerationSource src(1, 4);
  const VerificationReport r = verify_dirac(src);
  CHECK(r.pass());
  CHECK(r.equality_cases.empty());
}

TEST_CASE("injected extremal graphs") {
  std::vector<Graph> graphs{kery_q(), build_family("K1+Q"), build_family("C5+C5+C5"), build_family("K2+C5+C5+C5"),
                            complete(7)};
  VectorSource src(graphs, "injected");
  const VerificationReport r = verify_gap_three(src);
  CHECK(r.pass());
  REQUIRE(r.equality_cases.size() == 4);
  CHECK(r.equality_cases[0].classification == "K0+Q");
  CHECK(r.equality_cases[1].classification == "K1+Q");
  CHECK(r.equality_cases[2].classification == "K0+C5+C5+C5");
  CHECK(r.equality_cases[3].classification == "K2+C5+C5+C5");

  VectorSource pair({build_family("C5+C5"), build_family("K3+C5+C5")}, "pair");
  const VerificationReport g2 = verify_gap_two(pair);
  CHECK(g2.pass());
  REQUIRE(g2.equality_cases.size() == 2);
  CHECK(g2.equality_cases[0].classification == "K0+C5+C5");
  CHECK(g2.equality_cases[1].classification == "K3+C5+C5");
}

TEST_CASE("chained sources and input errors") {
  std::istringstream in("DLo\n\nnot-graph6!\nDhc\n");
  std::vector<std::unique_ptr<GraphSource>> parts;
  parts.push_back(std::make_unique<Graph6StreamSource>(in, "stream"));
  parts.push_back(std::make_unique<VectorSource>(std::vector<Graph>{cycle(5)}, "extra"));
  ChainSource chain(std::move(parts));
  const VerificationReport r = verify_dirac(chain);
  CHECK(r.graph_count == 3);
  REQUIRE(r.input_errors.size() == 1);
  CHECK(r.input_errors[0].line == 3);
  CHECK(r.equality_cases.size() == 3);
}

TEST_CASE("report JSON") {
  EnumerationSource src(5, 5);
  const nlohmann::json j = verify_dirac(src);
  CHECK(j.at("theorem") == "dirac");
  CHECK(j.at("graph_count") == 34);
  CHECK(j.at("violations").empty());
  CHECK(j.at("equality_cases").size() == 1);
}

TEST_CASE("parallel scans agree with serial scans") {
  ScanOptions serial, parallel;
  parallel.jobs = 3;
  parallel.batch = 50;
  EnumerationSource a(1, 7), b(1, 7);
  CHECK(nlohmann::json(verify_dirac(a, serial)) == nlohmann::json(verify_dirac(b, parallel)));
  std::istringstream s1(stream_of(6)), s2(stream_of(6));
  Graph6StreamSource x(s1, "n6"), y(s2, "n6");
  const Predicate p = Predicate::parse("chi>=4");
  CHECK(nlohmann::json(scan_stream(x, p, serial)) == nlohmann::json(scan_stream(y, p, parallel)));
}

TEST_CASE("predicates") {
  const Predicate p = Predicate::parse("f>=2 and n<=10");
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[0].field == Field::F);
  CHECK(p.terms()[0].op == Comparator::GreaterEqual);
  CHECK(p.terms()[1].value == 10);
  CHECK(Predicate::parse("chi = 3 && omega<3").terms().size() == 2);
  CHECK(Predicate::parse("alpha!=2, n>4").terms().size() == 2);

  InvariantReport r;
  r.n = 13;
  r.chi = 7;
  r.omega = 4;
  r.alpha = 2;
  r.f = 3;
  CHECK(Predicate::parse("f==3").matches(r));
  CHECK(Predicate::parse("f>=3 and n<14").matches(r));
  CHECK_FALSE(Predicate::parse("f>3").matches(r));
  CHECK_FALSE(Predicate::parse("alpha!=2").matches(r));

  for (const char* bad : {"", "f", "f>=", "g>=2", "f>=2 or n<3", "f>=x", "f>=2 and"}) {
    CHECK_THROWS_AS(Predicate::parse(bad), ParseError);
  }
}

TEST_CASE("lazy invariants decide what they can from bounds") {
  const Graph q = kery_q();
  LazyInvariants inv(q);
  const auto chi = inv.bounds(Field::Chi);
  CHECK(chi.lo <= 7);
  CHECK(chi.hi >= 7);
  CHECK(evaluate(Predicate::parse("n==13"), inv));
  CHECK(evaluate(Predicate::parse("f>=3"), inv));
  CHECK(inv.exact(Field::Chi));
  CHECK(inv.chi() == 7);
  CHECK(inv.omega() == 4);
  CHECK(inv.alpha() == 2);

  LazyInvariants k(complete(6));
  CHECK(evaluate(Predicate::parse("omega>=6"), k));
  CHECK(k.f() == 0);
}

TEST_CASE("scan_stream") {
  SUBCASE("f >= 1 on five vertices finds only C5") {
    std::istringstream in(stream_of(5));
    Graph6StreamSource src(in, "n5");
    const ScanReport r = scan_stream(src, Predicate::parse("f>=1"));
    CHECK(r.graph_count == 34);
    REQUIRE(r.matches.size() == 1);
    CHECK(oracle::isomorphic(parse_graph6(r.matches[0].graph6), cycle(5)));
    CHECK(r.matches[0].invariants.chi == 3);
  }
  SUBCASE("empty stream") {
    std::istringstream in("");
    Graph6StreamSource src(in, "empty");
    const ScanReport r = scan_stream(src, Predicate::parse("n>=0"));
    CHECK(r.graph_count == 0);
    CHECK(r.matches.empty());
    CHECK(r.input_errors.empty());
  }
  SUBCASE("bad lines are reported and skipped") {
    std::istringstream in("Dhc\n@@@\nDhc\n~~\n");
    Graph6StreamSource src(in, "mixed");
    const ScanReport r = scan_stream(src, Predicate::parse("f==1"));
    CHECK(r.graph_count == 2);
    CHECK(r.matches.size() == 2);
    CHECK(r.matches[1].index == 2);
    REQUIRE(r.input_errors.size() == 2);
    CHECK(r.input_errors[0].line == 2);
    CHECK(r.input_errors[1].line == 4);
  }
}
