#include <doctest.h>

#include "oracles.hpp"
#include "prext/contraction.hpp"
#include "prext/detect.hpp"
#include "prext/enumerate.hpp"
#include "prext/errors.hpp"
#include "prext/harness.hpp"
#include "prext/io.hpp"

using namespace prext;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

const Graph house(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});

}  // namespace

TEST_CASE("labeled graph enumeration counts") {
  CHECK(labeled_graph_count(3) == 8);
  CHECK(labeled_graph_count(4) == 64);
  CHECK(labeled_graph_count(6) == 32768);
  std::uint64_t seen = 0;
  for (const Graph& g : LabeledGraphs(4)) {
    CHECK(g.vertex_count() == 4);
    ++seen;
  }
  CHECK(seen == 64);
  CHECK_THROWS_AS(LabeledGraphs(8), GuardError);
}

TEST_CASE("clique family enumeration matches hand counts and the naive filter") {
  CHECK(enumerate_clique_families(Graph(2, {{0, 1}})).size() == 5);
  CHECK(enumerate_clique_families(Graph(2)).size() == 4);
  CHECK(enumerate_clique_families(Graph(1)).size() == 2);
  CHECK_THROWS_AS(enumerate_clique_families(Graph(9)), GuardError);

  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : LabeledGraphs(n)) {
      const auto families = enumerate_clique_families(g);
      CHECK(families.size() == oracle::count_clique_families_naive(g));
      // Canonical order and validity.
      for (const CliqueFamily& q : families) {
        CHECK_NOTHROW(q.validate(g));
        for (int j = 2; j <= q.size(); ++j)
          CHECK(q.class_at(j - 1).min() < q.class_at(j).min());
      }
    }
}

TEST_CASE("imperfection_witness") {
  CHECK(imperfection_witness(cycle(7)).size() == 0);

  const CliqueFamily hw = imperfection_witness(house);
  REQUIRE(hw.size() == 2);
  CHECK(hw.class_at(1) == VertexSet{0});
  CHECK(hw.class_at(2) == VertexSet{2});
  CHECK(!is_berge(cocontract(house, hw).graph).holds);

  // An even house always contains an odd hole (its hole part is odd), so
  // the 6-house lands in the empty-family branch.
  const Graph six_house(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                            {0, 2}});
  const CliqueFamily sw = imperfection_witness(six_house);
  CHECK(sw.size() == 0);
  CHECK(!is_berge(cocontract(six_house, sw).graph).holds);

  // A 7-house is odd and hole-free, so the chord endpoints are returned.
  const Graph seven_house(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                              {6, 0}, {0, 2}});
  const CliqueFamily sevw = imperfection_witness(seven_house);
  REQUIRE(sevw.size() == 2);
  CHECK(sevw.class_at(1) == VertexSet{0});
  CHECK(sevw.class_at(2) == VertexSet{2});
  CHECK(!is_berge(cocontract(seven_house, sevw).graph).holds);

  CHECK_THROWS_AS(imperfection_witness(cycle(4)), std::invalid_argument);
}

TEST_CASE("verify_theorem1 passes at small sizes") {
  const VerificationReport fwd = verify_theorem1_forward(4);
  CHECK(fwd.passed());
  CHECK(fwd.checked > 0);
  const VerificationReport rev = verify_theorem1_reverse(5);
  CHECK(rev.passed());
  CHECK(rev.checked > 0);  // C5 and friends exist at n = 5
  const VerificationReport both = verify_theorem1(4);
  CHECK(both.passed());
  CHECK_THROWS_AS(verify_theorem1(7), GuardError);
}

TEST_CASE("verify_theorem2 exhaustive and sampled") {
  const VerificationReport r = verify_theorem2(4, 0, 0);
  CHECK(r.passed());
  const VerificationReport s = verify_theorem2(3, 5, 97);
  CHECK(s.passed());
  bool noted = false;
  for (const std::string& note : s.notes)
    noted |= note.find("sampled meyniel graphs: 5") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("verify_lemma1 passes and is guarded") {
  const VerificationReport r = verify_lemma1(4);
  CHECK(r.passed());
  CHECK(r.checked > 0);
  CHECK_THROWS_AS(verify_lemma1(6), GuardError);
}

TEST_CASE("verify_structural_lemmas passes at small sizes") {
  const VerificationReport r = verify_structural_lemmas(5, 0, 0);
  CHECK(r.passed());
  CHECK(r.checked > 0);
}

TEST_CASE("closure_probe passes and records the prism strictness witness") {
  const VerificationReport r = closure_probe(4);
  CHECK(r.passed());
  bool noted = false;
  for (const std::string& note : r.notes)
    noted |= note.find("strictness witness") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("violations replay from their serialization") {
  // Fabricate the check theorem2 would record for a non-Meyniel graph: C5
  // with the empty family fails is_artemis on its own co-contraction.
  Recognition bad = is_artemis(cocontract(cycle(5), CliqueFamily{}).graph);
  REQUIRE(!bad.holds);
  const Violation v{edge_list_string(cycle(5)), family_string(CliqueFamily{}),
                    bad.witness, "co-contraction is not Artemis"};

  const Graph replayed_graph = parse_edge_list_string(v.graph);
  const CliqueFamily replayed_family(
      parse_family_string(v.family).classes());
  const Recognition again =
      is_artemis(cocontract(replayed_graph, replayed_family).graph);
  CHECK(!again.holds);
  REQUIRE(again.witness);
  CHECK(again.witness->vertices == v.witness->vertices);
  CHECK(again.witness->verify(replayed_graph));
}

TEST_CASE("sampling is deterministic, self-checking and seed-sensitive") {
  const SampleResult a = sample_meyniel(5, 10, 1);
  REQUIRE(a.graphs.size() == 10);
  CHECK(!a.budget_exhausted);
  for (const Graph& g : a.graphs) CHECK(is_meyniel(g).holds);

  const SampleResult b = sample_meyniel(5, 10, 1);
  for (std::size_t i = 0; i < 10; ++i) CHECK(a.graphs[i] == b.graphs[i]);

  const SampleResult c = sample_meyniel(5, 10, 2);
  bool any_different = false;
  for (std::size_t i = 0; i < 10; ++i)
    any_different |= !(a.graphs[i] == c.graphs[i]);
  CHECK(any_different);

  // Every graph on 3 vertices is Meyniel: the first attempt always lands.
  for (const Graph& g : LabeledGraphs(3)) CHECK(is_meyniel(g).holds);
  const SampleResult tiny = sample_meyniel(3, 4, 7);
  const SampleResult raw = sample_any(3, 4, 7);
  for (std::size_t i = 0; i < 4; ++i) CHECK(tiny.graphs[i] == raw.graphs[i]);

  for (const Graph& g : sample_co_meyniel(6, 8, 3).graphs)
    CHECK(is_meyniel(complement(g)).holds);
}

TEST_CASE("harness runs are thread-count independent") {
  HarnessOptions one;
  one.threads = 1;
  HarnessOptions four;
  four.threads = 4;
  const VerificationReport a = verify_theorem1(4, one);
  const VerificationReport b = verify_theorem1(4, four);
  CHECK(a.checked == b.checked);
  CHECK(a.violations == b.violations);
  CHECK(a.notes == b.notes);
  const VerificationReport c = verify_lemma1(4, one);
  const VerificationReport d = verify_lemma1(4, four);
  CHECK(c.checked == d.checked);
  CHECK(c.violations == d.violations);
}
