#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "prext/detect.hpp"
#include "prext/enumerate.hpp"
#include "prext/errors.hpp"
#include "prext/harness.hpp"

using namespace prext;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

const Graph house(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
const Graph triangular_prism(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                                 {4, 5}, {0, 3}, {1, 4}, {2, 5}});

}  // namespace

TEST_CASE("find_hole on C5, C4 and the prism") {
  auto odd = find_hole(cycle(5), HoleParity::odd);
  REQUIRE(odd);
  CHECK(odd->kind == WitnessKind::OddHole);
  CHECK(odd->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(odd->verify(cycle(5)));

  CHECK(!find_hole(cycle(4), HoleParity::odd));

  auto any = find_hole(triangular_prism);
  REQUIRE(any);
  CHECK(any->vertices.size() == 4);
  CHECK(any->verify(triangular_prism));

  CHECK_THROWS_AS(find_hole(cycle(5), HoleParity::any, 3), std::invalid_argument);
}

TEST_CASE("find_hole agrees with the subset oracle") {
  auto check = [](const Graph& g) {
    struct Mode { HoleParity parity; int code; };
    for (Mode mode : {Mode{HoleParity::any, 2}, Mode{HoleParity::odd, 1},
                      Mode{HoleParity::even, 0}})
      for (int min_len : {4, 5, 6}) {
        const auto got = find_hole(g, mode.parity, min_len);
        const auto expect = oracle::shortest_hole(g, min_len, mode.code);
        REQUIRE(got.has_value() == expect.has_value());
        if (got) {
          CHECK(static_cast<int>(got->vertices.size()) == *expect);
          CHECK(got->verify(g));
        }
      }
  };
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : LabeledGraphs(n)) check(g);
  for (const Graph& g : sample_any(7, 60, 41).graphs) check(g);
}

TEST_CASE("find_house finds houses and nothing else") {
  auto w = find_house(house);
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::House);
  CHECK(w->vertices.size() == 5);
  CHECK(w->verify(house));

  CHECK(!find_house(cycle(5)));
  CHECK(!find_house(complete(5)));

  // C6 plus one short chord: a 6-vertex house.
  const Graph c6_chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                           {0, 2}});
  auto w6 = find_house(c6_chord);
  REQUIRE(w6);
  CHECK(w6->vertices.size() == 6);
  CHECK(w6->verify(c6_chord));
}

TEST_CASE("find_antihole") {
  auto six = find_antihole(complement(cycle(6)), 6);
  REQUIRE(six);
  CHECK(six->kind == WitnessKind::Antihole);
  CHECK(six->vertices.size() == 6);
  CHECK(six->verify(complement(cycle(6))));

  // C5 is self-complementary.
  auto five = find_antihole(cycle(5), 5);
  REQUIRE(five);
  CHECK(five->verify(cycle(5)));

  CHECK_THROWS_AS(find_antihole(cycle(5), 4), std::invalid_argument);

  // Bipartite graphs contain no antihole of size >= 6 (it has a triangle).
  for (const Graph& g : LabeledGraphs(6))
    if (oracle::is_bipartite(g)) CHECK(!find_antihole(g, 6));
  int sampled = 0;
  for (const Graph& g : sample_any(7, 400, 43).graphs)
    if (oracle::is_bipartite(g)) {
      CHECK(!find_antihole(g, 6));
      ++sampled;
    }
  CHECK(sampled > 0);
}

TEST_CASE("find_prism") {
  auto w = find_prism(triangular_prism);
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::Prism);
  CHECK(w->prism_lengths == std::array<int, 3>{1, 1, 1});
  CHECK(w->vertices.size() == 6);
  CHECK(w->verify(triangular_prism));

  CHECK(!find_prism(complete(4)));
  CHECK(!find_prism(cycle(6)));

  // r=1, s=1, t=3 prism on 8 vertices.
  const Graph long_prism(8, {{0, 1}, {2, 3}, {4, 5}, {5, 6}, {6, 7},
                             {0, 2}, {0, 4}, {2, 4}, {1, 3}, {1, 7}, {3, 7}});
  auto lw = find_prism(long_prism);
  REQUIRE(lw);
  CHECK(lw->verify(long_prism));
  std::array<int, 3> lengths = lw->prism_lengths;
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::array<int, 3>{1, 1, 3});
}


TEST_CASE("hole enumeration is duplicate-free and complete by length") {
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : LabeledGraphs(n)) {
      const auto expected = oracle::hole_count_by_length(g);
      for (int len = 4; len <= n; ++len) {
        int seen = 0;
        std::set<std::uint64_t> sets;
        for_each_hole_of_length(g, len, [&](std::span<const Vertex> hole) {
          ++seen;
          VertexSet s;
          for (Vertex v : hole) s.add(v);
          sets.insert(s.bits());
          return true;
        });
        CHECK(seen == expected[len]);
        CHECK(static_cast<int>(sets.size()) == seen);
      }
    }
}

TEST_CASE("find_prism agrees with definition-level enumeration") {
  auto check = [](const Graph& g) {
    const bool found = find_prism(g).has_value();
    const bool expected = oracle::has_prism_by_enumeration(
        g, [&](const std::vector<Vertex>& order, int r, int s, int t) {
          Witness candidate{WitnessKind::Prism, order, {}, {r, s, t}};
          return candidate.verify(g);
        });
    CHECK(found == expected);
    return found;
  };
  int prisms = 0;
  for (const Graph& g : sample_any(7, 120, 101).graphs) prisms += check(g);
  for (const Graph& g : sample_any(8, 30, 103).graphs) prisms += check(g);
  CHECK(prisms > 0);
}

TEST_CASE("witness re-verification rejects corrupted structures") {
  auto w = find_hole(cycle(5), HoleParity::odd);
  REQUIRE(w);
  Witness broken = *w;
  std::swap(broken.vertices[0], broken.vertices[2]);
  CHECK(!broken.verify(cycle(5)));
  Witness wrong_kind = *w;
  wrong_kind.kind = WitnessKind::EvenHole;
  CHECK(!wrong_kind.verify(cycle(5)));
}

TEST_CASE("is_meyniel on bipartite graphs, the house and C7") {
  for (const Graph& g : LabeledGraphs(5))
    if (oracle::is_bipartite(g)) CHECK(is_meyniel(g).holds);

  auto h = is_meyniel(house);
  CHECK(!h.holds);
  REQUIRE(h.witness);
  CHECK(h.witness->kind == WitnessKind::House);
  CHECK(h.witness->verify(house));

  auto c7 = is_meyniel(cycle(7));
  CHECK(!c7.holds);
  CHECK(c7.witness->kind == WitnessKind::OddHole);
}

TEST_CASE("is_meyniel_definitional examples and guard") {
  CHECK(!is_meyniel_definitional(cycle(5)));
  CHECK(is_meyniel_definitional(complete(5)));
  CHECK(!is_meyniel_definitional(house));
  CHECK_THROWS_AS(is_meyniel_definitional(Graph(11)), GuardError);

  auto w = find_odd_cycle_with_few_chords(house);
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::OddCycleFewChords);
  CHECK(w->verify(house));
  CHECK(w->chords.size() == 1);
}

TEST_CASE("recognizers agree with the definitional oracle at n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : LabeledGraphs(n))
      CHECK(is_meyniel(g).holds == is_meyniel_definitional(g));
}

TEST_CASE("is_artemis on the prism, chordal graphs and C6") {
  auto p = is_artemis(triangular_prism);
  CHECK(!p.holds);
  REQUIRE(p.witness);
  CHECK(p.witness->kind == WitnessKind::Prism);

  // Chordal graphs (no hole at all) are Artemis; exhaustive at n <= 5.
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : LabeledGraphs(n))
      if (!find_hole(g)) CHECK(is_artemis(g).holds);
  int chordal = 0;
  for (const Graph& g : sample_any(7, 60, 47).graphs)
    if (!find_hole(g)) {
      CHECK(is_artemis(g).holds);
      ++chordal;
    }
  CHECK(chordal > 0);

  CHECK(is_artemis(cycle(6)).holds);
}

TEST_CASE("is_berge on C5, bipartite graphs and the prism") {
  auto c5 = is_berge(cycle(5));
  CHECK(!c5.holds);
  CHECK(c5.witness->kind == WitnessKind::OddHole);

  for (const Graph& g : LabeledGraphs(5))
    if (oracle::is_bipartite(g)) CHECK(is_berge(g).holds);

  CHECK(is_berge(triangular_prism).holds);

  // An odd antihole that is not an odd hole.
  auto anti7 = is_berge(complement(cycle(7)));
  CHECK(!anti7.holds);
  REQUIRE(anti7.witness);
  CHECK(anti7.witness->kind == WitnessKind::Antihole);
  CHECK(anti7.witness->verify(complement(cycle(7))));
}

TEST_CASE("class containments on all graphs up to n = 7") {
  std::uint64_t violations = 0;
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t meyniel_count = 0, artemis_count = 0, berge_count = 0;
    for (const Graph& g : LabeledGraphs(n)) {
      const bool meyniel = is_meyniel(g).holds;
      const bool artemis = is_artemis(g).holds;
      const bool berge = is_berge(g).holds;
      meyniel_count += meyniel;
      artemis_count += artemis;
      berge_count += berge;
      if ((meyniel && !artemis) || (meyniel && !berge) || (artemis && !berge))
        ++violations;
    }
    // Census pins at n = 7; the recognizers behind them are oracle-checked
    // at this size, so these guard against detector regressions.
    if (n == 7) {
      CHECK(meyniel_count == 900776);
      CHECK(artemis_count == 1726076);
      CHECK(berge_count == 1741616);
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("classify on C5, K4 and C6") {
  const ClassReport c5 = classify(cycle(5));
  CHECK(!c5.meyniel);
  CHECK(!c5.artemis);
  CHECK(!c5.berge);
  CHECK(!c5.co_meyniel);
  CHECK(c5.meyniel_witness->kind == WitnessKind::OddHole);

  const ClassReport k4 = classify(complete(4));
  CHECK(k4.meyniel);
  CHECK(k4.artemis);
  CHECK(k4.berge);
  CHECK(k4.co_meyniel);
  CHECK(!k4.meyniel_witness);

  // complement(C6) is the prism, which contains a house.
  const ClassReport c6 = classify(cycle(6));
  CHECK(c6.meyniel);
  CHECK(c6.artemis);
  CHECK(c6.berge);
  CHECK(!c6.co_meyniel);
  REQUIRE(c6.co_meyniel_witness);
  CHECK(c6.co_meyniel_witness->kind == WitnessKind::House);
  CHECK(c6.co_meyniel_witness->verify(complement(cycle(6))));
}

TEST_CASE("every returned witness re-verifies, sampled") {
  for (const Graph& g : sample_any(8, 80, 53).graphs) {
    const ClassReport report = classify(g);
    if (report.meyniel_witness) CHECK(report.meyniel_witness->verify(g));
    if (report.artemis_witness) CHECK(report.artemis_witness->verify(g));
    if (report.berge_witness) CHECK(report.berge_witness->verify(g));
    if (report.co_meyniel_witness)
      CHECK(report.co_meyniel_witness->verify(complement(g)));
  }
}
