#include <doctest.h>

#include "oracles.hpp"
#include "prext/detect.hpp"
#include "prext/enumerate.hpp"
#include "prext/errors.hpp"
#include "prext/harness.hpp"
#include "prext/solve.hpp"

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

const Graph triangular_prism(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                                 {4, 5}, {0, 3}, {1, 4}, {2, 5}});
const Graph house(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});

}  // namespace

TEST_CASE("max_clique sizes") {
  CHECK(max_clique(complete(4)).size() == 4);
  CHECK(max_clique(cycle(5)).size() == 2);
  CHECK(max_clique(triangular_prism).size() == 3);
  CHECK(max_clique(Graph(0)).empty());
  CHECK(max_clique(Graph(3)).size() == 1);

  for (const Graph& g : sample_any(9, 60, 61).graphs) {
    const VertexSet clique = max_clique(g);
    CHECK(is_clique(g, clique));
    CHECK(clique.size() == oracle::max_clique_size(g));
  }
}

TEST_CASE("chromatic_coloring examples") {
  CHECK(chromatic_number(cycle(5)) == 3);
  const Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(chromatic_number(k4_minus) == 3);
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(Graph(4)) == 1);

  const Coloring c = chromatic_coloring(cycle(7));
  CHECK(c.num_colors == 3);
  CHECK(c.is_proper(cycle(7)));
  CHECK(c.uses_contiguous_colors());
}

TEST_CASE("chromatic number matches the brute-force oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : LabeledGraphs(n))
      CHECK(chromatic_number(g) == oracle::chromatic_number(g));
  for (const Graph& g : sample_any(8, 40, 67).graphs)
    CHECK(chromatic_number(g) == oracle::chromatic_number(g));
}

TEST_CASE("chi equals omega on sampled Berge graphs at n = 8") {
  int berge_count = 0;
  for (const Graph& g : sample_any(8, 120, 71).graphs)
    if (is_berge(g).holds) {
      ++berge_count;
      CHECK(chromatic_number(g) == max_clique(g).size());
    }
  CHECK(berge_count > 0);
}

TEST_CASE("find_coloring respects fixed colors and detects conflicts") {
  const Graph c4 = cycle(4);
  const std::vector<int> fixed{1, 0, 2, 0};
  auto col = find_coloring(c4, 3, fixed);
  REQUIRE(col);
  CHECK(col->is_proper(c4));
  CHECK(col->color[0] == 1);
  CHECK(col->color[2] == 2);

  CHECK(!find_coloring(c4, 2, fixed));
  const std::vector<int> clash{1, 1, 0, 0};
  CHECK(!find_coloring(c4, 4, clash));
}

TEST_CASE("count_extensions examples and guards") {
  CHECK(count_extensions(complete(2), StableFamily{}, 2) == 2);

  const Graph c4 = cycle(4);
  const StableFamily q({VertexSet{0}, VertexSet{2}});
  CHECK(count_extensions(c4, q, 2) == 0);
  CHECK(count_extensions(c4, q, 3) == 1);

  // Same counts through the contraction, both sides brute force.
  const ContractionResult res = contract(c4, q);
  std::vector<int> fixed(res.graph.vertex_count(), 0);
  for (int j = 1; j <= q.size(); ++j) fixed[res.class_vertex[j - 1]] = j;
  CHECK(count_colorings(res.graph, 3, fixed) == 1);

  CHECK_THROWS_AS(count_extensions(Graph(11), StableFamily{}, 2), GuardError);
  CHECK_THROWS_AS(count_extensions(complete(3), StableFamily{}, 4), GuardError);
}

TEST_CASE("count_colorings matches full enumeration on tiny graphs") {
  for (int n = 0; n <= 4; ++n)
    for (const Graph& g : LabeledGraphs(n))
      for (int k = 1; k <= n; ++k) {
        CHECK(count_colorings(g, k) == oracle::count_colorings_naive(g, k, {}));
        std::vector<int> fixed(n, 0);
        if (n > 0) fixed[0] = 1;
        if (n > 2) fixed[2] = std::min(2, k);
        CHECK(count_colorings(g, k, fixed) ==
              oracle::count_colorings_naive(g, k, fixed));
      }
}

TEST_CASE("prext_decide on the C4 instance") {
  const Graph c4 = cycle(4);
  const StableFamily q({VertexSet{0}, VertexSet{2}});

  const PrextAnswer no = prext_decide(c4, q, 2);
  CHECK(!no.feasible);
  CHECK(!no.extension);

  const PrextAnswer yes = prext_decide(c4, q, 3);
  REQUIRE(yes.feasible);
  CHECK(*yes.colors_used == 3);
  CHECK(yes.extension->is_proper(c4));
  CHECK(yes.extension->color[0] == 1);
  CHECK(yes.extension->color[2] == 2);

  // k below the number of classes is infeasible, not an error.
  CHECK(!prext_decide(c4, q, 1).feasible);
  CHECK_THROWS_AS(prext_decide(c4, StableFamily({VertexSet{0, 1}}), 3),
                  std::invalid_argument);
}

TEST_CASE("prext_optimize examples") {
  const Graph c4 = cycle(4);
  CHECK(*prext_optimize(c4, StableFamily({VertexSet{0}, VertexSet{2}}))
             .colors_used == 3);

  const Graph p3(3, {{0, 1}, {1, 2}});
  const PrextAnswer p = prext_optimize(p3, StableFamily({VertexSet{0, 2}}));
  CHECK(*p.colors_used == 2);
  CHECK(p.extension->color == std::vector<int>{1, 2, 1});

  for (const Graph& g : sample_any(7, 30, 73).graphs)
    CHECK(*prext_optimize(g, StableFamily{}).colors_used ==
          chromatic_number(g));
}

TEST_CASE("prext feasibility coincides with a positive extension count") {
  auto check = [](const Graph& g) {
    bool ok = true;
    const int n = g.vertex_count();
    for_each_stable_family(g, [&](const StableFamily& q) {
      for (int k = 1; k <= n; ++k)
        if (prext_decide(g, q, k).feasible != (count_extensions(g, q, k) > 0)) {
          ok = false;
          return false;
        }
      return true;
    });
    return ok;
  };
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : LabeledGraphs(n)) CHECK(check(g));
  for (const Graph& g : sample_any(6, 80, 89).graphs) CHECK(check(g));
}

TEST_CASE("co_prext_optimize covers the graph with cliques respecting Q") {
  const PrextAnswer k3 =
      co_prext_optimize(complete(3), CliqueFamily({VertexSet{0, 1}}));
  CHECK(*k3.colors_used == 1);
  CHECK(k3.extension->color == std::vector<int>{1, 1, 1});

  const Graph two_k2(4, {{0, 1}, {2, 3}});
  CHECK(*co_prext_optimize(two_k2, CliqueFamily{}).colors_used == 2);

  // Complement of the house, pre-assigning the chord endpoints.
  const Graph co_house = complement(house);
  const CliqueFamily q({VertexSet{0}, VertexSet{2}});
  const PrextAnswer ans = co_prext_optimize(co_house, q);
  const auto expected = oracle::min_clique_cover(co_house, q);
  REQUIRE(expected);
  CHECK(*ans.colors_used == *expected);
  // Classes of the answer are cliques of the host partitioning V.
  REQUIRE(ans.extension);
  for (int c = 1; c <= *ans.colors_used; ++c) {
    VertexSet part;
    for (Vertex v = 0; v < co_house.vertex_count(); ++v)
      if (ans.extension->color[v] == c) part.add(v);
    CHECK(is_clique(co_house, part));
  }
  CHECK(ans.extension->color[0] == 1);
  CHECK(ans.extension->color[2] == 2);
}

TEST_CASE("co_prext_optimize agrees with the partition oracle, sampled") {
  for (const Graph& g : sample_any(6, 40, 79).graphs) {
    const PrextAnswer ans = co_prext_optimize(g, CliqueFamily{});
    const auto expected = oracle::min_clique_cover(g, CliqueFamily{});
    REQUIRE(expected);
    CHECK(*ans.colors_used == *expected);
  }
}

TEST_CASE("clique_bound and clique_condition") {
  const Graph c4 = cycle(4);
  const StableFamily q({VertexSet{0}, VertexSet{2}});
  CHECK(clique_bound(c4, q) == 3);
  CHECK(clique_condition(c4, q, 3));
  CHECK(!clique_condition(c4, q, 2));
  CHECK(clique_bound(complete(4), StableFamily{}) == 4);

  // On complements of Meyniel graphs the bound is tight: chi(G/Q) = omega(G/Q).
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : LabeledGraphs(n)) {
      if (!is_meyniel(g).holds) continue;
      const Graph co = complement(g);
      for_each_stable_family(co, [&](const StableFamily& q) {
        const Graph contracted = contract(co, q).graph;
        CHECK(chromatic_number(contracted) == max_clique(contracted).size());
        return true;
      });
    }
}

TEST_CASE("node budget aborts with a resource error") {
  // C5 has clique bound 2 and greedy bound 3, so the decision search must
  // run; a zero budget stops it at the first branching node.
  SolveLimits limits;
  limits.node_budget = 0;
  CHECK_THROWS_AS(chromatic_coloring(cycle(5), limits), GuardError);
  CHECK_THROWS_AS(
      prext_decide(cycle(5), StableFamily({VertexSet{0}}), 3, limits),
      GuardError);
}
