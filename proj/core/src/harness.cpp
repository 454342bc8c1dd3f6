#include "prext/harness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "prext/contraction.hpp"
#include "prext/errors.hpp"
#include "prext/io.hpp"
#include "prext/solve.hpp"

namespace prext {

namespace {

int resolve_threads(const HarnessOptions& options) {
  if (options.threads > 0) return options.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Tally {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<std::uint64_t> counters;

  void bump(std::size_t i) {
    if (counters.size() <= i) counters.resize(i + 1, 0);
    ++counters[i];
  }
};

void sort_violations(std::vector<Violation>& vs) {
  std::sort(vs.begin(), vs.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.graph, a.family, a.detail) <
           std::tie(b.graph, b.family, b.detail);
  });
}

// Fans per_item out over indices 0..count-1; per-thread tallies merge in
// worker order, so results do not depend on scheduling.
template <typename Fn>
Tally parallel_scan(std::uint64_t count, int threads, Fn per_item) {
  const int workers = static_cast<int>(std::min<std::uint64_t>(
      std::max<std::uint64_t>(count, 1), static_cast<std::uint64_t>(threads)));
  std::vector<Tally> tallies(workers);
  auto run = [&](int w) {
    for (std::uint64_t i = w; i < count; i += workers)
      per_item(i, tallies[w]);
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Tally merged;
  for (Tally& t : tallies) {
    merged.checked += t.checked;
    if (merged.counters.size() < t.counters.size())
      merged.counters.resize(t.counters.size(), 0);
    for (std::size_t i = 0; i < t.counters.size(); ++i)
      merged.counters[i] += t.counters[i];
    merged.violations.insert(merged.violations.end(),
                             std::make_move_iterator(t.violations.begin()),
                             std::make_move_iterator(t.violations.end()));
  }
  return merged;
}

template <typename Fn>
Tally scan_labeled_graphs(int n, int threads, Fn per_graph) {
  return parallel_scan(labeled_graph_count(n), threads,
                       [&](std::uint64_t code, Tally& tally) {
                         per_graph(Graph::from_code(n, code), tally);
                       });
}

template <typename Fn>
Tally scan_graph_list(const std::vector<Graph>& graphs, int threads, Fn per_graph) {
  return parallel_scan(graphs.size(), threads,
                       [&](std::uint64_t i, Tally& tally) {
                         per_graph(graphs[i], tally);
                       });
}

Violation make_violation(const Graph& g, const Family& q,
                         std::optional<Witness> w, std::string detail) {
  return Violation{edge_list_string(g), family_string(q), std::move(w),
                   std::move(detail)};
}

std::string join_ids(std::span<const Vertex> vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

}  // namespace

CliqueFamily imperfection_witness(const Graph& g) {
  Recognition mey = is_meyniel(g);
  if (mey.holds)
    throw std::invalid_argument("imperfection_witness: graph is Meyniel");
  if (mey.witness->kind == WitnessKind::OddHole) return CliqueFamily{};
  // House: co-contracting the chord endpoints as singletons deletes the
  // chord, leaving the odd house cycle as an odd hole.
  const auto [x, y] = mey.witness->chords[0];
  return CliqueFamily({VertexSet{x}, VertexSet{y}});
}

VerificationReport verify_theorem1_forward(int n_max,
                                           const HarnessOptions& options) {
  if (n_max > 6) throw GuardError("verify_theorem1 is exhaustive up to n = 6");
  const int threads = resolve_threads(options);
  VerificationReport report;
  report.property = "theorem1-forward";
  report.scope = "labeled graphs, 1 <= n <= " + std::to_string(n_max) +
                 ", exhaustive, all clique families";
  std::uint64_t graphs = 0, meyniel_graphs = 0;
  for (int n = 1; n <= n_max; ++n) {
    Tally t = scan_labeled_graphs(n, threads, [&](const Graph& g, Tally& tally) {
      tally.bump(0);
      if (!is_meyniel(g).holds) return;
      tally.bump(1);
      for_each_clique_family(g, [&](const CliqueFamily& q) {
        ++tally.checked;
        Recognition b = is_berge(cocontract(g, q).graph);
        if (!b.holds)
          tally.violations.push_back(make_violation(
              g, q, std::move(b.witness),
              "co-contraction is not Berge (witness in contracted ids)"));
        return true;
      });
    });
    report.checked += t.checked;
    graphs += t.counters.empty() ? 0 : t.counters[0];
    meyniel_graphs += t.counters.size() > 1 ? t.counters[1] : 0;
    report.violations.insert(report.violations.end(), t.violations.begin(),
                             t.violations.end());
  }
  report.notes.push_back("graphs scanned: " + std::to_string(graphs));
  report.notes.push_back("meyniel graphs: " + std::to_string(meyniel_graphs));
  sort_violations(report.violations);
  return report;
}

VerificationReport verify_theorem1_reverse(int n_max,
                                           const HarnessOptions& options) {
  if (n_max > 6) throw GuardError("verify_theorem1 is exhaustive up to n = 6");
  const int threads = resolve_threads(options);
  VerificationReport report;
  report.property = "theorem1-reverse";
  report.scope = "labeled graphs, 1 <= n <= " + std::to_string(n_max) +
                 ", exhaustive, constructive witness";
  for (int n = 1; n <= n_max; ++n) {
    Tally t = scan_labeled_graphs(n, threads, [&](const Graph& g, Tally& tally) {
      if (is_meyniel(g).holds) return;
      ++tally.checked;
      const CliqueFamily q = imperfection_witness(g);
      Recognition b = is_berge(cocontract(g, q).graph);
      if (b.holds)
        tally.violations.push_back(make_violation(
            g, q, std::nullopt,
            "witness co-contraction is Berge but should not be"));
    });
    report.checked += t.checked;
    report.violations.insert(report.violations.end(), t.violations.begin(),
                             t.violations.end());
  }
  report.notes.push_back("non-meyniel graphs checked: " +
                         std::to_string(report.checked));
  sort_violations(report.violations);
  return report;
}

VerificationReport verify_theorem1(int n_max, const HarnessOptions& options) {
  VerificationReport fwd = verify_theorem1_forward(n_max, options);
  VerificationReport rev = verify_theorem1_reverse(n_max, options);
  VerificationReport report;
  report.property = "theorem1";
  report.scope = fwd.scope;
  report.checked = fwd.checked + rev.checked;
  report.violations = std::move(fwd.violations);
  report.violations.insert(report.violations.end(), rev.violations.begin(),
                           rev.violations.end());
  for (const std::string& s : fwd.notes) report.notes.push_back("forward: " + s);
  for (const std::string& s : rev.notes) report.notes.push_back("reverse: " + s);
  sort_violations(report.violations);
  return report;
}

namespace {

void theorem2_check_graph(const Graph& g, Tally& tally) {
  for_each_clique_family(g, [&](const CliqueFamily& q) {
    ++tally.checked;
    Recognition a = is_artemis(cocontract(g, q).graph);
    if (!a.holds)
      tally.violations.push_back(make_violation(
          g, q, std::move(a.witness),
          "co-contraction is not Artemis (witness in contracted ids)"));
    return true;
  });
}

}  // namespace

VerificationReport verify_theorem2(int n_max, int sample_budget,
                                   std::uint64_t seed,
                                   const HarnessOptions& options) {
  if (n_max > 7) throw GuardError("verify_theorem2 is exhaustive up to n = 7");
  const int threads = resolve_threads(options);
  VerificationReport report;
  report.property = "theorem2";
  report.scope = "meyniel graphs, 1 <= n <= " + std::to_string(n_max) +
                 " exhaustive" +
                 (sample_budget > 0
                      ? ", plus " + std::to_string(sample_budget) +
                            " sampled at n = " + std::to_string(harness_sample_n) +
                            " seed " + std::to_string(seed)
                      : "") +
                 ", all clique families";
  std::uint64_t meyniel_graphs = 0;
  for (int n = 1; n <= n_max; ++n) {
    Tally t = scan_labeled_graphs(n, threads, [&](const Graph& g, Tally& tally) {
      if (!is_meyniel(g).holds) return;
      tally.bump(0);
      theorem2_check_graph(g, tally);
    });
    report.checked += t.checked;
    meyniel_graphs += t.counters.empty() ? 0 : t.counters[0];
    report.violations.insert(report.violations.end(), t.violations.begin(),
                             t.violations.end());
  }
  report.notes.push_back("exhaustive meyniel graphs: " +
                         std::to_string(meyniel_graphs));
  if (sample_budget > 0) {
    SampleResult sample = sample_meyniel(harness_sample_n, sample_budget, seed);
    Tally t = scan_graph_list(sample.graphs, threads, theorem2_check_graph);
    report.checked += t.checked;
    report.violations.insert(report.violations.end(), t.violations.begin(),
                             t.violations.end());
    report.notes.push_back("sampled meyniel graphs: " +
                           std::to_string(sample.graphs.size()));
    if (sample.budget_exhausted)
      report.notes.push_back("sampling budget exhausted before " +
                             std::to_string(sample_budget) + " graphs");
  }
  sort_violations(report.violations);
  return report;
}

VerificationReport verify_lemma1(int n_max, const HarnessOptions& options) {
  if (n_max > 5) throw GuardError("verify_lemma1 is exhaustive up to n = 5");
  const int threads = resolve_threads(options);
  VerificationReport report;
  report.property = "lemma1";
  report.scope = "labeled graphs, 1 <= n <= " + std::to_string(n_max) +
                 ", all stable families, 1 <= k <= n";
  for (int n = 1; n <= n_max; ++n) {
    Tally t = scan_labeled_graphs(n, threads, [&](const Graph& g, Tally& tally) {
      for_each_stable_family(g, [&](const StableFamily& q) {
        const ContractionResult res = contract(g, q);
        std::vector<int> fixed(res.graph.vertex_count(), 0);
        for (int j = 1; j <= q.size(); ++j) fixed[res.class_vertex[j - 1]] = j;
        for (int k = 1; k <= n; ++k) {
          ++tally.checked;
          const std::uint64_t direct = count_extensions(g, q, k);
          const std::uint64_t via_contraction =
              count_colorings(res.graph, k, fixed);
          if (direct != via_contraction)
            tally.violations.push_back(make_violation(
                g, q, std::nullopt,
                "k=" + std::to_string(k) + " extension count " +
                    std::to_string(direct) + " != contracted count " +
                    std::to_string(via_contraction)));
        }
        return true;
      });
    });
    report.checked += t.checked;
    report.violations.insert(report.violations.end(), t.violations.begin(),
                             t.violations.end());
  }
  sort_violations(report.violations);
  return report;
}

namespace {

// Lemma: a vertex seeing both ends of a chordless path in a Meyniel graph
// sees all of it, or the path is even and it sees only even positions.
void check_lemma_meyniel(const Graph& g, Tally& tally) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for_each_chordless_path(g, u, v, n - 1, g.vertices(),
                              [&](std::span<const Vertex> path) {
        VertexSet on_path;
        for (Vertex p : path) on_path.add(p);
        VertexSet even_positions;
        for (std::size_t i = 0; i < path.size(); i += 2)
          even_positions.add(path[i]);
        const bool even_length = path.size() % 2 == 1;
        for (Vertex x : (g.neighbors(u) & g.neighbors(v)) - on_path) {
          tally.bump(0);
          ++tally.checked;
          const VertexSet hits = g.neighbors(x) & on_path;
          const bool ok =
              hits == on_path ||
              (even_length && hits.is_subset_of(even_positions));
          if (!ok)
            tally.violations.push_back(make_violation(
                g, Family{}, std::nullopt,
                "lemma=meyniel path=" + join_ids(path) + " x=" +
                    std::to_string(x)));
        }
        return true;
      });
}

// Lemma: a vertex seeing two consecutive vertices of an even hole sees all
// of it or exactly three consecutive vertices.
void check_lemma_consecutive(const Graph& g, Tally& tally) {
  const int n = g.vertex_count();
  for (int len = 4; len <= n; len += 2) {
    for_each_hole_of_length(g, len, [&](std::span<const Vertex> hole) {
      VertexSet on_hole;
      for (Vertex h : hole) on_hole.add(h);
      for (Vertex x : g.vertices() - on_hole) {
        const VertexSet hits = g.neighbors(x) & on_hole;
        bool sees_consecutive = false;
        for (int i = 0; i < len && !sees_consecutive; ++i)
          sees_consecutive =
              hits.contains(hole[i]) && hits.contains(hole[(i + 1) % len]);
        if (!sees_consecutive) continue;
        tally.bump(1);
        ++tally.checked;
        bool ok = hits == on_hole;
        if (!ok && hits.size() == 3) {
          for (int i = 0; i < len && !ok; ++i)
            ok = hits.contains(hole[i]) && hits.contains(hole[(i + 1) % len]) &&
                 hits.contains(hole[(i + 2) % len]);
        }
        if (!ok)
          tally.violations.push_back(make_violation(
              g, Family{}, std::nullopt,
              "lemma=consecutive hole=" + join_ids(hole) + " x=" +
                  std::to_string(x)));
      }
      return true;
    });
  }
}

// Lemma: clique Q, chordless path P outside Q, outside vertex z; if z and
// p_0 see all of Q, z misses p_0 and p_1, and some q in Q sees p_0 and p_n
// but not p_1, then p_n sees all of Q.  The z-p_0 non-adjacency is a real
// hypothesis: without it the conclusion fails on 6-vertex Meyniel graphs.
void check_lemma_pqz(const Graph& g, Tally& tally) {
  const int n = g.vertex_count();
  std::vector<bool> dominates(n);  // N(v) contains Q
  for_each_clique(g, g.vertices(), [&](VertexSet q) {
    const VertexSet rest = g.vertices() - q;
    for (Vertex v = 0; v < n; ++v)
      dominates[v] = q.is_subset_of(g.neighbors(v));
    for (Vertex p0 : rest) {
      if (!dominates[p0]) continue;
      for (Vertex pn : rest) {
        if (pn == p0) continue;
        for_each_chordless_path(g, p0, pn, n - 1, rest,
                                [&](std::span<const Vertex> path) {
          const Vertex p1 = path[1];
          bool q_hypothesis = false;
          for (Vertex qq : q)
            if (g.adjacent(qq, p0) && g.adjacent(qq, pn) && !g.adjacent(qq, p1)) {
              q_hypothesis = true;
              break;
            }
          if (!q_hypothesis) return true;
          VertexSet on_path;
          for (Vertex p : path) on_path.add(p);
          for (Vertex z : rest - on_path) {
            if (!dominates[z] || g.adjacent(z, p0) || g.adjacent(z, p1)) continue;
            tally.bump(2);
            ++tally.checked;
            if (!dominates[pn])
              tally.violations.push_back(make_violation(
                  g, Family{std::vector<VertexSet>{q}}, std::nullopt,
                  "lemma=pqz path=" + join_ids(path) + " z=" +
                      std::to_string(z)));
          }
          return true;
        });
      }
    }
    return true;
  });
}

// Lemma: clique Q, connected X outside Q, z seeing all of Q and none of X,
// every vertex of X missing someone in Q; then some q in Q misses all of X.
void check_lemma_notadj(const Graph& g, Tally& tally) {
  for_each_clique(g, g.vertices(), [&](VertexSet q) {
    const VertexSet rest = g.vertices() - q;
    const std::uint64_t rest_bits = rest.bits();
    for (std::uint64_t sub = rest_bits; sub != 0;
         sub = (sub - 1) & rest_bits) {
      const VertexSet x_set = VertexSet::from_bits(sub);
      if (!is_connected(g, x_set)) continue;
      bool all_have_nonneighbour = true;
      for (Vertex x : x_set)
        if (q.is_subset_of(g.neighbors(x))) {
          all_have_nonneighbour = false;
          break;
        }
      if (!all_have_nonneighbour) continue;
      for (Vertex z : rest - x_set) {
        if (!q.is_subset_of(g.neighbors(z))) continue;
        if (g.neighbors(z).intersects(x_set)) continue;
        tally.bump(3);
        ++tally.checked;
        bool conclusion = false;
        for (Vertex qq : q)
          if (!g.neighbors(qq).intersects(x_set)) {
            conclusion = true;
            break;
          }
        if (!conclusion)
          tally.violations.push_back(make_violation(
              g, Family{std::vector<VertexSet>{q}}, std::nullopt,
              "lemma=notadj X=" + join_ids(x_set.to_vector()) + " z=" +
                  std::to_string(z)));
      }
    }
    return true;
  });
}

// Lemmas over all co-contractions: no antihole of size >= 6, no odd hole,
// no prism.
void check_cocontraction_lemmas(const Graph& g, Tally& tally) {
  for_each_clique_family(g, [&](const CliqueFamily& q) {
    const Graph h = cocontract(g, q).graph;
    tally.bump(4);
    ++tally.checked;
    if (auto anti = find_antihole(h, 6))
      tally.violations.push_back(
          make_violation(g, q, std::move(anti),
                         "lemma=antihole co-contraction has an antihole >= 6"));
    tally.bump(5);
    ++tally.checked;
    if (auto hole = find_hole(h, HoleParity::odd))
      tally.violations.push_back(make_violation(
          g, q, std::move(hole), "lemma=oddhole co-contraction has an odd hole"));
    tally.bump(6);
    ++tally.checked;
    if (auto prism = find_prism(h))
      tally.violations.push_back(make_violation(
          g, q, std::move(prism), "lemma=prism co-contraction has a prism"));
    return true;
  });
}

void structural_battery(const Graph& g, Tally& tally) {
  check_lemma_meyniel(g, tally);
  check_lemma_consecutive(g, tally);
  check_lemma_pqz(g, tally);
  check_lemma_notadj(g, tally);
  check_cocontraction_lemmas(g, tally);
}

const char* structural_counter_names[] = {
    "meyniel", "consecutive", "pqz", "notadj", "antihole", "oddhole", "prism"};

}  // namespace

VerificationReport verify_structural_lemmas(int n_max, int sample_budget,
                                            std::uint64_t seed,
                                            const HarnessOptions& options) {
  if (n_max > 6)
    throw GuardError("verify_structural_lemmas is exhaustive up to n = 6");
  const int threads = resolve_threads(options);
  VerificationReport report;
  report.property = "structural-lemmas";
  report.scope = "meyniel graphs, 1 <= n <= " + std::to_string(n_max) +
                 " exhaustive" +
                 (sample_budget > 0
                      ? ", plus " + std::to_string(sample_budget) +
                            " sampled at n = " + std::to_string(harness_sample_n) +
                            " seed " + std::to_string(seed)
                      : "");
  std::vector<std::uint64_t> counters;
  auto absorb = [&](Tally& t) {
    report.checked += t.checked;
    if (counters.size() < t.counters.size()) counters.resize(t.counters.size(), 0);
    for (std::size_t i = 0; i < t.counters.size(); ++i)
      counters[i] += t.counters[i];
    report.violations.insert(report.violations.end(), t.violations.begin(),
                             t.violations.end());
  };
  for (int n = 1; n <= n_max; ++n) {
    Tally t = scan_labeled_graphs(n, threads, [&](const Graph& g, Tally& tally) {
      if (!is_meyniel(g).holds) return;
      structural_battery(g, tally);
    });
    absorb(t);
  }
  if (sample_budget > 0) {
    SampleResult sample = sample_meyniel(harness_sample_n, sample_budget, seed);
    Tally t = scan_graph_list(sample.graphs, threads, structural_battery);
    absorb(t);
    report.notes.push_back("sampled meyniel graphs: " +
                           std::to_string(sample.graphs.size()));
    if (sample.budget_exhausted)
      report.notes.push_back("sampling budget exhausted before " +
                             std::to_string(sample_budget) + " graphs");
  }
  counters.resize(std::size(structural_counter_names), 0);
  for (std::size_t i = 0; i < counters.size(); ++i)
    report.notes.push_back(std::string("lemma ") + structural_counter_names[i] +
                           " instances: " + std::to_string(counters[i]));
  sort_violations(report.violations);
  return report;
}

VerificationReport closure_probe(int n_max, const HarnessOptions& options) {
  if (n_max > 6) throw GuardError("closure_probe is exhaustive up to n = 6");
  const int threads = resolve_threads(options);
  VerificationReport report;
  report.property = "closure";
  report.scope = "labeled graphs, 1 <= n <= " + std::to_string(n_max) +
                 ", exhaustive membership in Perfect^-";
  for (int n = 1; n <= n_max; ++n) {
    Tally t = scan_labeled_graphs(n, threads, [&](const Graph& g, Tally& tally) {
      ++tally.checked;
      bool member = true;
      for_each_clique_family(g, [&](const CliqueFamily& q) {
        if (!is_berge(cocontract(g, q).graph).holds) {
          member = false;
          return false;
        }
        return true;
      });
      const bool meyniel = is_meyniel(g).holds;
      if (member != meyniel)
        tally.violations.push_back(make_violation(
            g, Family{}, std::nullopt,
            std::string("Perfect^- membership ") +
                (member ? "true" : "false") + " but is_meyniel " +
                (meyniel ? "true" : "false")));
    });
    report.checked += t.checked;
    report.violations.insert(report.violations.end(), t.violations.begin(),
                             t.violations.end());
  }

  // Strictness witness: the triangular prism is Berge but not Artemis, so
  // by the co-contraction theorems it lies outside the closure of Meyniel.
  const Graph prism(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                        {0, 3}, {1, 4}, {2, 5}});
  ++report.checked;
  const Recognition berge = is_berge(prism);
  const Recognition artemis = is_artemis(prism);
  const bool witness_ok = berge.holds && !artemis.holds && artemis.witness &&
                          artemis.witness->kind == WitnessKind::Prism &&
                          artemis.witness->verify(prism);
  if (witness_ok) {
    report.notes.push_back(
        "strictness witness: triangular prism is Berge but not Artemis; "
        "prism witness " +
        join_ids(artemis.witness->vertices));
  } else {
    report.violations.push_back(make_violation(
        prism, Family{}, std::nullopt,
        "triangular prism should be Berge and non-Artemis with a prism witness"));
  }
  sort_violations(report.violations);
  return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct SplitMix {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

Graph random_graph(int n, double p, SplitMix& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Rejection sampling: densities fan out from 1/2 on repeated rejection so
// both sparse-friendly and dense-friendly classes stay reachable.
constexpr double density_schedule[] = {0.5, 0.3, 0.7, 0.15, 0.85, 0.05, 0.95};
constexpr int density_block = 64;
constexpr int max_attempts_per_item = 10'000;

template <typename Keep>
SampleResult sample_where(int n, int count, std::uint64_t seed, Keep keep) {
  SampleResult out;
  for (int item = 0; item < count; ++item) {
    SplitMix rng{splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(item) + 1)};
    bool accepted = false;
    for (int attempt = 0; attempt < max_attempts_per_item; ++attempt) {
      const double p =
          density_schedule[(attempt / density_block) % std::size(density_schedule)];
      Graph g = random_graph(n, p, rng);
      if (keep(g)) {
        out.graphs.push_back(std::move(g));
        accepted = true;
        break;
      }
    }
    if (!accepted) out.budget_exhausted = true;
  }
  return out;
}

}  // namespace

SampleResult sample_meyniel(int n, int count, std::uint64_t seed) {
  return sample_where(n, count, seed,
                      [](const Graph& g) { return is_meyniel(g).holds; });
}

SampleResult sample_co_meyniel(int n, int count, std::uint64_t seed) {
  return sample_where(n, count, seed, [](const Graph& g) {
    return is_meyniel(complement(g)).holds;
  });
}

SampleResult sample_any(int n, int count, std::uint64_t seed) {
  return sample_where(n, count, seed, [](const Graph&) { return true; });
}

}  // namespace prext
