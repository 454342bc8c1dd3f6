#include "prext/contraction.hpp"

#include <stdexcept>
#include <string>

namespace prext {

namespace {

enum class Mode { contract, cocontract };

ContractionResult contract_impl(const Graph& g, const Family& q, Mode mode) {
  const int n = g.vertex_count();
  const int m = q.size();
  const VertexSet contracted = q.support();

  ContractionResult res;
  res.original_n = n;
  res.classes = q.classes();
  for (Vertex v : g.vertices() - contracted) res.kept_vertex.push_back(v);
  const int kept = res.kept_count();
  for (int j = 1; j <= m; ++j) res.class_vertex.push_back(kept + j - 1);

  std::vector<Vertex> new_id(n, -1);
  for (int i = 0; i < kept; ++i) new_id[res.kept_vertex[i]] = i;

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < kept; ++i)
    for (Vertex v : g.neighbors(res.kept_vertex[i]) - contracted)
      if (res.kept_vertex[i] < v) edges.emplace_back(i, new_id[v]);

  for (int j = 1; j <= m; ++j) {
    const VertexSet cj = q.class_at(j);
    for (int i = 0; i < kept; ++i) {
      const VertexSet hits = g.neighbors(res.kept_vertex[i]) & cj;
      const bool linked = mode == Mode::contract ? !hits.empty() : hits == cj;
      if (linked) edges.emplace_back(i, res.class_vertex[j - 1]);
    }
  }
  if (mode == Mode::contract)
    for (int j = 1; j <= m; ++j)
      for (int j2 = j + 1; j2 <= m; ++j2)
        edges.emplace_back(res.class_vertex[j - 1], res.class_vertex[j2 - 1]);

  res.graph = Graph(kept + m, edges);

  VertexSet class_ids;
  for (Vertex c : res.class_vertex) class_ids.add(c);
  const bool ok = mode == Mode::contract ? is_clique(res.graph, class_ids)
                                         : is_stable(res.graph, class_ids);
  if (!ok) throw std::logic_error("contraction broke the class-vertex invariant");
  return res;
}

}  // namespace

ContractionResult contract(const Graph& g, const StableFamily& q) {
  q.validate(g);
  return contract_impl(g, q, Mode::contract);
}

ContractionResult cocontract(const Graph& g, const CliqueFamily& q) {
  q.validate(g);
  return contract_impl(g, q, Mode::cocontract);
}

Coloring lift_coloring(const ContractionResult& res, const Coloring& contracted) {
  if (!contracted.is_proper(res.graph))
    throw std::invalid_argument("lift_coloring: input coloring is not proper");
  const int m = static_cast<int>(res.classes.size());
  const int k = contracted.num_colors;
  if (k < m)
    throw std::invalid_argument("lift_coloring: fewer colors than classes");
  for (int c : contracted.color)
    if (c > k)
      throw std::invalid_argument("lift_coloring: color exceeds num_colors");

  // Permutation sending the color of c_j to j; remaining colors fill the
  // remaining slots in ascending order.
  std::vector<int> perm(k + 1, 0);
  std::vector<bool> target_taken(k + 1, false);
  for (int j = 1; j <= m; ++j) {
    const int c = contracted.color[res.class_vertex[j - 1]];
    if (c < 1 || c > k || perm[c] != 0)
      throw std::invalid_argument("lift_coloring: inconsistent class colors");
    perm[c] = j;
    target_taken[j] = true;
  }
  int next = 1;
  for (int c = 1; c <= k; ++c) {
    if (perm[c] != 0) continue;
    while (target_taken[next]) ++next;
    perm[c] = next;
    target_taken[next] = true;
  }

  Coloring lifted;
  lifted.color.assign(res.original_n, 0);
  lifted.num_colors = k;
  for (int i = 0; i < res.kept_count(); ++i)
    lifted.color[res.kept_vertex[i]] = perm[contracted.color[i]];
  for (int j = 1; j <= m; ++j)
    for (Vertex v : res.classes[j - 1]) lifted.color[v] = j;
  return lifted;
}

}  // namespace prext
