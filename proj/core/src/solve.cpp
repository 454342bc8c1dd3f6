#include "prext/solve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "prext/errors.hpp"

namespace prext {

namespace {

struct CliqueSearch {
  const Graph& g;
  VertexSet best = {};

  void expand(VertexSet r, VertexSet p) {
    if (r.size() > best.size()) best = r;
    while (!p.empty()) {
      if (r.size() + p.size() <= best.size()) return;
      const Vertex v = p.min();
      p.remove(v);
      expand(r | VertexSet{v}, p & g.neighbors(v));
    }
  }
};

}  // namespace

VertexSet max_clique(const Graph& g) {
  CliqueSearch search{g};
  search.expand({}, g.vertices());
  return search.best;
}

namespace {

struct ColorSearch {
  const Graph& g;
  int k;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> color = {};           // 0 = uncolored
  std::vector<std::uint64_t> seen = {};  // per vertex: bitmask of neighbour colors
  int uncolored = 0;

  bool assign_and_recurse(Vertex v, int c, int max_used) {
    if (++nodes > budget)
      throw GuardError("coloring search exceeded node budget of " +
                       std::to_string(budget));
    color[v] = c;
    --uncolored;
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    std::uint64_t touched = 0;
    for (Vertex u : g.neighbors(v))
      if (color[u] == 0 && !(seen[u] & bit)) {
        seen[u] |= bit;
        touched |= std::uint64_t{1} << u;
      }
    const bool ok = search(std::max(max_used, c));
    if (!ok) {
      for (Vertex u : VertexSet::from_bits(touched)) seen[u] &= ~bit;
      color[v] = 0;
      ++uncolored;
    }
    return ok;
  }

  // Branch vertex: maximum saturation, then maximum degree, then smallest id.
  Vertex pick() const {
    Vertex bv = -1;
    int bsat = -1, bdeg = -1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (color[v] != 0) continue;
      const int sat = std::popcount(seen[v]);
      const int deg = g.degree(v);
      if (sat > bsat || (sat == bsat && deg > bdeg)) {
        bv = v;
        bsat = sat;
        bdeg = deg;
      }
    }
    return bv;
  }

  bool search(int max_used) {
    if (uncolored == 0) return true;
    const Vertex v = pick();
    const int cap = std::min(k, max_used + 1);
    for (int c = 1; c <= cap; ++c) {
      if (seen[v] & (std::uint64_t{1} << (c - 1))) continue;
      if (assign_and_recurse(v, c, max_used)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> find_coloring(const Graph& g, int k,
                                      std::span<const int> fixed,
                                      const SolveLimits& limits) {
  const int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("find_coloring: negative k");
  if (!fixed.empty() && static_cast<int>(fixed.size()) != n)
    throw std::invalid_argument("find_coloring: fixed assignment size mismatch");

  ColorSearch search{g, k, limits.node_budget};
  search.color.assign(n, 0);
  search.seen.assign(n, 0);
  search.uncolored = n;
  int max_used = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (fixed.empty() || fixed[v] == 0) continue;
    const int c = fixed[v];
    if (c < 0 || c > 63)
      throw std::invalid_argument("find_coloring: fixed color out of range");
    if (c > k) return std::nullopt;
    search.color[v] = c;
    --search.uncolored;
    max_used = std::max(max_used, c);
  }
  // Conflicting fixed colors mean no extension exists.
  for (Vertex v = 0; v < n; ++v) {
    if (search.color[v] == 0) continue;
    for (Vertex u : g.neighbors(v)) {
      if (search.color[u] == search.color[v]) return std::nullopt;
      if (search.color[u] == 0)
        search.seen[u] |= std::uint64_t{1} << (search.color[v] - 1);
    }
  }
  if (!search.search(max_used)) return std::nullopt;

  Coloring out;
  out.color = std::move(search.color);
  for (int c : out.color) out.num_colors = std::max(out.num_colors, c);
  return out;
}

namespace {

// Greedy DSATUR: always proper, used as the upper bound.
Coloring dsatur_greedy(const Graph& g) {
  const int n = g.vertex_count();
  Coloring out;
  out.color.assign(n, 0);
  std::vector<std::uint64_t> seen(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex bv = -1;
    int bsat = -1, bdeg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (out.color[v] != 0) continue;
      const int sat = std::popcount(seen[v]);
      const int deg = g.degree(v);
      if (sat > bsat || (sat == bsat && deg > bdeg)) {
        bv = v;
        bsat = sat;
        bdeg = deg;
      }
    }
    const int c = std::countr_one(seen[bv]) + 1;
    out.color[bv] = c;
    out.num_colors = std::max(out.num_colors, c);
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    for (Vertex u : g.neighbors(bv)) seen[u] |= bit;
  }
  return out;
}

}  // namespace

Coloring chromatic_coloring(const Graph& g, const SolveLimits& limits) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  const VertexSet clique = max_clique(g);
  const Coloring greedy = dsatur_greedy(g);
  if (clique.size() == greedy.num_colors) return greedy;

  std::vector<int> fixed(n, 0);
  int next = 1;
  for (Vertex v : clique) fixed[v] = next++;
  for (int k = clique.size(); k < greedy.num_colors; ++k)
    if (auto col = find_coloring(g, k, fixed, limits)) return *col;
  return greedy;
}

int chromatic_number(const Graph& g, const SolveLimits& limits) {
  return chromatic_coloring(g, limits).num_colors;
}

namespace {

std::uint64_t count_component(const Graph& g, std::span<const Vertex> order,
                              int k, std::span<const int> fixed) {
  std::vector<int> color(g.vertex_count(), 0);
  std::uint64_t total = 0;
  const int depth_end = static_cast<int>(order.size());

  // Plain backtracking over the component's vertices in ascending id order.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == depth_end) {
      ++total;
      return;
    }
    const Vertex v = order[depth];
    std::uint64_t banned = 0;
    for (Vertex u : g.neighbors(v))
      if (color[u] != 0) banned |= std::uint64_t{1} << (color[u] - 1);
    if (!fixed.empty() && fixed[v] != 0) {
      if (fixed[v] <= k && !(banned & (std::uint64_t{1} << (fixed[v] - 1)))) {
        color[v] = fixed[v];
        self(self, depth + 1);
        color[v] = 0;
      }
      return;
    }
    for (int c = 1; c <= k; ++c) {
      if (banned & (std::uint64_t{1} << (c - 1))) continue;
      color[v] = c;
      self(self, depth + 1);
      color[v] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

std::uint64_t count_colorings(const Graph& g, int k, std::span<const int> fixed) {
  const int n = g.vertex_count();
  if (n > 10) throw GuardError("count_colorings guarded at n <= 10");
  if (k > 10) throw GuardError("count_colorings guarded at k <= 10");
  if (!fixed.empty() && static_cast<int>(fixed.size()) != n)
    throw std::invalid_argument("count_colorings: fixed assignment size mismatch");
  if (k < 0) return 0;

  std::uint64_t total = 1;
  VertexSet remaining = g.vertices();
  while (!remaining.empty()) {
    VertexSet comp{remaining.min()};
    for (;;) {
      VertexSet frontier;
      for (Vertex v : comp) frontier |= g.neighbors(v);
      frontier -= comp;
      if (frontier.empty()) break;
      comp |= frontier;
    }
    remaining -= comp;
    total *= count_component(g, comp.to_vector(), k, fixed);
    if (total == 0) return 0;
  }
  return total;
}

std::uint64_t count_extensions(const Graph& g, const StableFamily& q, int k) {
  if (k > g.vertex_count())
    throw GuardError("count_extensions guarded at k <= n");
  q.validate(g);
  std::vector<int> fixed(g.vertex_count(), 0);
  for (int j = 1; j <= q.size(); ++j)
    for (Vertex v : q.class_at(j)) fixed[v] = j;
  return count_colorings(g, k, fixed);
}

PrextAnswer prext_decide(const Graph& g, const StableFamily& q, int k,
                         const SolveLimits& limits) {
  PrextAnswer answer;
  answer.contracted = contract(g, q);
  const int m = q.size();
  if (k < m) return answer;  // colors 1..m are all pinned by non-empty classes

  std::vector<int> fixed(answer.contracted.graph.vertex_count(), 0);
  for (int j = 1; j <= m; ++j) fixed[answer.contracted.class_vertex[j - 1]] = j;
  auto col = find_coloring(answer.contracted.graph, k, fixed, limits);
  if (!col) return answer;

  answer.feasible = true;
  answer.extension = lift_coloring(answer.contracted, *col);
  answer.colors_used = answer.extension->num_colors;
  return answer;
}

PrextAnswer prext_optimize(const Graph& g, const StableFamily& q,
                           const SolveLimits& limits) {
  PrextAnswer answer;
  answer.contracted = contract(g, q);
  const Coloring opt = chromatic_coloring(answer.contracted.graph, limits);
  answer.feasible = true;
  answer.extension = lift_coloring(answer.contracted, opt);
  answer.colors_used = opt.num_colors;
  return answer;
}

PrextAnswer co_prext_optimize(const Graph& g, const CliqueFamily& q,
                              const SolveLimits& limits) {
  q.validate(g);
  return prext_optimize(complement(g), as_stable(q), limits);
}

int clique_bound(const Graph& g, const StableFamily& q) {
  return max_clique(contract(g, q).graph).size();
}

bool clique_condition(const Graph& g, const StableFamily& q, int k) {
  return clique_bound(g, q) <= k;
}

}  // namespace prext
