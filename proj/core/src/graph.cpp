#include "prext/graph.hpp"

#include <stdexcept>
#include <string>

namespace prext {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > max_vertices)
    throw std::invalid_argument("graph size out of range: " + std::to_string(n));
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge_checked(u, v);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n) {
  for (auto [u, v] : edges) add_edge_checked(u, v);
}

void Graph::add_edge_checked(Vertex u, Vertex v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  if (u == v)
    throw std::invalid_argument("self loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

Graph Graph::from_code(int n, std::uint64_t code) {
  if (n > 11)
    throw std::invalid_argument("from_code supports n <= 11");
  Graph g(n);
  int e = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++e)
      if ((code >> e) & 1u) g.add_edge_checked(i, j);
  return g;
}

std::uint64_t Graph::code() const {
  if (n_ > 11)
    throw std::invalid_argument("code supports n <= 11");
  std::uint64_t code = 0;
  int e = 0;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j, ++e)
      if (adjacent(i, j)) code |= std::uint64_t{1} << e;
  return code;
}

int Graph::edge_count() const {
  int twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices()))
    throw std::out_of_range("induced_subgraph: vertex id out of range");
  InducedSubgraph out;
  out.to_original = s.to_vector();
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int k = static_cast<int>(out.to_original.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(out.to_original[i], out.to_original[j]))
        edges.emplace_back(i, j);
  out.graph = Graph(k, edges);
  return out;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(s - VertexSet{v}).is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_stable(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_connected(const Graph& g, VertexSet s) {
  if (s.size() <= 1) return true;
  VertexSet reached{s.min()};
  for (;;) {
    VertexSet frontier;
    for (Vertex v : reached) frontier |= g.neighbors(v) & s;
    frontier -= reached;
    if (frontier.empty()) break;
    reached |= frontier;
  }
  return reached == s;
}

bool is_chordless_path(const Graph& g, std::span<const Vertex> path,
                       bool allow_endpoint_edge) {
  const int k = static_cast<int>(path.size());
  VertexSet seen;
  for (Vertex v : path) {
    if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
    seen.add(v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (allow_endpoint_edge && i == 0 && j == k - 1 && k > 2) continue;
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
    }
  return true;
}

namespace {

struct PathSearch {
  const Graph& g;
  Vertex target;
  int max_len;
  VertexSet within;
  bool allow_endpoint_edge;
  const std::function<bool(std::span<const Vertex>)>& visit;
  std::vector<Vertex> path;
  bool stopped = false;

  // banned_ext blocks chords against every earlier path vertex including the
  // start; banned_close leaves the start's neighbourhood out so the endpoint
  // exemption can apply.
  void grow(VertexSet banned_ext, VertexSet banned_close) {
    if (stopped) return;
    const Vertex last = path.back();
    const VertexSet nbrs = g.neighbors(last) & within;
    const VertexSet close_mask = allow_endpoint_edge ? banned_close : banned_ext;
    // Closing here uses path.size() edges.
    if ((nbrs - close_mask).contains(target) &&
        static_cast<int>(path.size()) <= max_len) {
      path.push_back(target);
      if (!is_chordless_path(g, path, allow_endpoint_edge))
        throw std::logic_error("chordless path search produced a chord");
      if (!visit(path)) stopped = true;
      path.pop_back();
      if (stopped) return;
    }
    // Any extension needs at least path.size()+1 edges to close.
    if (static_cast<int>(path.size()) >= max_len) return;
    VertexSet candidates = nbrs - banned_ext;
    candidates.remove(target);
    const VertexSet next_ext = banned_ext | g.neighbors(last);
    const VertexSet next_close =
        path.size() >= 2 ? banned_close | g.neighbors(last) : banned_close;
    for (Vertex w : candidates) {
      path.push_back(w);
      grow(next_ext | VertexSet{w}, next_close | VertexSet{w});
      path.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_chordless_path(
    const Graph& g, Vertex u, Vertex v, int max_len, VertexSet within,
    const std::function<bool(std::span<const Vertex>)>& visit,
    bool allow_endpoint_edge) {
  if (u == v) throw std::invalid_argument("chordless path endpoints coincide");
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::out_of_range("chordless path endpoint out of range");
  if (max_len < 1 || !within.contains(u) || !within.contains(v)) return;
  PathSearch search{g, v, max_len, within, allow_endpoint_edge, visit, {u}};
  search.grow(VertexSet{u}, VertexSet{u});
}

std::vector<std::vector<Vertex>> chordless_paths_between(const Graph& g,
                                                         Vertex u, Vertex v,
                                                         int max_len) {
  std::vector<std::vector<Vertex>> out;
  for_each_chordless_path(
      g, u, v, max_len, g.vertices(),
      [&](std::span<const Vertex> p) {
        out.emplace_back(p.begin(), p.end());
        return true;
      },
      /*allow_endpoint_edge=*/true);
  return out;
}

}  // namespace prext
