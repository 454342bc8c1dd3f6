#ifndef PREXT_GRAPH_HPP
#define PREXT_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace prext {

using Vertex = int;

// Set of vertex ids 0..62, one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static constexpr VertexSet full(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) add(v);
  }

  bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  void add(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void remove(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  // Smallest member; only valid on a non-empty set.
  Vertex min() const { return std::countr_zero(bits_); }

  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  std::uint64_t bits() const { return bits_; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  // Iterates members in ascending order.
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t bits) : bits_(bits) {}

    Vertex operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() { bits_ &= bits_ - 1; return *this; }
    iterator operator++(int) { iterator t = *this; ++*this; return t; }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t bits_ = 0;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph on vertices 0..n-1.  Adjacency is one
// 64-bit row per vertex, which caps n at 63.
class Graph {
 public:
  static constexpr int max_vertices = 63;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  // Bit e of `code` selects edge e in the fixed pair order (0,1),(0,2),...,
  // (0,n-1),(1,2),...  Requires n <= 11 so the code fits one word.
  static Graph from_code(int n, std::uint64_t code);
  std::uint64_t code() const;

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1u; }
  VertexSet neighbors(Vertex v) const { return VertexSet::from_bits(adj_[v]); }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;

  void add_edge_checked(Vertex u, Vertex v);
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new id -> original id, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

bool is_clique(const Graph& g, VertexSet s);
bool is_stable(const Graph& g, VertexSet s);
// Empty sets and singletons count as connected.
bool is_connected(const Graph& g, VertexSet s);

// Visits every chordless path from u to v with at most max_len edges and all
// vertices inside `within`; each path is visited exactly once, as a vertex
// list starting at u.  Returning false from the visitor stops the
// enumeration.  With allow_endpoint_edge the u-v pair itself is exempt from
// the chord test (such paths close holes); by default paths are strictly
// induced.
void for_each_chordless_path(
    const Graph& g, Vertex u, Vertex v, int max_len, VertexSet within,
    const std::function<bool(std::span<const Vertex>)>& visit,
    bool allow_endpoint_edge = false);

// The endpoint pair is exempt here: for adjacent u, v this yields both the
// edge and every chordless way around.
std::vector<std::vector<Vertex>> chordless_paths_between(const Graph& g,
                                                         Vertex u, Vertex v,
                                                         int max_len);

bool is_chordless_path(const Graph& g, std::span<const Vertex> path,
                       bool allow_endpoint_edge = false);

}  // namespace prext

#endif
