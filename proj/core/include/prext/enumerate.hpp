#ifndef PREXT_ENUMERATE_HPP
#define PREXT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "prext/family.hpp"
#include "prext/graph.hpp"

namespace prext {

// 2^(n(n-1)/2), the number of labeled simple graphs on n vertices.
std::uint64_t labeled_graph_count(int n);

// All labeled graphs on n vertices in deterministic (edge-code) order.
// Exhaustive enumeration is guarded at n <= 7.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(int n);

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t code) : n_(n), code_(code) {}

    Graph operator*() const { return Graph::from_code(n_, code_); }
    iterator& operator++() { ++code_; return *this; }
    iterator operator++(int) { iterator t = *this; ++*this; return t; }
    bool operator==(const iterator&) const = default;

   private:
    int n_ = 0;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, labeled_graph_count(n_)}; }
  std::uint64_t size() const { return labeled_graph_count(n_); }

 private:
  int n_;
};

// Visits every non-empty clique of g inside `within`, each exactly once.
void for_each_clique(const Graph& g, VertexSet within,
                     const std::function<bool(VertexSet)>& visit);

// Visits every family of pairwise-disjoint non-empty cliques (including the
// empty family and all-singleton families), each unordered family once, with
// classes in canonical order: sorted by smallest member.  Visitor returns
// false to stop.  Not size-guarded; the materializing form below is.
void for_each_clique_family(const Graph& g,
                            const std::function<bool(const CliqueFamily&)>& visit);

// Stable-set counterpart (clique families of the complement).
void for_each_stable_family(const Graph& g,
                            const std::function<bool(const StableFamily&)>& visit);

// Materialized enumeration; guarded at n <= 8.
std::vector<CliqueFamily> enumerate_clique_families(const Graph& g);

}  // namespace prext

#endif
