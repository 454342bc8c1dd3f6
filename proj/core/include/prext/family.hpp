#ifndef PREXT_FAMILY_HPP
#define PREXT_FAMILY_HPP

#include <vector>

#include "prext/graph.hpp"

namespace prext {

// Ordered list of non-empty, pairwise-disjoint vertex sets.  Class j
// (1-based, j = 1..m) is stored at index j-1 and owns color j.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<VertexSet> classes) : classes_(std::move(classes)) {}

  int size() const { return static_cast<int>(classes_.size()); }
  bool empty() const { return classes_.empty(); }
  const VertexSet& class_at(int j) const { return classes_[j - 1]; }  // 1-based
  const std::vector<VertexSet>& classes() const { return classes_; }

  VertexSet support() const {
    VertexSet s;
    for (const VertexSet& c : classes_) s |= c;
    return s;
  }

  // Non-empty classes, pairwise disjoint, ids inside the host.  Throws
  // std::invalid_argument naming the offending class.
  void validate_shape(const Graph& host) const;

  bool operator==(const Family&) const = default;

 private:
  std::vector<VertexSet> classes_;
};

// Pre-coloring: every class is a stable set of the host.
class StableFamily : public Family {
 public:
  using Family::Family;
  void validate(const Graph& host) const;
};

// Pre-co-coloring: every class is a clique of the host.
class CliqueFamily : public Family {
 public:
  using Family::Family;
  void validate(const Graph& host) const;
};

// Cliques of g are stable sets of its complement and vice versa; these
// rewrap the same classes for the complement-side view.
StableFamily as_stable(const CliqueFamily& q);
CliqueFamily as_clique(const StableFamily& q);

}  // namespace prext

#endif
