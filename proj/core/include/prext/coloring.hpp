#ifndef PREXT_COLORING_HPP
#define PREXT_COLORING_HPP

#include <vector>

#include "prext/graph.hpp"

namespace prext {

// Vertex coloring with 1-based color indices.  For colorings produced by the
// solvers the used colors form {1..num_colors}.
struct Coloring {
  std::vector<int> color;  // per vertex, 0 only for the empty coloring
  int num_colors = 0;

  bool is_proper(const Graph& g) const;
  bool uses_contiguous_colors() const;

  bool operator==(const Coloring&) const = default;
};

}  // namespace prext

#endif
