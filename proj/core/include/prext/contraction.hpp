#ifndef PREXT_CONTRACTION_HPP
#define PREXT_CONTRACTION_HPP

#include <vector>

#include "prext/coloring.hpp"
#include "prext/family.hpp"
#include "prext/graph.hpp"

namespace prext {

// Result of contracting a family Q = {C_1..C_m}.  Uncontracted vertices come
// first (ascending original id), then the class vertices c_1..c_m, so the
// origin map is a bijection recoverable from kept_vertex alone.
struct ContractionResult {
  Graph graph;
  std::vector<Vertex> class_vertex;  // [j-1] = id of c_j in `graph`
  std::vector<Vertex> kept_vertex;   // new id i -> original id, i < kept_count()
  std::vector<VertexSet> classes;    // the contracted family, original ids
  int original_n = 0;

  int kept_count() const { return static_cast<int>(kept_vertex.size()); }
  bool is_class_vertex(Vertex new_id) const { return new_id >= kept_count(); }
  // 1-based class index for a class vertex, 0 otherwise.
  int origin_class(Vertex new_id) const {
    return is_class_vertex(new_id) ? new_id - kept_count() + 1 : 0;
  }
  // Original vertex id for an uncontracted vertex, -1 otherwise.
  Vertex origin_vertex(Vertex new_id) const {
    return is_class_vertex(new_id) ? -1 : kept_vertex[new_id];
  }
};

// G/Q: collapse each stable class to c_j; c_j sees the uncontracted vertices
// with a neighbour in C_j, and the c_j's are pairwise adjacent.
ContractionResult contract(const Graph& g, const StableFamily& q);

// G^Q: collapse each clique class to c_j; c_j sees the uncontracted vertices
// adjacent to all of C_j, and the c_j's are pairwise non-adjacent.
ContractionResult cocontract(const Graph& g, const CliqueFamily& q);

// Turns a proper coloring of the contracted graph into a proper coloring of
// the original graph extending Q: colors are permuted so c_j receives color
// j (ties to the smallest free index), class members inherit j, uncontracted
// vertices keep their permuted color.
Coloring lift_coloring(const ContractionResult& res, const Coloring& contracted);

}  // namespace prext

#endif
