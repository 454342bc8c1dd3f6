#include "prext/coloring.hpp"

namespace prext {

bool Coloring::is_proper(const Graph& g) const {
  if (static_cast<int>(color.size()) != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (color[v] < 1) return false;
    for (Vertex u : g.neighbors(v))
      if (color[u] == color[v]) return false;
  }
  return true;
}

bool Coloring::uses_contiguous_colors() const {
  std::uint64_t used = 0;
  for (int c : color) {
    if (c < 1 || c > 63) return false;
    used |= std::uint64_t{1} << (c - 1);
  }
  return used == VertexSet::full(num_colors).bits();
}

}  // namespace prext
