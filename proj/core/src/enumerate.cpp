#include "prext/enumerate.hpp"

#include <stdexcept>

#include "prext/errors.hpp"

namespace prext {

std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

LabeledGraphs::LabeledGraphs(int n) : n_(n) {
  if (n < 0 || n > 7)
    throw GuardError("exhaustive labeled enumeration guarded at n <= 7");
}

namespace {

bool grow_clique(const Graph& g, VertexSet clique, VertexSet candidates,
                 const std::function<bool(VertexSet)>& visit) {
  if (!visit(clique)) return false;
  for (Vertex u : candidates) {
    const VertexSet above = VertexSet::from_bits(~((std::uint64_t{2} << u) - 1));
    if (!grow_clique(g, clique | VertexSet{u},
                     candidates & g.neighbors(u) & above, visit))
      return false;
  }
  return true;
}

}  // namespace

void for_each_clique(const Graph& g, VertexSet within,
                     const std::function<bool(VertexSet)>& visit) {
  for (Vertex v : within) {
    const VertexSet above = VertexSet::from_bits(~((std::uint64_t{2} << v) - 1));
    if (!grow_clique(g, VertexSet{v}, within & g.neighbors(v) & above, visit))
      return;
  }
}

namespace {

struct FamilySearch {
  const Graph& g;
  const std::function<bool(const CliqueFamily&)>& visit;
  std::vector<VertexSet> classes = {};
  bool stopped = false;

  // Classes are added with strictly increasing smallest members, which makes
  // the enumeration canonical and duplicate-free.
  void extend(Vertex from, VertexSet used) {
    if (stopped) return;
    if (!visit(CliqueFamily(classes))) {
      stopped = true;
      return;
    }
    const VertexSet free = g.vertices() - used;
    for (Vertex v : free) {
      if (v < from) continue;
      for_each_clique_with_min(v, free);
      if (stopped) return;
    }
  }

  void for_each_clique_with_min(Vertex v, VertexSet free) {
    grow(VertexSet{v}, free & g.neighbors(v) &
                           VertexSet::from_bits(~((std::uint64_t{2} << v) - 1)));
  }

  void grow(VertexSet clique, VertexSet candidates) {
    if (stopped) return;
    classes.push_back(clique);
    extend(clique.min() + 1, footprint());
    classes.pop_back();
    if (stopped) return;
    for (Vertex u : candidates) {
      const VertexSet above = VertexSet::from_bits(~((std::uint64_t{2} << u) - 1));
      grow(clique | VertexSet{u}, candidates & g.neighbors(u) & above);
      if (stopped) return;
    }
  }

  VertexSet footprint() const {
    VertexSet s;
    for (const VertexSet& c : classes) s |= c;
    return s;
  }
};

}  // namespace

void for_each_clique_family(const Graph& g,
                            const std::function<bool(const CliqueFamily&)>& visit) {
  FamilySearch search{g, visit};
  search.extend(0, {});
}

void for_each_stable_family(const Graph& g,
                            const std::function<bool(const StableFamily&)>& visit) {
  for_each_clique_family(complement(g), [&](const CliqueFamily& q) {
    return visit(StableFamily(q.classes()));
  });
}

std::vector<CliqueFamily> enumerate_clique_families(const Graph& g) {
  if (g.vertex_count() > 8)
    throw GuardError("enumerate_clique_families guarded at n <= 8");
  std::vector<CliqueFamily> out;
  for_each_clique_family(g, [&](const CliqueFamily& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

}  // namespace prext
