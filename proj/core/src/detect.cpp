#include "prext/detect.hpp"

#include <algorithm>
#include <stdexcept>

#include "prext/errors.hpp"

namespace prext {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::OddHole: return "OddHole";
    case WitnessKind::EvenHole: return "EvenHole";
    case WitnessKind::House: return "House";
    case WitnessKind::Antihole: return "Antihole";
    case WitnessKind::Prism: return "Prism";
    case WitnessKind::OddCycleFewChords: return "OddCycleFewChords";
  }
  return "?";
}

namespace {

bool all_distinct_in_range(const Graph& g, std::span<const Vertex> vs) {
  VertexSet seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
    seen.add(v);
  }
  return true;
}

// Exact induced cycle in the listed cyclic order.
bool is_hole_order(const Graph& g, std::span<const Vertex> vs) {
  const int len = static_cast<int>(vs.size());
  if (len < 4 || !all_distinct_in_range(g, vs)) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
    }
  return true;
}

bool verify_house(const Graph& g, const Witness& w) {
  const auto& vs = w.vertices;
  const int len = static_cast<int>(vs.size());
  if (len < 5 || !all_distinct_in_range(g, vs)) return false;
  if (w.chords.size() != 1) return false;
  if (w.chords[0] != std::pair<Vertex, Vertex>(vs[0], vs[2])) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      const bool chord = i == 0 && j == 2;
      if (g.adjacent(vs[i], vs[j]) != (consecutive || chord)) return false;
    }
  return true;
}

bool verify_antihole(const Graph& g, std::span<const Vertex> vs) {
  const int len = static_cast<int>(vs.size());
  if (len < 5 || !all_distinct_in_range(g, vs)) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(vs[i], vs[j]) == consecutive) return false;
    }
  return true;
}

bool verify_prism(const Graph& g, const Witness& w) {
  const auto [r, s, t] = w.prism_lengths;
  if (r < 1 || s < 1 || t < 1) return false;
  if (static_cast<int>(w.vertices.size()) != r + s + t + 3) return false;
  if (!all_distinct_in_range(g, w.vertices)) return false;
  std::array<std::span<const Vertex>, 3> paths{
      std::span<const Vertex>(w.vertices).subspan(0, r + 1),
      std::span<const Vertex>(w.vertices).subspan(r + 1, s + 1),
      std::span<const Vertex>(w.vertices).subspan(r + s + 2, t + 1),
  };
  for (const auto& p : paths)
    if (!is_chordless_path(g, p)) return false;
  const std::array<Vertex, 3> a{paths[0].front(), paths[1].front(), paths[2].front()};
  const std::array<Vertex, 3> b{paths[0].back(), paths[1].back(), paths[2].back()};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!g.adjacent(a[i], a[j]) || !g.adjacent(b[i], b[j])) return false;
  // No edges between distinct paths besides those inside A and B.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (Vertex x : paths[i])
        for (Vertex y : paths[j]) {
          if (!g.adjacent(x, y)) continue;
          const bool in_a = x == a[i] && y == a[j];
          const bool in_b = x == b[i] && y == b[j];
          if (!in_a && !in_b) return false;
        }
    }
  return true;
}

bool verify_odd_cycle_few_chords(const Graph& g, const Witness& w) {
  const auto& vs = w.vertices;
  const int len = static_cast<int>(vs.size());
  if (len < 5 || len % 2 == 0 || !all_distinct_in_range(g, vs)) return false;
  std::vector<std::pair<Vertex, Vertex>> chords;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (consecutive) {
        if (!g.adjacent(vs[i], vs[j])) return false;
      } else if (g.adjacent(vs[i], vs[j])) {
        chords.emplace_back(vs[i], vs[j]);
      }
    }
  return chords.size() <= 1 && chords == w.chords;
}

}  // namespace

bool Witness::verify(const Graph& host) const {
  switch (kind) {
    case WitnessKind::OddHole:
      return vertices.size() % 2 == 1 && is_hole_order(host, vertices);
    case WitnessKind::EvenHole:
      return vertices.size() % 2 == 0 && is_hole_order(host, vertices);
    case WitnessKind::House:
      return verify_house(host, *this);
    case WitnessKind::Antihole:
      return verify_antihole(host, vertices);
    case WitnessKind::Prism:
      return verify_prism(host, *this);
    case WitnessKind::OddCycleFewChords:
      return verify_odd_cycle_few_chords(host, *this);
  }
  return false;
}

namespace {

// Canonical hole enumeration: the root is the smallest cycle vertex and the
// second vertex is smaller than the last, so each hole appears exactly once.
struct HoleSearch {
  const Graph& g;
  int length;
  const std::function<bool(std::span<const Vertex>)>& visit;
  std::vector<Vertex> path;
  bool stopped = false;

  // banned: vertices <= root, the path itself, and neighbours of interior
  // vertices (everything except the current endpoint and the root).
  void grow(VertexSet banned) {
    if (stopped) return;
    const Vertex root = path[0];
    const Vertex last = path.back();
    const VertexSet root_adj = g.neighbors(root);
    if (static_cast<int>(path.size()) == length - 1) {
      VertexSet closers = (g.neighbors(last) & root_adj) - banned;
      for (Vertex w : closers) {
        if (w <= path[1]) continue;  // direction canonicalization
        path.push_back(w);
        if (!visit(path)) stopped = true;
        path.pop_back();
        if (stopped) return;
      }
      return;
    }
    VertexSet candidates = (g.neighbors(last) - banned) - root_adj;
    VertexSet next_banned = banned | g.neighbors(last);
    for (Vertex w : candidates) {
      path.push_back(w);
      grow(next_banned | VertexSet{w});
      path.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_hole_of_length(
    const Graph& g, int length,
    const std::function<bool(std::span<const Vertex>)>& visit) {
  const int n = g.vertex_count();
  if (length < 4 || length > n) return;
  for (Vertex root = 0; root + length <= n; ++root) {
    HoleSearch search{g, length, visit, {root}};
    const VertexSet below = VertexSet::full(root + 1);
    for (Vertex first : g.neighbors(root)) {
      if (first <= root) continue;
      search.path.assign({root, first});
      search.grow(below | VertexSet{first});
      if (search.stopped) return;
    }
  }
}

std::optional<Witness> find_hole(const Graph& g, HoleParity parity, int min_len) {
  if (min_len < 4) throw std::invalid_argument("find_hole: min_len must be >= 4");
  int start = min_len;
  if (parity == HoleParity::odd && start % 2 == 0) ++start;
  if (parity == HoleParity::even && start % 2 == 1) ++start;
  const int step = parity == HoleParity::any ? 1 : 2;
  for (int len = start; len <= g.vertex_count(); len += step) {
    std::optional<Witness> found;
    for_each_hole_of_length(g, len, [&](std::span<const Vertex> cycle) {
      found = Witness{len % 2 == 1 ? WitnessKind::OddHole : WitnessKind::EvenHole,
                      {cycle.begin(), cycle.end()},
                      {},
                      {0, 0, 0}};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Witness> find_house(const Graph& g) {
  const int n = g.vertex_count();
  for (int hole_len = 4; hole_len < n; ++hole_len) {
    std::optional<std::vector<Vertex>> best;
    for_each_hole_of_length(g, hole_len, [&](std::span<const Vertex> hole) {
      VertexSet hole_set;
      for (Vertex v : hole) hole_set.add(v);
      for (Vertex b : g.vertices() - hole_set) {
        const VertexSet hits = g.neighbors(b) & hole_set;
        if (hits.size() != 2) continue;
        int i = -1;
        for (int p = 0; p < hole_len; ++p) {
          if (hits.contains(hole[p]) && hits.contains(hole[(p + 1) % hole_len])) {
            i = p;
            break;
          }
        }
        if (i < 0) continue;  // the two neighbours are not consecutive
        // Cycle through b replacing the hole edge hole[i]-hole[i+1], which
        // becomes the unique chord; two traversal directions, keep the
        // lexicographically smaller list.
        std::vector<Vertex> fwd, rev;
        fwd.reserve(hole_len + 1);
        rev.reserve(hole_len + 1);
        fwd.push_back(hole[i]);
        fwd.push_back(b);
        for (int p = 1; p <= hole_len - 1; ++p)
          fwd.push_back(hole[(i + p) % hole_len]);
        rev.push_back(hole[(i + 1) % hole_len]);
        rev.push_back(b);
        for (int p = 0; p <= hole_len - 2; ++p)
          rev.push_back(hole[(i + hole_len - p) % hole_len]);
        std::vector<Vertex>& cand = fwd < rev ? fwd : rev;
        if (!best || cand < *best) best = cand;
      }
      return true;
    });
    if (best) {
      Witness w{WitnessKind::House, *best, {{(*best)[0], (*best)[2]}}, {0, 0, 0}};
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_antihole(const Graph& g, int min_size) {
  if (min_size < 5)
    throw std::invalid_argument("find_antihole: min_size must be >= 5");
  auto hole = find_hole(complement(g), HoleParity::any, min_size);
  if (!hole) return std::nullopt;
  return Witness{WitnessKind::Antihole, hole->vertices, {}, {0, 0, 0}};
}

namespace {

struct PrismSearch {
  const Graph& g;
  std::array<Vertex, 3> a{};
  std::array<Vertex, 3> b{};
  std::array<std::vector<Vertex>, 3> chosen = {};
  std::optional<Witness> best = {};

  void consider() {
    std::vector<Vertex> flat;
    for (const auto& p : chosen) flat.insert(flat.end(), p.begin(), p.end());
    if (best) {
      const auto sz = best->vertices.size();
      if (flat.size() > sz || (flat.size() == sz && flat >= best->vertices))
        return;
    }
    best = Witness{WitnessKind::Prism,
                   std::move(flat),
                   {},
                   {static_cast<int>(chosen[0].size()) - 1,
                    static_cast<int>(chosen[1].size()) - 1,
                    static_cast<int>(chosen[2].size()) - 1}};
  }

  // allowed_interior: base mask for path slot i given previously chosen paths.
  VertexSet interior_mask(int slot) const {
    VertexSet mask = g.vertices();
    for (int i = 0; i < 3; ++i) {
      mask.remove(a[i]);
      mask.remove(b[i]);
      if (i == slot) continue;
      mask -= g.neighbors(a[i]);
      mask -= g.neighbors(b[i]);
    }
    for (int i = 0; i < slot; ++i)
      for (Vertex x : chosen[i]) {
        mask.remove(x);
        mask -= g.neighbors(x);
      }
    mask.add(a[slot]);
    mask.add(b[slot]);
    return mask;
  }

  void fill_slot(int slot) {
    if (slot == 3) {
      consider();
      return;
    }
    const int n = g.vertex_count();
    for_each_chordless_path(g, a[slot], b[slot], n - 5, interior_mask(slot),
                            [&](std::span<const Vertex> p) {
                              chosen[slot].assign(p.begin(), p.end());
                              fill_slot(slot + 1);
                              chosen[slot].clear();
                              return true;
                            });
  }
};

}  // namespace

std::optional<Witness> find_prism(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 6) return std::nullopt;
  std::vector<std::array<Vertex, 3>> triangles;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (!g.adjacent(x, y)) continue;
      for (Vertex z = y + 1; z < n; ++z)
        if (g.adjacent(x, z) && g.adjacent(y, z)) triangles.push_back({x, y, z});
    }

  PrismSearch search{g};
  for (std::size_t i = 0; i < triangles.size(); ++i)
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      VertexSet ti{triangles[i][0], triangles[i][1], triangles[i][2]};
      VertexSet tj{triangles[j][0], triangles[j][1], triangles[j][2]};
      if (ti.intersects(tj)) continue;
      std::array<Vertex, 3> perm = triangles[j];
      std::sort(perm.begin(), perm.end());
      do {
        bool cross_ok = true;
        for (int x = 0; x < 3 && cross_ok; ++x)
          for (int y = 0; y < 3; ++y)
            if (x != y && g.adjacent(triangles[i][x], perm[y])) {
              cross_ok = false;
              break;
            }
        if (!cross_ok) continue;
        search.a = triangles[i];
        search.b = perm;
        search.fill_slot(0);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return search.best;
}

namespace {

// Enumerates odd (not necessarily induced) cycles of length >= 5, each once:
// smallest vertex first, second vertex smaller than the last.
struct OddCycleSearch {
  const Graph& g;
  const std::function<bool(std::span<const Vertex>)>& visit;
  std::vector<Vertex> path;
  VertexSet on_path;
  bool stopped = false;

  void grow() {
    if (stopped) return;
    const Vertex root = path[0];
    const Vertex last = path.back();
    if (path.size() >= 5 && path.size() % 2 == 1 && g.adjacent(last, root) &&
        path[1] < last) {
      if (!visit(path)) {
        stopped = true;
        return;
      }
    }
    const VertexSet below = VertexSet::full(root + 1);
    for (Vertex w : (g.neighbors(last) - on_path) - below) {
      path.push_back(w);
      on_path.add(w);
      grow();
      on_path.remove(w);
      path.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

std::optional<Witness> find_odd_cycle_with_few_chords(const Graph& g) {
  if (g.vertex_count() > 10)
    throw GuardError("odd-cycle enumeration guarded at n <= 10");
  std::optional<Witness> found;
  const std::function<bool(std::span<const Vertex>)> visit =
      [&](std::span<const Vertex> cycle) {
        const int len = static_cast<int>(cycle.size());
        std::vector<std::pair<Vertex, Vertex>> chords;
        for (int i = 0; i < len && chords.size() < 2; ++i)
          for (int j = i + 1; j < len; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (!consecutive && g.adjacent(cycle[i], cycle[j])) {
              chords.emplace_back(cycle[i], cycle[j]);
              if (chords.size() >= 2) break;
            }
          }
        if (chords.size() >= 2) return true;
        found = Witness{WitnessKind::OddCycleFewChords,
                        {cycle.begin(), cycle.end()},
                        std::move(chords),
                        {0, 0, 0}};
        return false;
      };
  for (Vertex root = 0; root + 5 <= g.vertex_count() && !found; ++root) {
    OddCycleSearch search{g, visit, {root}, VertexSet{root}};
    search.grow();
  }
  return found;
}

bool is_meyniel_definitional(const Graph& g) {
  return !find_odd_cycle_with_few_chords(g).has_value();
}

Recognition is_meyniel(const Graph& g) {
  if (auto hole = find_hole(g, HoleParity::odd)) return {false, std::move(hole)};
  if (auto house = find_house(g)) return {false, std::move(house)};
  return {true, std::nullopt};
}

Recognition is_artemis(const Graph& g) {
  if (auto hole = find_hole(g, HoleParity::odd)) return {false, std::move(hole)};
  // Prism before antihole: an antihole on six vertices is also a prism with
  // r=s=t=1 and is reported as such.
  if (auto prism = find_prism(g)) return {false, std::move(prism)};
  if (auto anti = find_antihole(g, 5)) return {false, std::move(anti)};
  return {true, std::nullopt};
}

Recognition is_berge(const Graph& g) {
  if (auto hole = find_hole(g, HoleParity::odd)) return {false, std::move(hole)};
  if (auto hole = find_hole(complement(g), HoleParity::odd, 5)) {
    Witness w{WitnessKind::Antihole, hole->vertices, {}, {0, 0, 0}};
    return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

ClassReport classify(const Graph& g) {
  ClassReport report;
  Recognition mey = is_meyniel(g);
  Recognition art = is_artemis(g);
  Recognition berge = is_berge(g);
  Recognition co_mey = is_meyniel(complement(g));
  report.meyniel = mey.holds;
  report.artemis = art.holds;
  report.berge = berge.holds;
  report.co_meyniel = co_mey.holds;
  report.meyniel_witness = std::move(mey.witness);
  report.artemis_witness = std::move(art.witness);
  report.berge_witness = std::move(berge.witness);
  report.co_meyniel_witness = std::move(co_mey.witness);
  return report;
}

}  // namespace prext
