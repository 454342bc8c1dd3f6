#ifndef PREXT_DETECT_HPP
#define PREXT_DETECT_HPP

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "prext/graph.hpp"

namespace prext {

enum class WitnessKind {
  OddHole,
  EvenHole,
  House,
  Antihole,
  Prism,
  OddCycleFewChords,
};

std::string_view to_string(WitnessKind kind);

// A found forbidden structure, independently re-checkable against its host.
//
// vertices: cyclic order for holes and antiholes; full cycle order for a
// house (the chord joins positions 0 and 2); the three paths P1 P2 P3
// concatenated for a prism; cycle order for an odd cycle with few chords.
struct Witness {
  WitnessKind kind;
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> chords;  // House, OddCycleFewChords
  std::array<int, 3> prism_lengths{0, 0, 0};      // r, s, t (edge counts)

  bool verify(const Graph& host) const;

  bool operator==(const Witness&) const = default;
};

enum class HoleParity { any, odd, even };

// Visits every hole (induced cycle, length >= 4) of exactly the given
// length, each once, in canonical order: smallest vertex first, second
// vertex smaller than the last.  Visitor returns false to stop.
void for_each_hole_of_length(
    const Graph& g, int length,
    const std::function<bool(std::span<const Vertex>)>& visit);

// Shortest qualifying hole, ties to the lexicographically smallest vertex
// list; exhaustive, so nullopt means no such hole exists.
std::optional<Witness> find_hole(const Graph& g, HoleParity parity = HoleParity::any,
                                 int min_len = 4);

// Smallest house (cycle of length >= 5 with exactly one chord, at cyclic
// distance 2), ties broken lexicographically.
std::optional<Witness> find_house(const Graph& g);

// Hole of size >= min_size (>= 5) in the complement, reported in g's ids.
std::optional<Witness> find_antihole(const Graph& g, int min_size = 5);

// Smallest prism: two disjoint triangles joined by three vertex-disjoint
// chordless paths with no other edges between them.
std::optional<Witness> find_prism(const Graph& g);

struct Recognition {
  bool holds = false;
  std::optional<Witness> witness;  // set iff !holds
};

// No odd hole and no house.
Recognition is_meyniel(const Graph& g);

// Independent oracle: every odd cycle of length >= 5 has at least two
// chords, checked by enumerating all such cycles.  Guarded at n <= 10.
bool is_meyniel_definitional(const Graph& g);
std::optional<Witness> find_odd_cycle_with_few_chords(const Graph& g);

// No odd hole, no antihole on >= 5 vertices, no prism.
Recognition is_artemis(const Graph& g);

// No odd hole in g and none in its complement (equivalently, perfect).
Recognition is_berge(const Graph& g);

struct ClassReport {
  bool meyniel = false;
  bool artemis = false;
  bool berge = false;
  bool co_meyniel = false;
  std::optional<Witness> meyniel_witness;
  std::optional<Witness> artemis_witness;
  std::optional<Witness> berge_witness;
  std::optional<Witness> co_meyniel_witness;  // lives in the complement of g
};

ClassReport classify(const Graph& g);

}  // namespace prext

#endif
