#ifndef PREXT_SOLVE_HPP
#define PREXT_SOLVE_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "prext/coloring.hpp"
#include "prext/contraction.hpp"
#include "prext/family.hpp"
#include "prext/graph.hpp"

namespace prext {

struct SolveLimits {
  std::uint64_t node_budget = 10'000'000;  // search nodes before GuardError
};

// Exact maximum clique (branch and bound, deterministic).
VertexSet max_clique(const Graph& g);

// Proper k-coloring extending the fixed assignment (fixed[v] in 1..k, or 0
// for free vertices), or nullopt when none exists.  DSATUR branching order,
// new colors capped at one above the current maximum.
std::optional<Coloring> find_coloring(const Graph& g, int k,
                                      std::span<const int> fixed = {},
                                      const SolveLimits& limits = {});

// Exact chromatic number with a witnessing coloring: maximum-clique lower
// bound and seeding, greedy DSATUR upper bound, then decision searches.
Coloring chromatic_coloring(const Graph& g, const SolveLimits& limits = {});
int chromatic_number(const Graph& g, const SolveLimits& limits = {});

// Exact number of proper k-colorings extending the fixed assignment.
// Counts factor over connected components.  Guarded at n <= 10, k <= n.
std::uint64_t count_colorings(const Graph& g, int k,
                              std::span<const int> fixed = {});

// Number of k-colorings of g whose class j contains C_j.  Guarded like
// count_colorings; independent of the contraction route.
std::uint64_t count_extensions(const Graph& g, const StableFamily& q, int k);

struct PrextAnswer {
  bool feasible = false;
  std::optional<Coloring> extension;
  std::optional<int> colors_used;
  ContractionResult contracted;  // audit trail
};

// Is there a k-coloring of g extending q?  Reduces to coloring G/Q with c_j
// pre-assigned color j and lifts the result back.  k < m is reported as
// infeasible, not as an error.
PrextAnswer prext_decide(const Graph& g, const StableFamily& q, int k,
                         const SolveLimits& limits = {});

// Minimum number of colors extending q, which equals chi(G/Q).
PrextAnswer prext_optimize(const Graph& g, const StableFamily& q,
                           const SolveLimits& limits = {});

// Minimum partition of V(g) into cliques with class j containing C_j;
// solved as prext_optimize on the complement.  The extension's classes are
// cliques of g (it is a proper coloring of complement(g)).
PrextAnswer co_prext_optimize(const Graph& g, const CliqueFamily& q,
                              const SolveLimits& limits = {});

// omega(G/Q): the clique lower bound on the colors needed to extend q.
int clique_bound(const Graph& g, const StableFamily& q);
// The Hujter-Tuza clique condition omega(G/Q) <= k.
bool clique_condition(const Graph& g, const StableFamily& q, int k);

}  // namespace prext

#endif
