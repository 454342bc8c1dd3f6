#ifndef PREXT_HARNESS_HPP
#define PREXT_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prext/detect.hpp"
#include "prext/enumerate.hpp"
#include "prext/family.hpp"
#include "prext/graph.hpp"

namespace prext {

// One failed check, serialized so it can be replayed independently: the
// graph in compact edge-list text, the family in `q j: ...` text.
struct Violation {
  std::string graph;
  std::string family;
  std::optional<Witness> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  std::string property;
  std::string scope;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
};

struct HarnessOptions {
  int threads = 0;  // 0 = hardware concurrency
};

// Sample size used by the sampled phases of verify_theorem2 and
// verify_structural_lemmas.
inline constexpr int harness_sample_n = 9;

// Theorem: G is Meyniel iff every co-contraction G^Q is Berge.  The forward
// direction scans every clique family of every Meyniel graph; the reverse
// direction checks non-Meyniel graphs constructively via
// imperfection_witness.  Exhaustive over labeled graphs, n_max <= 6.
VerificationReport verify_theorem1(int n_max, const HarnessOptions& options = {});
VerificationReport verify_theorem1_forward(int n_max,
                                           const HarnessOptions& options = {});
VerificationReport verify_theorem1_reverse(int n_max,
                                           const HarnessOptions& options = {});

// For a non-Meyniel g: the empty family if g has an odd hole, otherwise the
// two singleton classes of a house chord.  cocontract(g, result) is then
// guaranteed non-Berge.  Throws std::invalid_argument on Meyniel input.
CliqueFamily imperfection_witness(const Graph& g);

// Theorem: every co-contraction of a Meyniel graph is Artemis.  Exhaustive
// for n <= n_max, plus sample_budget sampled Meyniel graphs at
// n = harness_sample_n when sample_budget > 0.
VerificationReport verify_theorem2(int n_max, int sample_budget,
                                   std::uint64_t seed,
                                   const HarnessOptions& options = {});

// Lemma: extensions of Q are in bijection with colorings of G/Q fixing
// c_j = j; checked as exact count equality for all graphs, stable families
// and k <= n.  n_max <= 5.
VerificationReport verify_lemma1(int n_max, const HarnessOptions& options = {});

// The supporting structural lemmas, each checked over all configurations
// matching its hypotheses on every Meyniel graph: chordless-path attachments,
// even-hole attachments, clique/path/vertex configurations, connected-set
// non-neighbours, and (via all co-contractions) no antihole of size >= 6, no
// odd hole, no prism.
VerificationReport verify_structural_lemmas(int n_max, int sample_budget,
                                            std::uint64_t seed,
                                            const HarnessOptions& options = {});

// (a) Membership in Perfect^- (every co-contraction Berge) coincides with
// being Meyniel, for all graphs with n <= n_max.  (b) The triangular prism
// certifies that the co-contraction closure of Meyniel is a strict subclass
// of Perfect: it is Berge but not Artemis.
VerificationReport closure_probe(int n_max, const HarnessOptions& options = {});

struct SampleResult {
  std::vector<Graph> graphs;
  bool budget_exhausted = false;
};

// Rejection sampling from seeded random graphs, density adapted over
// repeated rejections; deterministic for a fixed seed and independent of
// thread count (per-item sub-seeds).
SampleResult sample_meyniel(int n, int count, std::uint64_t seed);
SampleResult sample_co_meyniel(int n, int count, std::uint64_t seed);
// Unconditioned seeded random graphs (edge probability 1/2).
SampleResult sample_any(int n, int count, std::uint64_t seed);

}  // namespace prext

#endif
