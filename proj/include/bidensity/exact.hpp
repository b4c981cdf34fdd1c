#pragma once

#include <cstdint>

#include "bidensity/graph.hpp"
#include "bidensity/spectral.hpp"

namespace bidensity {

struct ExactOptions {
  int cap = 26;                      // refuse above this many enumerated vertices
  double time_limit_seconds = 600.0; // wall-clock guard; throws when exceeded
  bool parallel = true;              // serial path kept as the reference
};

struct ExactMResult {
  double value = 0.0;
  VertexSet x_witness;
  VertexSet y_witness;
  std::int64_t edges = 0;  // e(X,Y) of the witness, exact
  std::uint64_t subsets_scanned = 0;
};

/// Exact maximum of e(X,Y)/√(|X||Y|) over non-empty X,Y ⊆ V. Enumerates Y
/// over all 2ⁿ−1 subsets; for fixed Y the optimal X is a top-k set of the
/// localized degrees d_Y(v), so only the n prefixes are scanned per Y.
/// Density comparisons are done in exact integer arithmetic (e²·|X′||Y′| vs
/// e′²·|X||Y|); ties go to the lexicographically smallest (|Y|, Y-bitmask,
/// |X|). Throws cap_error above the cap or when the wall-clock guard fires.
ExactMResult m_exact(const Graph& g, const ExactOptions& opts = {});
ExactMResult m_exact(const Graph& g, int cap);

/// Exact maximum of e(X,Y)/√(|X||Y|) over ∅≠X⊆U, ∅≠Y⊆W; by the bipartite
/// reduction this equals M of the bipartite graph under the general
/// definition. Enumerates the smaller side, prefix-optimizes the larger; the
/// cap applies to the enumerated side.
ExactMResult m_exact_bipartite(const BipartiteGraph& bg,
                               const ExactOptions& opts = {});
ExactMResult m_exact_bipartite(const BipartiteGraph& bg, int cap);

struct BoundsReport {
  double avg = 0.0;     // ď(G)
  double m_value = 0.0; // M(G), exact
  int delta = 0;        // Δ(G)
  double lambda = 0.0;  // λmax(G)
  bool ok_avg_le_m = true;     // checked in exact integer arithmetic
  bool ok_m_le_delta = true;   // checked in exact integer arithmetic
  bool ok_m_le_lambda = true;  // float comparison with 1e-9 slack
  ExactMResult m;
};

/// Verifies ď(G) ≤ M(G) ≤ Δ(G) and M(G) ≤ λmax(G) on a small graph.
BoundsReport bounds_check(const Graph& g, const ExactOptions& opts = {},
                          const SpectralOptions& spectral = {});

namespace detail {
/// Serial reference implementation used by tests and the benchmark target.
ExactMResult m_exact_serial(const Graph& g, const ExactOptions& opts);
}  // namespace detail

}  // namespace bidensity
