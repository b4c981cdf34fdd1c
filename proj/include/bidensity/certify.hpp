#pragma once

#include <cstdint>
#include <string>

#include "bidensity/graph.hpp"
#include "bidensity/rounding.hpp"
#include "bidensity/spectral.hpp"

namespace bidensity {

/// Which density-vs-λmax theorem backs the certificate's guarantee factor.
enum class Variant { T1, T2, T3 };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// A constructive witness (X, Y) with e(X,Y)/√(|X||Y|) ≥ guarantee_factor·λmax.
struct Certificate {
  Variant variant = Variant::T1;
  VertexSet x_set;  // subset of U (or of V for a plain graph)
  VertexSet y_set;  // subset of W (or of V)
  std::int64_t edges = 0;
  double density = 0.0;
  double lambda = 0.0;
  double guarantee_factor = 0.0;
  /// The min-side corollary factor 1/(½·ln(min{m,n}) + 2), reported alongside.
  double min_side_factor = 0.0;
  std::string side = "left";  // which orientation (B vs Bᵗ) produced the winner
  bool converged = true;
};

/// Runs the Perron-vector double-rounding pipeline on a bipartite graph:
/// (1) non-negative left singular vector x, (2) prefix rounding of Bᵗx picks
/// Y ⊆ W, (3) a variant-specific rounding of the localized degrees d_Y picks
/// X ⊆ U. Both orientations are evaluated and the denser certificate wins
/// (ties go to the left orientation). Guarantee factors:
///   T1: 4/√((ln m+4)(ln n+4))
///   T2: 2/√((ln Δ_U+1)(ln n+4))
///   T3: 1/√(2(ln ρ(d_Y)+1)(ln n+4))   (per-instance ρ, never above the
///        theorem's global K)
/// Throws degenerate_input_error on an edgeless graph.
Certificate certify_bipartite(const BipartiteGraph& bg, Variant variant,
                              const SpectralOptions& opts = {});

/// Certifies a plain graph through its bipartite double cover, pulling X and
/// Y back through the two copy bijections. With m = n = |V| the T1 factor
/// equals the single-graph form 1/(¼·ln|V| + 1).
Certificate certify(const Graph& g, Variant variant,
                    const SpectralOptions& opts = {});

/// Independent checker: recomputes edges, density, and every certificate
/// inequality from scratch; true iff all hold.
bool verify_certificate(const BipartiteGraph& bg, const Certificate& cert);
bool verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace bidensity
