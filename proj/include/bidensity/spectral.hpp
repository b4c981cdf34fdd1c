#pragma once

#include <span>
#include <vector>

#include "bidensity/graph.hpp"

namespace bidensity {

struct SpectralOptions {
  double tol = 1e-10;  // relative convergence tolerance
  int max_iter = -1;   // -1 = 100*n + 1000
};

struct SpectralResult {
  double lambda_max = 0.0;
  /// Euclidean-normalized non-negative eigenvector, indexed by vertices.
  std::vector<double> perron;
  int iterations = 0;
  double residual = 0.0;  // ‖A·perron − λ·perron‖
  bool converged = true;
};

/// Dominant adjacency eigenvalue by power iteration on the SQUARED operator
/// (z ← A(Az)), which is immune to the ±λ oscillation of bipartite spectra.
/// λmax is the square root of the Rayleigh quotient of A²; the Perron vector
/// is recovered from the limit (the λz + Az combination kills any −λ
/// component). Satisfies rms(d) − tol ≤ λmax ≤ Δ(G). On non-convergence the
/// best iterate is returned with converged = false.
SpectralResult lambda_max(const Graph& g, const SpectralOptions& opts = {});

struct BipartiteSpectralResult {
  /// Result for the symmetric block operator ((0,B),(Bᵗ,0)); perron is the
  /// concatenated (left, right)/√2 vector.
  SpectralResult block;
  std::vector<double> left;   // non-negative top-left singular vector of B
  std::vector<double> right;  // Bᵗ·left, normalized
};

/// Top singular value of the biadjacency operator via iteration of BBᵗ.
/// block.lambda_max = ‖B‖; the left vector satisfies ‖Bᵗx‖ = ‖B‖‖x‖ at
/// convergence.
BipartiteSpectralResult lambda_max_bipartite(const BipartiteGraph& bg,
                                             const SpectralOptions& opts = {});

struct EigenBoundChain {
  double rms = 0.0;     // ‖d‖₂ (root mean square)
  double lambda = 0.0;  // λmax
  double delta = 0.0;   // Δ(G)
  bool ok = true;       // rms ≤ λ and λ ≤ Δ, up to slack
};

/// The degree-based eigenvalue sandwich rms(d) ≤ λmax ≤ Δ.
EigenBoundChain eigen_bound_chain(const Graph& g, const SpectralOptions& opts = {});

struct BipartiteBoundChain {
  double lower = 0.0;             // max{√(|U|/|W|)·rms(d_U), √(|W|/|U|)·rms(d_W)}
  double rms_geomean = 0.0;       // √(rms(d_U)·rms(d_W))
  double lambda = 0.0;            // λmax = ‖B‖
  double delta_geomean = 0.0;     // √(Δ_U·Δ_W)
  double m_lower = 0.0;           // √(ď_U·ď_W), lower bound on M
  double m_upper = 0.0;           // √(Δ_U·Δ_W), upper bound on M
  bool ok_lower = true;           // lower ≤ λ
  bool ok_rms = true;             // rms_geomean ≤ λ
  bool ok_upper = true;           // λ ≤ delta_geomean
  bool ok_m_lower = true;         // m_lower ≤ λ  (since m_lower ≤ M ≤ λ)
};

/// The bipartite eigenvalue sandwich and the √(ď_Uď_W) ≤ M ≤ √(Δ_UΔ_W) bounds.
BipartiteBoundChain bipartite_bound_chain(const BipartiteGraph& bg,
                                          const SpectralOptions& opts = {});

/// out = A·x over the adjacency operator. Row-parallel with per-row serial
/// sums, so the result is bit-identical at any thread count.
void adjacency_matvec(const Graph& g, std::span<const double> x,
                      std::span<double> out);
/// Serial reference for adjacency_matvec (identical output by construction).
void adjacency_matvec_serial(const Graph& g, std::span<const double> x,
                             std::span<double> out);

/// out = B·y (y indexed by the right part, out by the left part).
void biadjacency_matvec(const BipartiteGraph& bg, std::span<const double> y,
                        std::span<double> out);
/// out = Bᵗ·x (x indexed by the left part, out by the right part).
void biadjacency_tmatvec(const BipartiteGraph& bg, std::span<const double> x,
                         std::span<double> out);

}  // namespace bidensity
