#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bidensity/certify.hpp"
#include "bidensity/exact.hpp"
#include "bidensity/graph.hpp"
#include "bidensity/spectral.hpp"

namespace bidensity {

/// Parameters of the Kronecker family: the base graph has 2s vertices and the
/// t-th power has n = (2s)^t.
struct GapGraphSpec {
  int s = 1;
  int t = 1;
};

/// Entropy H(x) = −x ln x − (1−x) ln(1−x), extended by H(0) = H(1) = 0.
/// Throws outside [0, 1]. Natural logarithm, as everywhere in this project.
double entropy(double x);

struct BinestCheck {
  double lhs_log = 0.0;    // ln of (1/3)·q^{-1/2}·e^{tH(q/t)}
  double binom_log = 0.0;  // ln C(t, q)
  double rhs_log = 0.0;    // ln of (2/3)·q^{-1/2}·e^{tH(q/t)}
  bool ok = false;         // strict sandwich lhs < binom < rhs
};

/// Verifies the Stirling-type binomial sandwich for 1 ≤ q ≤ t/2; all three
/// quantities are computed in the log domain.
BinestCheck check_binest(int t, int q);

struct DeviationCheck {
  double lhs_log = 0.0;  // ln Σ_{j≤q} C(t,j) λ^{t−j}
  double rhs_log = 0.0;  // ln λ^{t−q} e^{tH(q/t)}
  double ratio = 0.0;    // rhs/lhs (≥ 1 when the bound holds)
  bool ok = false;       // lhs ≤ rhs (hard)
  bool within_factor_two = false;  // rhs ≤ 2·lhs (observed, report-only)
};

/// The large-deviation bound Σ_{j≤q} C(t,j)λ^{t−j} ≤ λ^{t−q}·e^{tH(q/t)}.
/// Preconditions: λ > 0, q ≥ 1, t ≥ 1, q ≤ t/(λ+1).
DeviationCheck large_deviation(double lambda, int q, int t);

/// The 2s-vertex base graph with adjacency ((J−I, I), (I, 0)): a clique on
/// vertices 0..s−1 plus the perfect matching i ↔ s+i.
Graph base_matrix(int s);

/// Its largest eigenvalue (s−1+√((s−1)²+4))/2, the top root of x²−(s−1)x−1.
double base_lambda(int s);

/// Checks (A²−(s−1)A−I)(A²+A−I) = 0 in exact integer arithmetic and that
/// (λ,…,λ,1,…,1) is a λ-eigenvector to 1e-10.
bool minimal_poly_check(int s);

/// The Kronecker t-th power of the base graph on (2s)^t vertices. Vertex
/// indices are mixed radix base 2s with digit 0 most significant; u ~ v iff
/// every digit pair is adjacent in the base. Throws budget_error when the
/// ordered-pair count (s²+s)^t or the vertex count exceeds the budget.
Graph tensor_power(const GapGraphSpec& spec,
                   std::int64_t budget_ordered_pairs = 200000000);

/// Implicit Perron direction of the tensor power: C(t,j)·s^t coordinates
/// equal to λ^j for j ∈ [0, t]; ‖z‖² = s^t(λ²+1)^t. Never materialized in
/// the sweeps.
struct LevelVector {
  double lambda = 1.0;
  int s = 1;
  int t = 1;
};

/// Explicit copy of the level vector in non-increasing order (tests and the
/// brute-force cross-check only; size is (2s)^t).
std::vector<double> materialize_level_vector(const LevelVector& lv);

struct LevelMaxRatio {
  double ratio = 0.0;  // exact max of ⟨z,δ⟩/(‖z‖‖δ‖) over nonzero δ ∈ {0,1}ⁿ
  int q_witness = 0;   // number of full levels (from the top) in the optimum
  bool bound_ok = false;  // ratio ≤ 4λ/t^{1/4}; meaningful under λ ≥ 4
};

/// Exact unit-cube maximum for the level vector. Within a level all
/// coordinates are equal and the partial-level term is monotone-or-valley in
/// the fill count, so the optimum is attained at a full-level prefix; the
/// scan over q ∈ [0, t] runs in the log domain:
///   ratio_q = S_q / ((λ²+1)^{t/2}·√σ_q),
///   S_q = Σ_{j≤q} C(t,j)λ^{t−j},  σ_q = Σ_{j≤q} C(t,j).
LevelMaxRatio level_max_ratio(const LevelVector& lv);

struct MUpperBound {
  double m_upper = 0.0;     // rigorous upper bound on M(G) for the family
  double lambda_t = 0.0;    // λ^t = λmax of the tensor power
  double ratio_bound = 0.0; // m_upper / λ^t
  double log_m_upper = 0.0;
  double log_lambda_t = 0.0;
  bool lambda_ge_4 = true;  // hypothesis flag; smaller s reported with caveat
};

/// Spectral-split bound: for every 0/1 vector δ,
///   ‖Aδ‖² ≤ λ^{2t}⟨δ,ê₁⟩² + (λ^{t−1}(1+√5)/2)²(‖δ‖² − ⟨δ,ê₁⟩²),
/// and ⟨δ,ê₁⟩ ≤ r‖δ‖ with r = level_max_ratio, so
///   M(G) ≤ max_δ ‖Aδ‖/‖δ‖ ≤ λ^t·√(max(r² + c²(1−r²), c²)),  c = (1+√5)/(2λ).
MUpperBound m_upper_bound(const GapGraphSpec& spec);

struct GapReportOptions {
  bool materialize = false;
  int exact_cap = 26;
  std::int64_t budget_ordered_pairs = 200000000;
  SpectralOptions spectral{};
  double exact_time_limit_seconds = 600.0;
  Variant variant = Variant::T1;
};

struct GapReport {
  int s = 1;
  int t = 1;
  double log_n = 0.0;  // t·ln(2s)
  double n = 0.0;      // (2s)^t; +inf past double range
  double lambda_base = 0.0;
  double lambda_t = 0.0;
  double log_lambda_t = 0.0;
  LevelMaxRatio level;
  MUpperBound upper;
  /// (ln ln n / ln n)^{1/8}, the asymptotic separation scale; NaN when n ≤ e.
  double target_scaling = 0.0;
  /// The asymptotic recipe t = s⁸ at this s, reported but never executed.
  double recipe_t = 0.0;
  double recipe_log_n = 0.0;
  bool materialized = false;
  // Fields below are set only when materialized.
  double measured_lambda = 0.0;
  bool lambda_agrees = false;  // |measured − λ^t| ≤ 1e-8·λ^t
  std::optional<Certificate> certificate;
  std::optional<ExactMResult> exact_m;
  bool ordering_ok = true;  // density ≤ M ≤ m_upper (≤ λ^t for s ≥ 2)
};

/// Aggregates the §-level quantities for one (s, t): closed-form λ^t, the
/// rigorous M upper bound, and — in materialized mode — the measured λmax,
/// a certifier witness, and the exact M when the graph is small enough.
GapReport gap_report(const GapGraphSpec& spec, const GapReportOptions& opts = {});

}  // namespace bidensity
