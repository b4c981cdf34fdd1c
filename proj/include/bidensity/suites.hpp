#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bidensity {

/// Outcome of one randomized/grid verification suite.
struct SuiteResult {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  /// Deviation suite only: grid points where rhs/lhs exceeded 2 (observed
  /// sharpness; logged, never a failure).
  std::int64_t soft_flagged = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
  /// Achieved ratios in evaluation order; a reproducibility fingerprint for
  /// the randomized suites.
  std::vector<double> trace;
};

/// Lemma 1–3 guarantees on seeded random vectors, exactness of the prefix
/// search against the 2ⁿ brute force (n ≤ 12), and the 2/√(ln n) sharpness
/// family z = (1, 1/√2, …, 1/√n) for n ∈ [2, 64].
SuiteResult run_rounding_suite(std::uint64_t seed, int vectors_per_n = 1000,
                               int n_max = 12);

/// Entropy function identities on a grid (bounds, symmetry, known values,
/// midpoint concavity).
SuiteResult run_entropy_suite();

/// Strict binomial sandwich for all t ≤ t_max, 1 ≤ q ≤ t/2, with the
/// log-domain binomial cross-checked against exact integers.
SuiteResult run_binest_suite(int t_max = 60);

/// Large-deviation bound on the full admissible grid λ ∈ {1,2,4,8},
/// t ≤ t_max (hard), with rhs/lhs ≤ 2 logged as a soft observation.
SuiteResult run_deviation_suite(int t_max = 60);

/// Tensor-optimization bound level_max_ratio ≤ 4λ/t^{1/4} for
/// λ ∈ {4, 2+√5, 8}, t ≤ t_max, and agreement of the endpoint reduction with
/// the materialized brute force for t ≤ brute_t_max.
SuiteResult run_tensor_suite(int t_max = 200, int brute_t_max = 20);

}  // namespace bidensity
