#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bidensity {

enum class LemmaTag { prefix, threshold, smooth };

/// A 0/1 rounding of a non-negative vector z: the indicator δ of `support`
/// achieves ⟨z,δ⟩/(‖z‖‖δ‖) = achieved_ratio ≥ guarantee.
struct RoundingOutcome {
  std::vector<int> support;  // indices of δ's ones, ascending
  double achieved_ratio = 0.0;
  double guarantee = 0.0;
  LemmaTag lemma = LemmaTag::prefix;
};

/// Best prefix rounding. Sorts z non-increasingly (stable) and evaluates all
/// n prefix indicators; since the top-k entries maximize the inner product at
/// every support size k, the best prefix is the exact global optimum of
/// ⟨z,δ⟩/(‖z‖‖δ‖) over nonzero δ ∈ {0,1}ⁿ. Guarantee: 2/√(ln n + 4).
/// Ties go to the smallest support. Throws on a zero or negative vector.
RoundingOutcome round_prefix(std::span<const double> z);

/// Threshold rounding for integer vectors z ∈ [0, Δ]ⁿ: for each level i the
/// candidate δᵢ indicates {j : zⱼ ≥ i}; the best level is returned (only
/// levels present in z are evaluated — the others duplicate a candidate).
/// Guarantee: 1/√(ln Δ + 1). Throws on zero vector, Δ < 1, or out-of-range
/// entries.
RoundingOutcome round_threshold(std::span<const std::int64_t> z,
                                std::int64_t delta_cap);

/// Smooth rounding: computes k and ρ(z), rescales to z′ = ⌊z/z_k⌋, applies
/// threshold rounding with cap ⌊ρ(z)⌋, and evaluates the result against the
/// original z. Returns the better of that construction and the prefix
/// optimum (both meet the guarantee). Guarantee: 1/√(8(ln ρ(z)+1)).
RoundingOutcome round_smooth(std::span<const double> z);

/// The pure Lemma-3 construction without the prefix fallback; exposed so the
/// construction itself can be validated against its guarantee.
RoundingOutcome round_smooth_construction(std::span<const double> z);

}  // namespace bidensity
