#include "bidensity/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bidensity/errors.hpp"
#include "bidensity/graph.hpp"

namespace bidensity {

namespace {

double euclidean_norm(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  return std::sqrt(s);
}

// Indices of z sorted by (value descending, index ascending).
std::vector<int> sorted_order(std::span<const double> z) {
  std::vector<int> order(z.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return z[static_cast<std::size_t>(a)] > z[static_cast<std::size_t>(b)];
  });
  return order;
}

// Evaluates the prefixes of `order` whose lengths appear in `candidates`
// (ascending) and returns the best one; ties go to the smallest length.
RoundingOutcome best_prefix(std::span<const double> z,
                            std::span<const int> order,
                            std::span<const int> candidates, double norm_z) {
  double best_ratio = -1.0;
  int best_k = 0;
  double sum = 0.0;
  std::size_t next = 0;
  for (int k = 1; k <= static_cast<int>(order.size()); ++k) {
    sum += z[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)])];
    if (next < candidates.size() && candidates[next] == k) {
      ++next;
      const double ratio = sum / (norm_z * std::sqrt(static_cast<double>(k)));
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best_k = k;
      }
    }
  }
  RoundingOutcome out;
  out.support.assign(order.begin(), order.begin() + best_k);
  std::sort(out.support.begin(), out.support.end());
  // Recompute the ratio from the canonical (ascending-index) support so the
  // stored value is reproducible from the outcome alone.
  double s = 0.0;
  for (int i : out.support) s += z[static_cast<std::size_t>(i)];
  out.achieved_ratio = s / (norm_z * std::sqrt(static_cast<double>(best_k)));
  return out;
}

void validate_nonnegative_nonzero(std::span<const double> z) {
  if (z.empty()) throw precondition_error("rounding requires a non-empty vector");
  bool any = false;
  for (double v : z) {
    if (v < 0.0) throw precondition_error("rounding requires non-negative entries");
    if (v > 0.0) any = true;
  }
  if (!any) throw precondition_error("rounding requires a nonzero vector");
}

}  // namespace

RoundingOutcome round_prefix(std::span<const double> z) {
  validate_nonnegative_nonzero(z);
  const int n = static_cast<int>(z.size());
  const std::vector<int> order = sorted_order(z);
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  RoundingOutcome out = best_prefix(z, order, all, euclidean_norm(z));
  out.guarantee = 2.0 / std::sqrt(std::log(static_cast<double>(n)) + 4.0);
  out.lemma = LemmaTag::prefix;
  return out;
}

RoundingOutcome round_threshold(std::span<const std::int64_t> z,
                                std::int64_t delta_cap) {
  if (z.empty()) throw precondition_error("rounding requires a non-empty vector");
  if (delta_cap < 1) throw precondition_error("delta_cap must be at least 1");
  bool any = false;
  for (std::int64_t v : z) {
    if (v < 0) throw precondition_error("threshold rounding requires entries >= 0");
    if (v > delta_cap)
      throw precondition_error("entry exceeds delta_cap");
    if (v > 0) any = true;
  }
  if (!any) throw precondition_error("rounding requires a nonzero vector");

  std::vector<double> zd(z.begin(), z.end());
  const std::vector<int> order = sorted_order(zd);
  // A level-i indicator {j : z_j >= i} is a prefix of the sorted order ending
  // at a value-group boundary; distinct levels present in z give exactly the
  // distinct candidates.
  std::vector<int> candidates;
  for (int k = 1; k <= static_cast<int>(order.size()); ++k) {
    const std::int64_t value = z[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)])];
    if (value == 0) break;
    const bool boundary =
        k == static_cast<int>(order.size()) ||
        z[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] != value;
    if (boundary) candidates.push_back(k);
  }
  RoundingOutcome out = best_prefix(zd, order, candidates, euclidean_norm(zd));
  out.guarantee = 1.0 / std::sqrt(std::log(static_cast<double>(delta_cap)) + 1.0);
  out.lemma = LemmaTag::threshold;
  return out;
}

RoundingOutcome round_smooth_construction(std::span<const double> z) {
  validate_nonnegative_nonzero(z);
  const RhoResult rho = rho_detailed(z);
  // For nonzero z the minimality of k forces d_k > 0.
  const double dk = rho.dk;
  std::vector<std::int64_t> scaled(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    scaled[i] = static_cast<std::int64_t>(std::floor(z[i] / dk));
  const std::int64_t cap = static_cast<std::int64_t>(std::floor(rho.value));
  RoundingOutcome inner = round_threshold(scaled, cap);

  RoundingOutcome out;
  out.support = inner.support;
  double s = 0.0;
  for (int i : out.support) s += z[static_cast<std::size_t>(i)];
  out.achieved_ratio =
      s / (euclidean_norm(z) * std::sqrt(static_cast<double>(out.support.size())));
  out.guarantee = 1.0 / std::sqrt(8.0 * (std::log(rho.value) + 1.0));
  out.lemma = LemmaTag::smooth;
  return out;
}

RoundingOutcome round_smooth(std::span<const double> z) {
  RoundingOutcome construction = round_smooth_construction(z);
  RoundingOutcome prefix = round_prefix(z);
  if (prefix.achieved_ratio >= construction.achieved_ratio) {
    prefix.guarantee = construction.guarantee;
    prefix.lemma = LemmaTag::smooth;
    return prefix;
  }
  return construction;
}

}  // namespace bidensity
