#include "bidensity/suites.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "bidensity/gap.hpp"
#include "bidensity/random.hpp"
#include "bidensity/rounding.hpp"

namespace bidensity {

namespace {

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (!ok) {
    ++r.failed;
    if (r.failures.size() < 16) r.failures.push_back(what);
  }
}

// Exhaustive maximum of ⟨z,δ⟩/(‖z‖‖δ‖) over all nonzero δ ∈ {0,1}ⁿ via
// subset-sum dynamic programming.
double brute_force_cube_max(std::span<const double> z, std::vector<double>& sums) {
  const int n = static_cast<int>(z.size());
  const std::size_t total = std::size_t{1} << n;
  sums.assign(total, 0.0);
  double norm = 0.0;
  for (double v : z) norm += v * v;
  norm = std::sqrt(norm);
  double best = -1.0;
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + z[static_cast<std::size_t>(low)];
    const double ratio =
        sums[mask] /
        (norm * std::sqrt(static_cast<double>(std::popcount(mask))));
    best = std::max(best, ratio);
  }
  return best;
}

std::vector<double> random_vector(Rng& rng, int n, int kind) {
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    double v = 0.0;
    const double u = rng.uniform01();
    switch (kind % 4) {
      case 0: v = u; break;
      case 1: v = (u < 0.3) ? 0.0 : u; break;           // sparse
      case 2: v = -std::log(1.0 - u + 1e-300); break;   // exponential
      case 3: v = std::pow(1.0 - u + 1e-12, -1.5); break;  // heavy-tailed
    }
    z[static_cast<std::size_t>(i)] = v;
    any = any || v > 0.0;
  }
  if (!any) z[rng.below(static_cast<std::uint64_t>(n))] = 1.0;
  return z;
}

}  // namespace

SuiteResult run_rounding_suite(std::uint64_t seed, int vectors_per_n, int n_max) {
  SuiteResult result;
  result.name = "rounding";
  Rng rng(seed);
  std::vector<double> sums;
  for (int n = 1; n <= n_max; ++n) {
    const double lemma1 = 2.0 / std::sqrt(std::log(static_cast<double>(n)) + 4.0);
    for (int rep = 0; rep < vectors_per_n; ++rep) {
      const std::vector<double> z = random_vector(rng, n, rep);

      const RoundingOutcome prefix = round_prefix(z);
      const double brute = brute_force_cube_max(z, sums);
      record(result,
             std::abs(prefix.achieved_ratio - brute) <= 1e-12 * std::max(1.0, brute),
             "prefix search deviates from brute force at n=" + std::to_string(n));
      record(result, prefix.achieved_ratio >= lemma1 - 1e-12,
             "prefix guarantee violated at n=" + std::to_string(n));
      result.trace.push_back(prefix.achieved_ratio);

      const RoundingOutcome smooth = round_smooth_construction(z);
      record(result, smooth.achieved_ratio >= smooth.guarantee - 1e-12,
             "smooth-construction guarantee violated at n=" + std::to_string(n));
      result.trace.push_back(smooth.achieved_ratio);

      const std::int64_t cap = 1 + static_cast<std::int64_t>(rep % 50);
      std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
      bool any = false;
      for (auto& v : w) {
        v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap + 1)));
        any = any || v > 0;
      }
      if (!any) w[rng.below(static_cast<std::uint64_t>(n))] = cap;
      const RoundingOutcome thr = round_threshold(w, cap);
      record(result, thr.achieved_ratio >= thr.guarantee - 1e-12,
             "threshold guarantee violated at n=" + std::to_string(n));
      result.trace.push_back(thr.achieved_ratio);
    }
  }
  // Sharpness family: the best 0/1 ratio stays below 2/√(ln n) for n ≥ 2.
  for (int n = 2; n <= 64; ++n) {
    std::vector<double> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      z[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(static_cast<double>(i + 1));
    const RoundingOutcome prefix = round_prefix(z);
    record(result,
           prefix.achieved_ratio < 2.0 / std::sqrt(std::log(static_cast<double>(n))),
           "sharpness family bound violated at n=" + std::to_string(n));
    result.trace.push_back(prefix.achieved_ratio);
  }
  return result;
}

SuiteResult run_entropy_suite() {
  SuiteResult result;
  result.name = "entropy";
  record(result, entropy(0.0) == 0.0, "H(0) != 0");
  record(result, entropy(1.0) == 0.0, "H(1) != 0");
  record(result, std::abs(entropy(0.5) - std::numbers::ln2) <= 1e-15,
         "H(1/2) != ln 2");
  for (int k = 1; k < 1000; ++k) {
    const double x = k / 1000.0;
    const double h = entropy(x);
    record(result, h > 0.0 && h <= std::numbers::ln2 + 1e-15,
           "entropy out of (0, ln 2] at x=" + std::to_string(x));
    record(result, std::abs(h - entropy(1.0 - x)) <= 1e-12,
           "entropy asymmetric at x=" + std::to_string(x));
  }
  for (int k = 1; k < 100; ++k) {
    const double x = k / 100.0, y = 1.0 - x / 2.0;
    record(result,
           entropy((x + y) / 2.0) >= (entropy(x) + entropy(y)) / 2.0 - 1e-12,
           "entropy midpoint concavity violated at x=" + std::to_string(x));
  }
  return result;
}

SuiteResult run_binest_suite(int t_max) {
  SuiteResult result;
  result.name = "binest";
  for (int t = 2; t <= t_max; ++t) {
    std::uint64_t binom = 1;  // C(t, q) built up multiplicatively, exact
    for (int q = 1; 2 * q <= t; ++q) {
      binom = binom * static_cast<std::uint64_t>(t - q + 1) /
              static_cast<std::uint64_t>(q);
      const BinestCheck c = check_binest(t, q);
      record(result, c.ok,
             "binest sandwich fails at t=" + std::to_string(t) +
                 " q=" + std::to_string(q));
      record(result,
             std::abs(c.binom_log - std::log(static_cast<double>(binom))) <=
                 1e-12 * std::max(1.0, c.binom_log),
             "log-domain binomial deviates from exact integer at t=" +
                 std::to_string(t) + " q=" + std::to_string(q));
    }
  }
  return result;
}

SuiteResult run_deviation_suite(int t_max) {
  SuiteResult result;
  result.name = "deviation";
  for (const double lambda : {1.0, 2.0, 4.0, 8.0}) {
    for (int t = 1; t <= t_max; ++t) {
      const int q_max = static_cast<int>(std::floor(t / (lambda + 1.0) + 1e-12));
      for (int q = 1; q <= q_max; ++q) {
        const DeviationCheck c = large_deviation(lambda, q, t);
        record(result, c.ok,
               "large-deviation bound fails at lambda=" + std::to_string(lambda) +
                   " t=" + std::to_string(t) + " q=" + std::to_string(q));
        if (!c.within_factor_two) ++result.soft_flagged;
        result.trace.push_back(c.ratio);
      }
    }
  }
  return result;
}

SuiteResult run_tensor_suite(int t_max, int brute_t_max) {
  SuiteResult result;
  result.name = "tensor";
  const double lambdas[] = {4.0, 2.0 + std::sqrt(5.0), 8.0};
  for (const double lambda : lambdas) {
    for (int t = 1; t <= t_max; ++t) {
      const LevelMaxRatio lmr = level_max_ratio({lambda, 1, t});
      record(result,
             lmr.ratio <= 4.0 * lambda / std::pow(static_cast<double>(t), 0.25),
             "tensor-optimization bound fails at lambda=" + std::to_string(lambda) +
                 " t=" + std::to_string(t));
      record(result, lmr.ratio <= 1.0 + 1e-12,
             "Cauchy-Schwarz violated at lambda=" + std::to_string(lambda) +
                 " t=" + std::to_string(t));
      if (t <= brute_t_max) {
        const std::vector<double> z = materialize_level_vector({lambda, 1, t});
        const RoundingOutcome prefix = round_prefix(z);
        record(result,
               std::abs(lmr.ratio - prefix.achieved_ratio) <=
                   1e-12 * std::max(1.0, prefix.achieved_ratio),
               "endpoint reduction deviates from materialized brute force at "
               "lambda=" + std::to_string(lambda) + " t=" + std::to_string(t));
      }
      result.trace.push_back(lmr.ratio);
    }
  }
  return result;
}

}  // namespace bidensity
