#include "bidensity/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "bidensity/errors.hpp"

namespace bidensity {

namespace {

using Clock = std::chrono::steady_clock;

// One (Y, prefix) candidate. The comparison is a strict total order, so the
// global optimum is independent of how the enumeration is partitioned across
// workers.
struct Candidate {
  std::int64_t e = -1;      // e(X,Y); -1 = empty
  int xlen = 0;             // |X|
  int ylen = 0;             // |Y| (enumerated side)
  std::uint64_t ymask = 0;  // enumerated-side bitmask

  bool better_than(const Candidate& o) const {
    if (o.e < 0) return true;
    if (e < 0) return false;
    // e/√(|X||Y|) compared as e²·|X'||Y'| vs e'²·|X||Y| in exact integers.
    const __int128 lhs =
        static_cast<__int128>(e) * e * o.xlen * o.ylen;
    const __int128 rhs =
        static_cast<__int128>(o.e) * o.e * xlen * ylen;
    if (lhs != rhs) return lhs > rhs;
    if (ylen != o.ylen) return ylen < o.ylen;
    if (ymask != o.ymask) return ymask < o.ymask;
    return xlen < o.xlen;
  }
};

// Scans the best prefix for one enumerated mask. `masks[v]` holds v's
// neighbors within the enumerated side; `scratch` has prefix-side size.
Candidate best_for_mask(std::uint64_t ymask, std::span<const std::uint64_t> masks,
                        std::span<int> scratch) {
  const int p = static_cast<int>(masks.size());
  int nonzero = 0;
  for (int v = 0; v < p; ++v) {
    const int d = std::popcount(masks[static_cast<std::size_t>(v)] & ymask);
    scratch[static_cast<std::size_t>(v)] = d;
    if (d > 0) ++nonzero;
  }
  // Sort descending; zero-degree vertices can only dilute a prefix.
  std::sort(scratch.begin(), scratch.end(), std::greater<int>());
  const int limit = std::max(1, nonzero);
  Candidate best;
  std::int64_t sum = 0;
  const int ylen = std::popcount(ymask);
  for (int k = 1; k <= limit; ++k) {
    sum += scratch[static_cast<std::size_t>(k - 1)];
    Candidate c{sum, k, ylen, ymask};
    if (c.better_than(best)) best = c;
  }
  return best;
}

struct Enumeration {
  Candidate best;
  std::uint64_t scanned = 0;
};

Enumeration enumerate_masks(int enum_count, std::span<const std::uint64_t> masks,
                            const ExactOptions& opts) {
  const std::uint64_t total = (std::uint64_t{1} << enum_count) - 1;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(opts.time_limit_seconds));
  std::atomic<bool> expired{false};
  Candidate best;

  if (opts.parallel) {
#pragma omp parallel
    {
      Candidate local;
      std::vector<int> scratch(masks.size());
#pragma omp for schedule(static)
      for (std::int64_t signed_mask = 1;
           signed_mask <= static_cast<std::int64_t>(total); ++signed_mask) {
        if ((signed_mask & 0xffff) == 0 && Clock::now() > deadline)
          expired.store(true, std::memory_order_relaxed);
        if (expired.load(std::memory_order_relaxed)) continue;
        const Candidate c = best_for_mask(static_cast<std::uint64_t>(signed_mask),
                                          masks, scratch);
        if (c.better_than(local)) local = c;
      }
#pragma omp critical
      if (local.better_than(best)) best = local;
    }
  } else {
    std::vector<int> scratch(masks.size());
    for (std::uint64_t ymask = 1; ymask <= total; ++ymask) {
      if ((ymask & 0xffff) == 0 && Clock::now() > deadline) expired.store(true);
      if (expired.load(std::memory_order_relaxed)) break;
      const Candidate c = best_for_mask(ymask, masks, scratch);
      if (c.better_than(best)) best = c;
    }
  }
  if (expired.load())
    throw cap_error("exact search aborted by the wall-clock guard (" +
                    std::to_string(opts.time_limit_seconds) + " s)");
  return {best, total};
}

// Rebuilds the X witness for the winning (Y, k): vertices ordered by
// (d_Y descending, index ascending), first k.
VertexSet prefix_witness(std::uint64_t ymask, int k,
                         std::span<const std::uint64_t> masks) {
  const int p = static_cast<int>(masks.size());
  std::vector<int> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(masks[static_cast<std::size_t>(a)] & ymask) >
           std::popcount(masks[static_cast<std::size_t>(b)] & ymask);
  });
  VertexSet x(order.begin(), order.begin() + k);
  std::sort(x.begin(), x.end());
  return x;
}

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet s;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) s.push_back(i);
  return s;
}

ExactMResult finish(const Enumeration& enumeration,
                    std::span<const std::uint64_t> masks, bool swap_roles) {
  const Candidate& best = enumeration.best;
  ExactMResult result;
  result.subsets_scanned = enumeration.scanned;
  result.edges = best.e;
  VertexSet prefix_side = prefix_witness(best.ymask, best.xlen, masks);
  VertexSet enum_side = mask_to_set(best.ymask);
  result.value = static_cast<double>(best.e) /
                 std::sqrt(static_cast<double>(best.xlen) *
                           static_cast<double>(best.ylen));
  if (swap_roles) {
    result.x_witness = std::move(enum_side);
    result.y_witness = std::move(prefix_side);
  } else {
    result.x_witness = std::move(prefix_side);
    result.y_witness = std::move(enum_side);
  }
  return result;
}

}  // namespace

ExactMResult m_exact(const Graph& g, const ExactOptions& opts) {
  const int n = g.vertex_count();
  if (n < 1) throw precondition_error("m_exact requires at least one vertex");
  if (n > opts.cap)
    throw cap_error("m_exact refused: " + std::to_string(n) +
                    " vertices exceed the cap of " + std::to_string(opts.cap));
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  return finish(enumerate_masks(n, masks, opts), masks, /*swap_roles=*/false);
}

ExactMResult m_exact(const Graph& g, int cap) {
  ExactOptions opts;
  opts.cap = cap;
  return m_exact(g, opts);
}

ExactMResult detail::m_exact_serial(const Graph& g, const ExactOptions& opts) {
  ExactOptions serial = opts;
  serial.parallel = false;
  return m_exact(g, serial);
}

ExactMResult m_exact_bipartite(const BipartiteGraph& bg, const ExactOptions& opts) {
  const int m = bg.left_count();
  const int n = bg.right_count();
  if (m < 1 || n < 1) throw precondition_error("empty partite set");
  const bool enumerate_right = n <= m;
  const int enum_count = enumerate_right ? n : m;
  const int prefix_count = enumerate_right ? m : n;
  if (enum_count > opts.cap)
    throw cap_error("m_exact_bipartite refused: smaller side " +
                    std::to_string(enum_count) + " exceeds the cap of " +
                    std::to_string(opts.cap));
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(prefix_count), 0);
  if (enumerate_right) {
    for (int u = 0; u < m; ++u)
      for (int w : bg.row(u))
        masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << w;
  } else {
    for (int w = 0; w < n; ++w)
      for (int u : bg.column(w))
        masks[static_cast<std::size_t>(w)] |= std::uint64_t{1} << u;
  }
  // When the right side is enumerated it plays the role of Y and the scanned
  // prefixes live in U; otherwise the roles swap.
  return finish(enumerate_masks(enum_count, masks, opts), masks,
                /*swap_roles=*/!enumerate_right);
}

ExactMResult m_exact_bipartite(const BipartiteGraph& bg, int cap) {
  ExactOptions opts;
  opts.cap = cap;
  return m_exact_bipartite(bg, opts);
}

BoundsReport bounds_check(const Graph& g, const ExactOptions& opts,
                          const SpectralOptions& spectral) {
  BoundsReport report;
  const DegreeStats stats = degree_stats(g);
  report.avg = stats.avg;
  report.delta = stats.max;
  report.m = m_exact(g, opts);
  report.m_value = report.m.value;
  report.lambda = lambda_max(g, spectral).lambda_max;

  const std::int64_t e = report.m.edges;
  const std::int64_t xy = static_cast<std::int64_t>(report.m.x_witness.size()) *
                          static_cast<std::int64_t>(report.m.y_witness.size());
  const std::int64_t n = g.vertex_count();
  const std::int64_t two_m = 2 * g.edge_count();
  // ď ≤ M ⟺ (2m)²·|X||Y| ≤ e²·n² and M ≤ Δ ⟺ e² ≤ Δ²·|X||Y|, all integers.
  report.ok_avg_le_m = two_m * two_m * xy <= e * e * n * n;
  report.ok_m_le_delta =
      e * e <= static_cast<std::int64_t>(report.delta) * report.delta * xy;
  report.ok_m_le_lambda =
      report.m_value <= report.lambda + 1e-9 * std::max(1.0, report.lambda);
  return report;
}

}  // namespace bidensity
