#include "bidensity/gap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bidensity/errors.hpp"

namespace bidensity {

namespace {

constexpr double kGolden = 1.6180339887498948482;  // (1+√5)/2

double log_binomial(int t, int j) {
  return std::lgamma(static_cast<double>(t) + 1.0) -
         std::lgamma(static_cast<double>(j) + 1.0) -
         std::lgamma(static_cast<double>(t - j) + 1.0);
}

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// (2s)^t with overflow/budget checks; throws budget_error on violation.
std::int64_t checked_power(std::int64_t base, int t, std::int64_t limit,
                           const char* what) {
  __int128 value = 1;
  for (int i = 0; i < t; ++i) {
    value *= base;
    if (value > limit)
      throw budget_error(std::string(what) + " exceeds the configured budget");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

double entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw precondition_error("entropy argument must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

BinestCheck check_binest(int t, int q) {
  if (q < 1 || 2 * q > t)
    throw precondition_error("check_binest requires 1 <= q <= t/2");
  BinestCheck c;
  const double envelope = static_cast<double>(t) *
                              entropy(static_cast<double>(q) / t) -
                          0.5 * std::log(static_cast<double>(q));
  c.lhs_log = std::log(1.0 / 3.0) + envelope;
  c.rhs_log = std::log(2.0 / 3.0) + envelope;
  c.binom_log = log_binomial(t, q);
  c.ok = c.lhs_log < c.binom_log && c.binom_log < c.rhs_log;
  return c;
}

DeviationCheck large_deviation(double lambda, int q, int t) {
  if (!(lambda > 0.0)) throw precondition_error("lambda must be positive");
  if (q < 1 || t < 1) throw precondition_error("q and t must be positive");
  if (static_cast<double>(q) * (lambda + 1.0) >
      static_cast<double>(t) * (1.0 + 1e-12))
    throw precondition_error("large_deviation requires q <= t/(lambda+1)");
  DeviationCheck c;
  const double log_lambda = std::log(lambda);
  double lhs = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= q; ++j)
    lhs = log_add_exp(lhs, log_binomial(t, j) + (t - j) * log_lambda);
  c.lhs_log = lhs;
  c.rhs_log = (t - q) * log_lambda +
              static_cast<double>(t) * entropy(static_cast<double>(q) / t);
  c.ok = c.lhs_log <= c.rhs_log + 1e-9;
  c.ratio = std::exp(c.rhs_log - c.lhs_log);
  c.within_factor_two = c.ratio <= 2.0;
  return c;
}

Graph base_matrix(int s) {
  if (s < 1) throw precondition_error("s must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    edges.emplace_back(i, s + i);
  }
  return Graph::from_edges(2 * s, edges);
}

double base_lambda(int s) {
  if (s < 1) throw precondition_error("s must be at least 1");
  const double a = static_cast<double>(s - 1);
  return (a + std::sqrt(a * a + 4.0)) / 2.0;
}

bool minimal_poly_check(int s) {
  const Graph g = base_matrix(s);
  const int n = 2 * s;
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a[idx(u, v)] = 1;

  auto matmul = [&](const std::vector<std::int64_t>& x,
                    const std::vector<std::int64_t>& y) {
    std::vector<std::int64_t> z(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const std::int64_t f = x[idx(i, k)];
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) z[idx(i, j)] += f * y[idx(k, j)];
      }
    return z;
  };

  const std::vector<std::int64_t> a2 = matmul(a, a);
  std::vector<std::int64_t> p1(a2), p2(a2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      p1[idx(i, j)] -= static_cast<std::int64_t>(s - 1) * a[idx(i, j)];
      p2[idx(i, j)] += a[idx(i, j)];
      if (i == j) {
        p1[idx(i, j)] -= 1;
        p2[idx(i, j)] -= 1;
      }
    }
  for (std::int64_t v : matmul(p1, p2))
    if (v != 0) return false;

  // Perron eigenvector (λ,…,λ,1,…,1) with the 2s coordinates split evenly.
  const double lambda = base_lambda(s);
  std::vector<double> e(static_cast<std::size_t>(n), 1.0);
  for (int i = 0; i < s; ++i) e[static_cast<std::size_t>(i)] = lambda;
  for (int u = 0; u < n; ++u) {
    double s_row = 0.0;
    for (int v : g.neighbors(u)) s_row += e[static_cast<std::size_t>(v)];
    if (std::abs(s_row - lambda * e[static_cast<std::size_t>(u)]) >
        1e-10 * std::max(1.0, lambda))
      return false;
  }
  return true;
}

Graph tensor_power(const GapGraphSpec& spec, std::int64_t budget_ordered_pairs) {
  if (spec.s < 1 || spec.t < 1)
    throw precondition_error("tensor_power requires s >= 1 and t >= 1");
  const std::int64_t s = spec.s;
  const int t = spec.t;
  const std::int64_t n =
      checked_power(2 * s, t, std::numeric_limits<int>::max(), "vertex count");
  const std::int64_t ordered_pairs =
      checked_power(s * s + s, t, budget_ordered_pairs, "ordered pair count");

  const Graph base = base_matrix(spec.s);
  const int b = 2 * spec.s;

  // Per-vertex degree is the product of the base degrees of its digits.
  std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t u = 0; u < n; ++u) {
    std::int64_t deg = 1;
    std::int64_t rest = u;
    for (int i = 0; i < t; ++i) {
      deg *= base.degree(static_cast<int>(rest % b));
      rest /= b;
    }
    offsets[static_cast<std::size_t>(u) + 1] = deg;
  }
  for (std::int64_t u = 0; u < n; ++u)
    offsets[static_cast<std::size_t>(u) + 1] += offsets[static_cast<std::size_t>(u)];

  std::vector<int> adjacency(static_cast<std::size_t>(ordered_pairs));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t u = 0; u < n; ++u) {
    // Digits of u, most significant first, and their base neighbor lists.
    std::vector<std::span<const int>> nb(static_cast<std::size_t>(t));
    std::vector<std::size_t> pos(static_cast<std::size_t>(t), 0);
    std::int64_t rest = u;
    for (int i = t - 1; i >= 0; --i) {
      nb[static_cast<std::size_t>(i)] = base.neighbors(static_cast<int>(rest % b));
      rest /= b;
    }
    std::int64_t write = offsets[static_cast<std::size_t>(u)];
    // Odometer over the digit neighbor lists; most significant digit
    // outermost, so neighbors come out in ascending order.
    for (;;) {
      std::int64_t v = 0;
      for (int i = 0; i < t; ++i)
        v = v * b + nb[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]];
      adjacency[static_cast<std::size_t>(write++)] = static_cast<int>(v);
      int i = t - 1;
      while (i >= 0 && ++pos[static_cast<std::size_t>(i)] ==
                           nb[static_cast<std::size_t>(i)].size()) {
        pos[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return Graph::from_csr(static_cast<int>(n), std::move(offsets),
                         std::move(adjacency));
}

std::vector<double> materialize_level_vector(const LevelVector& lv) {
  const std::int64_t n = checked_power(2 * lv.s, lv.t,
                                       std::int64_t{1} << 28, "level vector size");
  std::vector<double> z;
  z.reserve(static_cast<std::size_t>(n));
  // C(t,j)·s^t coordinates equal λ^j; emitted from the top level down with an
  // exact integer recurrence C(t,j−1) = C(t,j)·j/(t−j+1).
  const std::int64_t st =
      checked_power(lv.s, lv.t, std::numeric_limits<std::int64_t>::max(), "s^t");
  std::int64_t binom = 1;
  for (int j = lv.t; j >= 0; --j) {
    const double value = std::pow(lv.lambda, j);
    const std::int64_t count = binom * st;
    for (std::int64_t c = 0; c < count; ++c) z.push_back(value);
    if (j > 0) binom = binom * j / (lv.t - j + 1);
  }
  std::sort(z.begin(), z.end(), std::greater<double>());
  return z;
}

LevelMaxRatio level_max_ratio(const LevelVector& lv) {
  if (!(lv.lambda > 0.0)) throw precondition_error("lambda must be positive");
  if (lv.t < 1 || lv.s < 1) throw precondition_error("s and t must be positive");
  const int t = lv.t;
  const double log_lambda = std::log(lv.lambda);
  const double log_norm = 0.5 * t * std::log(lv.lambda * lv.lambda + 1.0);
  double log_s = -std::numeric_limits<double>::infinity();   // ln S_q
  double log_sig = -std::numeric_limits<double>::infinity(); // ln σ_q
  LevelMaxRatio best;
  best.ratio = -1.0;
  for (int q = 0; q <= t; ++q) {
    const double lb = log_binomial(t, q);
    log_s = log_add_exp(log_s, lb + (t - q) * log_lambda);
    log_sig = log_add_exp(log_sig, lb);
    const double ratio = std::exp(log_s - log_norm - 0.5 * log_sig);
    if (ratio > best.ratio) {
      best.ratio = ratio;
      best.q_witness = q;
    }
  }
  best.bound_ok =
      best.ratio <= 4.0 * lv.lambda / std::pow(static_cast<double>(t), 0.25) + 1e-12;
  return best;
}

MUpperBound m_upper_bound(const GapGraphSpec& spec) {
  MUpperBound out;
  const double lambda = base_lambda(spec.s);
  const LevelMaxRatio lmr = level_max_ratio({lambda, spec.s, spec.t});
  const double r = lmr.ratio;
  const double c = kGolden / lambda;  // second-eigenvalue scale λ^{t−1}φ / λ^t
  // ‖Aδ‖²/(λ^t‖δ‖)² ≤ x² + c²(1−x²) for x = ⟨δ,ê₁⟩/‖δ‖ ∈ [0, r]; linear in
  // x², so the max sits at an endpoint.
  const double bound_sq = std::max(r * r + c * c * (1.0 - r * r), c * c);
  out.ratio_bound = std::sqrt(bound_sq);
  out.log_lambda_t = spec.t * std::log(lambda);
  out.lambda_t = std::exp(out.log_lambda_t);
  out.log_m_upper = out.log_lambda_t + std::log(out.ratio_bound);
  out.m_upper = out.lambda_t * out.ratio_bound;
  out.lambda_ge_4 = lambda >= 4.0;
  return out;
}

GapReport gap_report(const GapGraphSpec& spec, const GapReportOptions& opts) {
  if (spec.s < 1 || spec.t < 1)
    throw precondition_error("gap_report requires s >= 1 and t >= 1");
  GapReport report;
  report.s = spec.s;
  report.t = spec.t;
  report.log_n = spec.t * std::log(2.0 * spec.s);
  report.n = std::exp(report.log_n);
  report.lambda_base = base_lambda(spec.s);
  report.upper = m_upper_bound(spec);
  report.level = level_max_ratio({report.lambda_base, spec.s, spec.t});
  report.lambda_t = report.upper.lambda_t;
  report.log_lambda_t = report.upper.log_lambda_t;
  report.target_scaling =
      report.log_n > 1.0
          ? std::pow(std::log(report.log_n) / report.log_n, 0.125)
          : std::numeric_limits<double>::quiet_NaN();
  report.recipe_t = std::pow(static_cast<double>(spec.s), 8.0);
  report.recipe_log_n = report.recipe_t * std::log(2.0 * spec.s);

  if (!opts.materialize) return report;

  const Graph g = tensor_power(spec, opts.budget_ordered_pairs);
  report.materialized = true;
  const SpectralResult spectral = lambda_max(g, opts.spectral);
  report.measured_lambda = spectral.lambda_max;
  report.lambda_agrees = std::abs(report.measured_lambda - report.lambda_t) <=
                         1e-8 * report.lambda_t;
  report.certificate = certify(g, opts.variant, opts.spectral);
  if (g.vertex_count() <= opts.exact_cap) {
    ExactOptions exact_opts;
    exact_opts.cap = opts.exact_cap;
    exact_opts.time_limit_seconds = opts.exact_time_limit_seconds;
    report.exact_m = m_exact(g, exact_opts);
  }

  bool ok = report.lambda_agrees;
  const double slack = 1e-9 * std::max(1.0, report.lambda_t);
  const double density = report.certificate->density;
  if (report.exact_m) {
    ok = ok && density <= report.exact_m->value + slack;
    ok = ok && report.exact_m->value <= report.upper.m_upper + slack;
  }
  ok = ok && density <= report.upper.m_upper + slack;
  if (spec.s >= 2) ok = ok && report.upper.m_upper <= report.lambda_t + slack;
  report.ordering_ok = ok;
  return report;
}

}  // namespace bidensity
