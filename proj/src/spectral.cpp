#include "bidensity/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "bidensity/errors.hpp"

namespace bidensity {

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void scale(std::span<double> v, double c) {
  for (double& x : v) x *= c;
}

int default_max_iter(int n) { return 100 * n + 1000; }

// One squared-operator power step driven by a generic matvec. Returns the
// Rayleigh quotient of the squared operator at the (unit) input z, leaving
// y = Op·z and w = Op·y.
template <class Matvec>
double squared_step(const Matvec& apply, std::span<const double> z,
                    std::span<double> y, std::span<double> w) {
  apply(z, y);
  apply(std::span<const double>(y.data(), y.size()), w);
  double r = 0.0;
  for (double v : y) r += v * v;  // ⟨z, Op²z⟩ = ‖Op z‖² for symmetric Op
  return r;
}

// Shared driver: power iteration on Op² from the all-ones direction. The
// all-ones start has positive mass on every component, so the iteration
// converges to the global top of the squared spectrum. Returns the final
// unit iterate in z and Op·z in y.
template <class Matvec>
void iterate_squared(const Matvec& apply, int n, const SpectralOptions& opts,
                     std::vector<double>& z, std::vector<double>& y,
                     double& rayleigh, int& iterations, bool& converged) {
  const int max_iter = opts.max_iter >= 0 ? opts.max_iter : default_max_iter(n);
  z.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  y.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  rayleigh = 0.0;
  iterations = 0;
  converged = false;
  double prev_rayleigh = -1.0;
  for (int it = 1; it <= max_iter; ++it) {
    iterations = it;
    const double r = squared_step(apply, z, y, w);
    // Rayleigh quotients of a PSD operator are non-decreasing along power
    // iteration.
    assert(r >= prev_rayleigh - 1e-12 * std::max(1.0, r));
    prev_rayleigh = r;
    rayleigh = r;
    double res2 = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double d = w[i] - r * z[i];
      res2 += d * d;
    }
    res2 = std::sqrt(res2);
    const double wn = norm2(w);
    if (wn > 0.0) {
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = w[i] / wn;
    }
    if (res2 <= opts.tol * std::max(r, 1.0)) {
      converged = true;
      break;
    }
  }
  apply(std::span<const double>(z.data(), z.size()),
        std::span<double>(y.data(), y.size()));
}

}  // namespace

void adjacency_matvec(const Graph& g, std::span<const double> x,
                      std::span<double> out) {
  const int n = g.vertex_count();
#pragma omp parallel for schedule(static)
  for (int u = 0; u < n; ++u) {
    double s = 0.0;
    for (int v : g.neighbors(u)) s += x[static_cast<std::size_t>(v)];
    out[static_cast<std::size_t>(u)] = s;
  }
}

void adjacency_matvec_serial(const Graph& g, std::span<const double> x,
                             std::span<double> out) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    double s = 0.0;
    for (int v : g.neighbors(u)) s += x[static_cast<std::size_t>(v)];
    out[static_cast<std::size_t>(u)] = s;
  }
}

void biadjacency_matvec(const BipartiteGraph& bg, std::span<const double> y,
                        std::span<double> out) {
  const int m = bg.left_count();
#pragma omp parallel for schedule(static)
  for (int u = 0; u < m; ++u) {
    double s = 0.0;
    for (int w : bg.row(u)) s += y[static_cast<std::size_t>(w)];
    out[static_cast<std::size_t>(u)] = s;
  }
}

void biadjacency_tmatvec(const BipartiteGraph& bg, std::span<const double> x,
                         std::span<double> out) {
  const int n = bg.right_count();
#pragma omp parallel for schedule(static)
  for (int w = 0; w < n; ++w) {
    double s = 0.0;
    for (int u : bg.column(w)) s += x[static_cast<std::size_t>(u)];
    out[static_cast<std::size_t>(w)] = s;
  }
}

SpectralResult lambda_max(const Graph& g, const SpectralOptions& opts) {
  if (opts.tol <= 0.0) throw precondition_error("tolerance must be positive");
  SpectralResult result;
  const int n = g.vertex_count();
  if (n == 0) return result;
  if (g.edge_count() == 0) {
    // Degenerate input: λmax = 0, uniform Perron vector, converged at once.
    result.perron.assign(static_cast<std::size_t>(n),
                         1.0 / std::sqrt(static_cast<double>(n)));
    return result;
  }

  auto apply = [&g](std::span<const double> in, std::span<double> out) {
    adjacency_matvec(g, in, out);
  };
  std::vector<double> z, y;
  double rayleigh = 0.0;
  iterate_squared(apply, n, opts, z, y, rayleigh, result.iterations,
                  result.converged);
  // y = A·z for the final unit iterate, so ‖y‖² is the (monotone-improved)
  // Rayleigh quotient of A² there.
  rayleigh = 0.0;
  for (double v : y) rayleigh += v * v;
  const double lambda = std::sqrt(std::max(rayleigh, 0.0));
  result.lambda_max = lambda;

  // λz + Az projects the limit onto the +λ eigenspace; entries are clamped
  // to their absolute value to clean up rounding noise.
  std::vector<double> p(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    p[i] = std::abs(lambda * z[i] + y[i]);
  double pn = norm2(p);
  if (pn == 0.0) {
    for (std::size_t i = 0; i < z.size(); ++i) p[i] = std::abs(z[i]);
    pn = norm2(p);
  }
  scale(p, 1.0 / pn);
  std::vector<double> ap(p.size());
  adjacency_matvec(g, p, ap);
  double res = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = ap[i] - lambda * p[i];
    res += d * d;
  }
  result.residual = std::sqrt(res);
  result.perron = std::move(p);
  return result;
}

BipartiteSpectralResult lambda_max_bipartite(const BipartiteGraph& bg,
                                             const SpectralOptions& opts) {
  if (opts.tol <= 0.0) throw precondition_error("tolerance must be positive");
  BipartiteSpectralResult result;
  const int m = bg.left_count();
  const int n = bg.right_count();
  if (m == 0 || n == 0) throw precondition_error("empty partite set");
  if (bg.edge_count() == 0) {
    result.left.assign(static_cast<std::size_t>(m),
                       1.0 / std::sqrt(static_cast<double>(m)));
    result.right.assign(static_cast<std::size_t>(n),
                        1.0 / std::sqrt(static_cast<double>(n)));
    result.block.perron.resize(static_cast<std::size_t>(m + n));
    for (int i = 0; i < m; ++i)
      result.block.perron[static_cast<std::size_t>(i)] = result.left[i] / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
      result.block.perron[static_cast<std::size_t>(m + i)] =
          result.right[i] / std::sqrt(2.0);
    return result;
  }

  // BBᵗ is entrywise non-negative, so the iterates stay non-negative from the
  // all-ones start; no sign recovery is needed on the left side.
  std::vector<double> bt(static_cast<std::size_t>(n));
  auto apply = [&](std::span<const double> in, std::span<double> out) {
    biadjacency_tmatvec(bg, in, bt);
    biadjacency_matvec(bg, bt, out);
  };
  // iterate_squared drives (BBᵗ)² steps; its Rayleigh value is ‖BBᵗx‖² whose
  // fourth root is ‖B‖. Run the plain BBᵗ iteration directly instead so the
  // convergence test matches the contract.
  const int max_iter = opts.max_iter >= 0 ? opts.max_iter : default_max_iter(m + n);
  std::vector<double> x(static_cast<std::size_t>(m),
                        1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> w(static_cast<std::size_t>(m));
  double rayleigh = 0.0;
  result.block.converged = false;
  double prev = -1.0;
  for (int it = 1; it <= max_iter; ++it) {
    result.block.iterations = it;
    apply(std::span<const double>(x.data(), x.size()),
          std::span<double>(w.data(), w.size()));
    double r = 0.0;
    for (double v : bt) r += v * v;  // ⟨x, BBᵗx⟩ = ‖Bᵗx‖²
    assert(r >= prev - 1e-12 * std::max(1.0, r));
    prev = r;
    rayleigh = r;
    double res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = w[i] - r * x[i];
      res += d * d;
    }
    res = std::sqrt(res);
    const double wn = norm2(w);
    if (wn > 0.0)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = w[i] / wn;
    if (res <= opts.tol * std::max(r, 1.0)) {
      result.block.converged = true;
      break;
    }
  }
  biadjacency_tmatvec(bg, x, bt);
  double lambda = 0.0;
  for (double v : bt) lambda += v * v;
  lambda = std::sqrt(lambda);  // = ‖Bᵗx‖ for unit x
  result.block.lambda_max = lambda;

  for (double& v : x) v = std::abs(v);
  result.left = x;
  std::vector<double> y(bt);
  for (double& v : y) v = std::abs(v);
  const double yn = norm2(y);
  if (yn > 0.0) scale(y, 1.0 / yn);
  result.right = y;

  // Block-operator Perron vector (x, y)/√2 and its residual.
  result.block.perron.resize(static_cast<std::size_t>(m + n));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < m; ++i)
    result.block.perron[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] * inv_sqrt2;
  for (int i = 0; i < n; ++i)
    result.block.perron[static_cast<std::size_t>(m + i)] =
        y[static_cast<std::size_t>(i)] * inv_sqrt2;
  std::vector<double> by(static_cast<std::size_t>(m));
  std::vector<double> btx(static_cast<std::size_t>(n));
  biadjacency_matvec(bg, y, by);
  biadjacency_tmatvec(bg, x, btx);
  double res = 0.0;
  for (int i = 0; i < m; ++i) {
    const double d = by[static_cast<std::size_t>(i)] - lambda * x[static_cast<std::size_t>(i)];
    res += d * d;
  }
  for (int i = 0; i < n; ++i) {
    const double d = btx[static_cast<std::size_t>(i)] - lambda * y[static_cast<std::size_t>(i)];
    res += d * d;
  }
  result.block.residual = std::sqrt(res / 2.0);
  return result;
}

EigenBoundChain eigen_bound_chain(const Graph& g, const SpectralOptions& opts) {
  EigenBoundChain chain;
  const DegreeStats stats = degree_stats(g);
  const SpectralResult spec = lambda_max(g, opts);
  chain.rms = stats.rms;
  chain.lambda = spec.lambda_max;
  chain.delta = stats.max;
  const double slack = 1e-9 * std::max(1.0, chain.lambda);
  chain.ok = chain.rms <= chain.lambda + slack && chain.lambda <= chain.delta + slack;
  return chain;
}

BipartiteBoundChain bipartite_bound_chain(const BipartiteGraph& bg,
                                          const SpectralOptions& opts) {
  BipartiteBoundChain chain;
  const int m = bg.left_count();
  const int n = bg.right_count();
  double sum_u = 0.0, sumsq_u = 0.0, max_u = 0.0;
  for (int u = 0; u < m; ++u) {
    const double d = bg.left_degree(u);
    sum_u += d;
    sumsq_u += d * d;
    max_u = std::max(max_u, d);
  }
  double sum_w = 0.0, sumsq_w = 0.0, max_w = 0.0;
  for (int w = 0; w < n; ++w) {
    const double d = bg.right_degree(w);
    sum_w += d;
    sumsq_w += d * d;
    max_w = std::max(max_w, d);
  }
  const double rms_u = std::sqrt(sumsq_u / m);
  const double rms_w = std::sqrt(sumsq_w / n);
  const double avg_u = sum_u / m;
  const double avg_w = sum_w / n;

  chain.lower = std::max(std::sqrt(static_cast<double>(m) / n) * rms_u,
                         std::sqrt(static_cast<double>(n) / m) * rms_w);
  chain.rms_geomean = std::sqrt(rms_u * rms_w);
  chain.delta_geomean = std::sqrt(max_u * max_w);
  chain.m_lower = std::sqrt(avg_u * avg_w);
  chain.m_upper = chain.delta_geomean;
  chain.lambda = lambda_max_bipartite(bg, opts).block.lambda_max;

  const double slack = 1e-9 * std::max(1.0, chain.lambda);
  chain.ok_lower = chain.lower <= chain.lambda + slack;
  chain.ok_rms = chain.rms_geomean <= chain.lambda + slack;
  chain.ok_upper = chain.lambda <= chain.delta_geomean + slack;
  chain.ok_m_lower = chain.m_lower <= chain.lambda + slack;
  return chain;
}

}  // namespace bidensity
