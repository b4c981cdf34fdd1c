#include "bidensity/certify.hpp"

#include <algorithm>
#include <cmath>

#include "bidensity/errors.hpp"

namespace bidensity {

namespace {

constexpr double kPerronClamp = 1e-13;

struct Orientation {
  int left_count;
  int right_count;
  int left_max_degree;
  // Neighbor access for the chosen orientation of B.
  const BipartiteGraph* bg;
  bool transposed;

  std::span<const int> left_neighbors(int u) const {
    return transposed ? bg->column(u) : bg->row(u);
  }
  std::span<const int> right_neighbors(int w) const {
    return transposed ? bg->row(w) : bg->column(w);
  }
};

struct PipelineResult {
  VertexSet left_set;   // X in this orientation's left part
  VertexSet right_set;  // Y in this orientation's right part
  std::int64_t edges = 0;
  double density = 0.0;
  double guarantee_factor = 0.0;
};

// One run of the two-stage rounding for a fixed orientation, starting from
// the non-negative singular vector on the orientation's left side.
PipelineResult run_pipeline(const Orientation& o, std::span<const double> left_vec,
                            Variant variant) {
  std::vector<double> x(left_vec.begin(), left_vec.end());
  // Numerical noise below the clamp is zeroed; the proof needs x ≥ 0.
  for (double& v : x)
    if (v < kPerronClamp) v = 0.0;

  // Stage 1: z = Bᵗx, prefix rounding picks Y.
  std::vector<double> z(static_cast<std::size_t>(o.right_count), 0.0);
  for (int w = 0; w < o.right_count; ++w) {
    double s = 0.0;
    for (int u : o.right_neighbors(w)) s += x[static_cast<std::size_t>(u)];
    z[static_cast<std::size_t>(w)] = s;
  }
  if (std::all_of(z.begin(), z.end(), [](double v) { return v == 0.0; }))
    throw degenerate_input_error("projected vector Bᵗx vanished");
  const RoundingOutcome eta = round_prefix(z);

  // Stage 2: w_u = d_Y(u), variant-specific rounding picks X.
  std::vector<char> in_y(static_cast<std::size_t>(o.right_count), 0);
  for (int w : eta.support) in_y[static_cast<std::size_t>(w)] = 1;
  std::vector<std::int64_t> w(static_cast<std::size_t>(o.left_count), 0);
  for (int u = 0; u < o.left_count; ++u) {
    std::int64_t d = 0;
    for (int v : o.left_neighbors(u)) d += in_y[static_cast<std::size_t>(v)];
    w[static_cast<std::size_t>(u)] = d;
  }
  if (std::all_of(w.begin(), w.end(), [](std::int64_t v) { return v == 0; }))
    throw degenerate_input_error("second-stage degree vector vanished");

  std::vector<double> wd(w.begin(), w.end());
  RoundingOutcome xi;
  const double log_n = std::log(static_cast<double>(o.right_count));
  const double log_m = std::log(static_cast<double>(o.left_count));
  double factor = 0.0;
  switch (variant) {
    case Variant::T1:
      xi = round_prefix(wd);
      factor = 4.0 / std::sqrt((log_m + 4.0) * (log_n + 4.0));
      break;
    case Variant::T2:
      xi = round_threshold(w, o.left_max_degree);
      factor = 2.0 / std::sqrt(
                         (std::log(static_cast<double>(o.left_max_degree)) + 1.0) *
                         (log_n + 4.0));
      break;
    case Variant::T3: {
      xi = round_smooth(wd);
      const double rho_w = rho(wd);
      factor = 1.0 / std::sqrt(2.0 * (std::log(rho_w) + 1.0) * (log_n + 4.0));
      break;
    }
  }

  PipelineResult result;
  result.left_set = xi.support;
  result.right_set = eta.support;
  for (int u : xi.support) result.edges += w[static_cast<std::size_t>(u)];
  result.density = static_cast<double>(result.edges) /
                   std::sqrt(static_cast<double>(result.left_set.size()) *
                             static_cast<double>(result.right_set.size()));
  result.guarantee_factor = factor;
  return result;
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::T1: return "t1";
    case Variant::T2: return "t2";
    case Variant::T3: return "t3";
  }
  return "t1";
}

Variant variant_from_name(const std::string& name) {
  if (name == "t1" || name == "T1") return Variant::T1;
  if (name == "t2" || name == "T2") return Variant::T2;
  if (name == "t3" || name == "T3") return Variant::T3;
  throw precondition_error("unknown variant: " + name);
}

Certificate certify_bipartite(const BipartiteGraph& bg, Variant variant,
                              const SpectralOptions& opts) {
  if (bg.edge_count() == 0)
    throw degenerate_input_error(
        "cannot certify an edgeless graph: no positive-density pair exists");

  const BipartiteSpectralResult spectral = lambda_max_bipartite(bg, opts);
  int delta_u = 0, delta_w = 0;
  for (int u = 0; u < bg.left_count(); ++u) delta_u = std::max(delta_u, bg.left_degree(u));
  for (int w = 0; w < bg.right_count(); ++w) delta_w = std::max(delta_w, bg.right_degree(w));

  const Orientation left_o{bg.left_count(), bg.right_count(), delta_u, &bg, false};
  const Orientation right_o{bg.right_count(), bg.left_count(), delta_w, &bg, true};
  const PipelineResult left = run_pipeline(left_o, spectral.left, variant);
  const PipelineResult right = run_pipeline(right_o, spectral.right, variant);

  Certificate cert;
  cert.variant = variant;
  cert.lambda = spectral.block.lambda_max;
  cert.converged = spectral.block.converged;
  const int min_side = std::min(bg.left_count(), bg.right_count());
  cert.min_side_factor =
      1.0 / (0.5 * std::log(static_cast<double>(min_side)) + 2.0);
  if (left.density >= right.density) {
    cert.side = "left";
    cert.x_set = left.left_set;
    cert.y_set = left.right_set;
    cert.edges = left.edges;
    cert.density = left.density;
    cert.guarantee_factor = left.guarantee_factor;
  } else {
    cert.side = "right";
    // The swapped pipeline produced X ⊆ W and Y ⊆ U; report in (U, W) terms.
    cert.x_set = right.right_set;
    cert.y_set = right.left_set;
    cert.edges = right.edges;
    cert.density = right.density;
    cert.guarantee_factor = right.guarantee_factor;
  }
  return cert;
}

Certificate certify(const Graph& g, Variant variant, const SpectralOptions& opts) {
  if (g.edge_count() == 0)
    throw degenerate_input_error(
        "cannot certify an edgeless graph: no positive-density pair exists");
  // The copy bijections of the double cover are identities on the index
  // space, so the certificate sets transfer verbatim to subsets of V(g).
  return certify_bipartite(double_cover(g), variant, opts);
}

namespace {

bool check_common(const Certificate& cert, std::int64_t recomputed_edges) {
  if (cert.x_set.empty() || cert.y_set.empty()) return false;
  if (recomputed_edges != cert.edges) return false;
  const double density =
      static_cast<double>(recomputed_edges) /
      std::sqrt(static_cast<double>(cert.x_set.size()) *
                static_cast<double>(cert.y_set.size()));
  if (std::abs(density - cert.density) > 1e-12 * std::max(1.0, std::abs(density)))
    return false;
  if (!(cert.guarantee_factor > 0.0 && cert.guarantee_factor <= 1.0)) return false;
  if (!(cert.density <= cert.lambda + 1e-9)) return false;
  if (!(cert.density >= cert.guarantee_factor * cert.lambda - 1e-9)) return false;
  return true;
}

}  // namespace

bool verify_certificate(const BipartiteGraph& bg, const Certificate& cert) {
  for (int u : cert.x_set)
    if (u < 0 || u >= bg.left_count())
      throw precondition_error("certificate X index out of range");
  for (int w : cert.y_set)
    if (w < 0 || w >= bg.right_count())
      throw precondition_error("certificate Y index out of range");
  std::vector<char> in_y(static_cast<std::size_t>(bg.right_count()), 0);
  for (int w : cert.y_set) in_y[static_cast<std::size_t>(w)] = 1;
  std::int64_t edges = 0;
  for (int u : cert.x_set)
    for (int w : bg.row(u)) edges += in_y[static_cast<std::size_t>(w)];
  return check_common(cert, edges);
}

bool verify_certificate(const Graph& g, const Certificate& cert) {
  for (int v : cert.x_set)
    if (v < 0 || v >= g.vertex_count())
      throw precondition_error("certificate X index out of range");
  for (int v : cert.y_set)
    if (v < 0 || v >= g.vertex_count())
      throw precondition_error("certificate Y index out of range");
  if (cert.x_set.empty() || cert.y_set.empty()) return false;
  return check_common(cert, e_between(g, cert.x_set, cert.y_set));
}

}  // namespace bidensity
