#include "bidensity/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "bidensity/errors.hpp"

namespace bidensity {

namespace {

// Builds CSR offsets/adjacency from directed arcs (u -> v), sorting and
// collapsing duplicates per source.
void build_csr(int n, std::vector<std::pair<int, int>>& arcs,
               std::vector<std::int64_t>& offsets, std::vector<int>& adj) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : arcs) offsets[static_cast<std::size_t>(u) + 1]++;
  for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  adj.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) adj[i] = arcs[i].second;
}

}  // namespace

Graph Graph::from_edges(int vertex_count,
                        std::span<const std::pair<int, int>> edges) {
  if (vertex_count < 0) throw precondition_error("vertex_count must be >= 0");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw precondition_error("edge endpoint out of range: (" +
                               std::to_string(u) + ", " + std::to_string(v) + ")");
    if (u == v)
      throw precondition_error("self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  Graph g;
  g.n_ = vertex_count;
  build_csr(vertex_count, arcs, g.offsets_, g.adj_);
  g.m_ = static_cast<std::int64_t>(g.adj_.size()) / 2;
  return g;
}

Graph Graph::from_csr(int vertex_count, std::vector<std::int64_t> offsets,
                      std::vector<int> adjacency) {
  if (vertex_count < 0 ||
      offsets.size() != static_cast<std::size_t>(vertex_count) + 1 ||
      offsets.front() != 0 ||
      offsets.back() != static_cast<std::int64_t>(adjacency.size()))
    throw precondition_error("malformed CSR arrays");
  Graph g;
  g.n_ = vertex_count;
  g.offsets_ = std::move(offsets);
  g.adj_ = std::move(adjacency);
  g.m_ = static_cast<std::int64_t>(g.adj_.size()) / 2;
#ifndef NDEBUG
  for (int u = 0; u < vertex_count; ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      assert(nb[i] >= 0 && nb[i] < vertex_count && nb[i] != u);
      assert(i == 0 || nb[i - 1] < nb[i]);
    }
  }
#endif
  return g;
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

BipartiteGraph BipartiteGraph::from_edges(
    int left_count, int right_count,
    std::span<const std::pair<int, int>> edges) {
  if (left_count < 0 || right_count < 0)
    throw precondition_error("part sizes must be >= 0");
  std::vector<std::pair<int, int>> rows, cols;
  rows.reserve(edges.size());
  cols.reserve(edges.size());
  for (const auto& [u, w] : edges) {
    if (u < 0 || u >= left_count || w < 0 || w >= right_count)
      throw precondition_error("bipartite edge out of range: (" +
                               std::to_string(u) + ", " + std::to_string(w) + ")");
    rows.emplace_back(u, w);
    cols.emplace_back(w, u);
  }
  BipartiteGraph bg;
  bg.m_ = left_count;
  bg.n_ = right_count;
  build_csr(left_count, rows, bg.roff_, bg.radj_);
  build_csr(right_count, cols, bg.coff_, bg.cadj_);
  bg.e_ = static_cast<std::int64_t>(bg.radj_.size());
  return bg;
}

BipartiteGraph double_cover(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(2 * g.edge_count()));
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w : g.neighbors(u)) edges.emplace_back(u, w);
  return BipartiteGraph::from_edges(g.vertex_count(), g.vertex_count(), edges);
}

Graph bipartite_as_graph(const BipartiteGraph& bg) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(bg.edge_count()));
  for (int u = 0; u < bg.left_count(); ++u)
    for (int w : bg.row(u)) edges.emplace_back(u, bg.left_count() + w);
  return Graph::from_edges(bg.left_count() + bg.right_count(), edges);
}

VertexSet canonical_vertex_set(std::span<const int> members, int vertex_count) {
  VertexSet s(members.begin(), members.end());
  std::sort(s.begin(), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= vertex_count))
    throw precondition_error("vertex set member out of range");
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw precondition_error("vertex set contains duplicates");
  return s;
}

std::int64_t e_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.empty() || y.empty())
    throw precondition_error("e_between requires non-empty vertex sets");
  VertexSet xs = canonical_vertex_set(x, g.vertex_count());
  std::vector<char> in_y(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int w : canonical_vertex_set(y, g.vertex_count())) in_y[w] = 1;
  std::int64_t count = 0;
  for (int u : xs)
    for (int v : g.neighbors(u)) count += in_y[v];
  return count;
}

double bi_average_degree(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::int64_t e = e_between(g, x, y);
  return static_cast<double>(e) /
         std::sqrt(static_cast<double>(x.size()) * static_cast<double>(y.size()));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  const int n = g.vertex_count();
  st.degrees.resize(static_cast<std::size_t>(n));
  double sum = 0.0, sumsq = 0.0;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    st.degrees[static_cast<std::size_t>(v)] = d;
    st.max = std::max(st.max, d);
    sum += d;
    sumsq += static_cast<double>(d) * d;
  }
  if (n > 0) {
    st.avg = sum / n;
    st.rms = std::sqrt(sumsq / n);
  }
  return st;
}

RhoResult rho_detailed(std::span<const double> values) {
  RhoResult r;
  if (values.empty()) return r;
  std::vector<double> d(values.begin(), values.end());
  for (double v : d)
    if (v < 0.0) throw precondition_error("rho requires non-negative values");
  std::stable_sort(d.begin(), d.end(), std::greater<double>());
  const int n = static_cast<int>(d.size());
  double total = 0.0;
  for (double v : d) total += v * v;
  // k = smallest index with prefix-of-squares >= suffix-of-squares.
  double prefix = 0.0;
  int k = n;
  for (int i = 0; i < n; ++i) {
    prefix += d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
    if (prefix >= total - prefix) {
      k = i + 1;
      break;
    }
  }
  r.k = k;
  r.top = d[0];
  r.dk = d[static_cast<std::size_t>(k - 1)];
  r.value = (r.dk != 0.0) ? r.top / r.dk : 1.0;  // dk == 0 forces the zero sequence
  return r;
}

double rho(std::span<const double> values) { return rho_detailed(values).value; }

}  // namespace bidensity
