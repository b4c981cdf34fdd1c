#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bidensity {

/// Canonical vertex subset: sorted, duplicate-free indices into a graph's range.
using VertexSet = std::vector<int>;

/// Non-negative reals (degrees or localized degrees d_X(v)).
using DegreeSequence = std::vector<double>;

/// Simple undirected graph in CSR form. Immutable after construction; safe for
/// concurrent reads.
class Graph {
 public:
  Graph() = default;

  /// Builds from an (unordered) list of endpoint pairs on vertices [0, n).
  /// Duplicate edges are collapsed; self-loops and out-of-range endpoints throw.
  static Graph from_edges(int vertex_count,
                          std::span<const std::pair<int, int>> edges);

  /// Adopts ready-made CSR arrays. For generators that produce adjacency
  /// directly; rows must already be sorted, duplicate-free, loop-free and
  /// symmetric (checked only in debug builds).
  static Graph from_csr(int vertex_count, std::vector<std::int64_t> offsets,
                        std::vector<int> adjacency);

  int vertex_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return m_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool has_edge(int u, int v) const;

  /// All edges as pairs u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<int> adj_;
};

/// Bipartite graph with left part U (rows) and right part W (columns), stored
/// as CSR over both orientations so that B·y and Bᵗ·x are both cheap.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds from (left, right) index pairs; duplicates collapse, range-checked.
  static BipartiteGraph from_edges(int left_count, int right_count,
                                   std::span<const std::pair<int, int>> edges);

  int left_count() const noexcept { return m_; }
  int right_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return e_; }

  /// Right neighbors of left vertex u, sorted ascending.
  std::span<const int> row(int u) const {
    return {radj_.data() + roff_[u], radj_.data() + roff_[u + 1]};
  }
  /// Left neighbors of right vertex w, sorted ascending.
  std::span<const int> column(int w) const {
    return {cadj_.data() + coff_[w], cadj_.data() + coff_[w + 1]};
  }
  int left_degree(int u) const { return static_cast<int>(roff_[u + 1] - roff_[u]); }
  int right_degree(int w) const { return static_cast<int>(coff_[w + 1] - coff_[w]); }

  bool operator==(const BipartiteGraph&) const = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::int64_t e_ = 0;
  std::vector<std::int64_t> roff_{0}, coff_{0};
  std::vector<int> radj_, cadj_;
};

/// Bipartite double cover G×K₂: left and right parts are copies of V(G);
/// left u is adjacent to right w iff u~w in g. The biadjacency matrix equals
/// the adjacency matrix of g.
BipartiteGraph double_cover(const Graph& g);

/// Flattens a bipartite graph to a plain graph on left_count + right_count
/// vertices (right vertex w becomes left_count + w).
Graph bipartite_as_graph(const BipartiteGraph& bg);

/// Number of ORDERED adjacent pairs (u, v) ∈ X×Y with u~v. An edge with both
/// endpoints in X∩Y contributes 2, so e(V,V) = 2·edge_count and e(V,V)/|V| is
/// the average degree. Throws on empty or out-of-range sets.
std::int64_t e_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// e(X,Y)/√(|X||Y|), the bi-average degree of the pair.
double bi_average_degree(const Graph& g, const VertexSet& x, const VertexSet& y);

struct DegreeStats {
  DegreeSequence degrees;
  double avg = 0.0;  // ď(G), the ℓ¹ norm under the normalized convention
  int max = 0;       // Δ(G)
  double rms = 0.0;  // ‖d‖₂ under the normalized convention: √((1/n)Σd²)
};

/// Degree sequence together with its normalized norms. Sequence norms in this
/// project are normalized: ‖d‖₁ = mean, ‖d‖₂ = root mean square, ‖d‖∞ = max;
/// the unsubscripted ‖·‖ is the plain Euclidean norm.
DegreeStats degree_stats(const Graph& g);

struct RhoResult {
  double value = 1.0;
  int k = 1;         // 1-based witness index into the non-increasing rearrangement
  double top = 0.0;  // d₁ after sorting
  double dk = 0.0;   // d_k after sorting
};

/// Smoothness ρ(d): sort non-increasingly, let k be the smallest index with
/// d₁²+…+d_k² ≥ d_{k+1}²+…+d_n², return d₁/d_k (1 for the zero sequence).
/// Satisfies 1 ≤ ρ ≤ √n, and ρ < √2·max/rms for nonzero d. Ties in the sort
/// are broken by original index; only the reported k-witness depends on that.
RhoResult rho_detailed(std::span<const double> values);
double rho(std::span<const double> values);

/// Validates and canonicalizes a vertex subset (sorts, checks range and
/// duplicates). Throws precondition_error on violation.
VertexSet canonical_vertex_set(std::span<const int> members, int vertex_count);

}  // namespace bidensity
