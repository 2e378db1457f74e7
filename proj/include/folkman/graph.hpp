#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "folkman/vertex_set.hpp"

namespace folkman {

struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1 stored as adjacency bitsets.
///
/// A Graph is a value: every transformation returns a new graph. Mutation is
/// only possible through GraphBuilder.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Build from rows; rows must already be symmetric and irreflexive.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return n_; }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return neighbors(u).test(v); }
  int degree(int v) const { return neighbors(v).count(); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  std::span<const VertexSet> rows() const { return adj_; }

  int size() const {
    int total = 0;
    for (const auto& r : adj_) total += r.count();
    return total / 2;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& r : adj_) d = std::max(d, r.count());
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (const auto& r : adj_) d = std::min(d, r.count());
    return d;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (v > u) out.push_back({u, v});
    return out;
  }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  Graph without_vertex(int v) const { return without_vertices(VertexSet::singleton(v)); }
  Graph without_vertices(const VertexSet& drop) const { return induced(vertices() - drop); }
  /// Subgraph induced by `keep`, relabelled in increasing vertex order.
  Graph induced(const VertexSet& keep) const;
  /// Append one vertex adjacent to `nbrs`.
  Graph with_vertex(const VertexSet& nbrs) const;
  Graph complement() const;
  /// Relabel so that vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxOrder)
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 128]");
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;

  friend class GraphBuilder;
};

/// Mutable staging area for constructing graphs.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int order() const { return g_.n_; }
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }

  GraphBuilder& add_edge(int u, int v) {
    check(u, v);
    g_.adj_[u].set(v);
    g_.adj_[v].set(u);
    return *this;
  }
  GraphBuilder& remove_edge(int u, int v) {
    check(u, v);
    g_.adj_[u].reset(v);
    g_.adj_[v].reset(u);
    return *this;
  }
  /// Append a new isolated vertex and return its index.
  int add_vertex() {
    if (g_.n_ >= kMaxOrder) throw std::invalid_argument("graph order would exceed 128");
    g_.adj_.emplace_back();
    return g_.n_++;
  }

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check(int u, int v) const {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  }
  Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

inline Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.n_; ++v) {
    if (rows[v].test(v)) throw std::invalid_argument("adjacency rows contain a self-loop");
    if (!rows[v].is_subset_of(all)) throw std::invalid_argument("adjacency row exceeds order");
  }
  for (int u = 0; u < g.n_; ++u)
    for (int v : rows[u])
      if (!rows[v].test(u)) throw std::invalid_argument("adjacency rows are not symmetric");
  g.adj_ = std::move(rows);
  return g;
}

inline Graph Graph::with_edge(int u, int v) const {
  GraphBuilder b(*this);
  b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph Graph::without_edge(int u, int v) const {
  GraphBuilder b(*this);
  b.remove_edge(u, v);
  return std::move(b).build();
}

inline Graph Graph::induced(const VertexSet& keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  int m = 0;
  for (int v : keep)
    if (v < n_) index[v] = m++;
  Graph h(m);
  for (int v : keep) {
    if (v >= n_) break;
    for (int w : adj_[v] & keep) h.adj_[index[v]].set(index[w]);
  }
  return h;
}

inline Graph Graph::with_vertex(const VertexSet& nbrs) const {
  if (!nbrs.is_subset_of(vertices())) throw std::invalid_argument("neighbourhood outside vertex range");
  GraphBuilder b(*this);
  int v = b.add_vertex();
  for (int u : nbrs) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph Graph::complement() const {
  Graph h(n_);
  const VertexSet all = vertices();
  for (int v = 0; v < n_; ++v) {
    h.adj_[v] = all - adj_[v];
    h.adj_[v].reset(v);
  }
  return h;
}

inline Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  Graph h(n_);
  for (int v = 0; v < n_; ++v)
    for (int w : adj_[v]) h.adj_[perm[v]].set(perm[w]);
  return h;
}

}  // namespace folkman
