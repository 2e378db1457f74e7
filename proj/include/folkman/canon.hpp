#pragma once

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "folkman/graph.hpp"
#include "folkman/graph6.hpp"

namespace folkman {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation of vertices; perm[v] is the image of v.
using Permutation = std::vector<int>;

struct CanonicalForm {
  /// graph6 of the canonically relabelled graph. Equal strings iff isomorphic.
  std::string graph6;
  BigInt group_order = 1;
  /// orbits[v] is the smallest vertex in the Aut(G)-orbit of v.
  std::vector<int> orbits;
  /// labeling[v] is the canonical index of vertex v.
  std::vector<int> labeling;
  /// Generating set of Aut(G).
  std::vector<Permutation> generators;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.graph6 == b.graph6; }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller index as representative.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<int> parent_;
};

/// Ordered partition: lab lists vertices, end[i] marks the last position of a cell.
struct OrderedPartition {
  std::vector<int> lab;
  std::vector<std::uint8_t> end;

  int cell_end(int start) const {
    int e = start;
    while (!end[e]) ++e;
    return e;
  }
  bool discrete() const {
    for (auto x : end)
      if (!x) return false;
    return true;
  }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.graph6 = encode_graph6(g_);
      return out;
    }
    OrderedPartition root;
    root.lab.resize(n_);
    std::iota(root.lab.begin(), root.lab.end(), 0);
    root.end.assign(n_, 0);
    root.end[n_ - 1] = 1;
    refine(root, {0});
    search(root, true);

    std::vector<int> labeling(n_);
    for (int i = 0; i < n_; ++i) labeling[best_lab_[i]] = i;
    out.graph6 = encode_graph6(Graph::from_rows(best_rows_));
    out.group_order = group_order_;
    out.labeling = std::move(labeling);
    UnionFind uf(n_);
    for (const auto& a : automorphisms_)
      for (int v = 0; v < n_; ++v) uf.unite(v, a[v]);
    out.orbits.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbits[v] = uf.find(v);
    out.generators = std::move(automorphisms_);
    return out;
  }

 private:
  static constexpr int kContinue = INT_MAX;

  // Refines to the coarsest equitable partition finer than p.
  void refine(OrderedPartition& p, std::vector<int> splitters) const {
    std::deque<int> queue(splitters.begin(), splitters.end());
    std::vector<std::uint8_t> queued(n_, 0);
    for (int s : splitters) queued[s] = 1;
    std::vector<int> count(n_);
    std::vector<int> scratch;
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      queued[s] = 0;
      VertexSet w;
      for (int i = s, e = p.cell_end(s); i <= e; ++i) w.set(p.lab[i]);
      int pos = 0;
      while (pos < n_) {
        const int e = p.cell_end(pos);
        if (e > pos) {
          bool uniform = true;
          for (int i = pos; i <= e; ++i) {
            count[p.lab[i]] = (g_.neighbors(p.lab[i]) & w).count();
            if (count[p.lab[i]] != count[p.lab[pos]]) uniform = false;
          }
          if (!uniform) split(p, pos, e, count, queue, queued);
        }
        pos = e + 1;
      }
    }
  }

  void split(OrderedPartition& p, int start, int e, const std::vector<int>& count, std::deque<int>& queue,
             std::vector<std::uint8_t>& queued) const {
    std::stable_sort(p.lab.begin() + start, p.lab.begin() + e + 1,
                     [&](int a, int b) { return count[a] < count[b]; });
    std::vector<int> starts{start};
    for (int i = start + 1; i <= e; ++i) {
      if (count[p.lab[i]] != count[p.lab[i - 1]]) {
        p.end[i - 1] = 1;
        starts.push_back(i);
      }
    }
    if (queued[start]) {
      for (std::size_t k = 1; k < starts.size(); ++k) {
        queue.push_back(starts[k]);
        queued[starts[k]] = 1;
      }
      return;
    }
    // Hopcroft: every fragment except one largest
    std::size_t largest = 0;
    int largest_size = -1;
    for (std::size_t k = 0; k < starts.size(); ++k) {
      int fe = k + 1 < starts.size() ? starts[k + 1] - 1 : e;
      int sz = fe - starts[k] + 1;
      if (sz > largest_size) {
        largest_size = sz;
        largest = k;
      }
    }
    for (std::size_t k = 0; k < starts.size(); ++k) {
      if (k == largest) continue;
      queue.push_back(starts[k]);
      queued[starts[k]] = 1;
    }
  }

  // First non-singleton cell of maximum size; returns start or -1.
  int target_cell(const OrderedPartition& p) const {
    int best = -1;
    int best_size = 1;
    int pos = 0;
    while (pos < n_) {
      int e = p.cell_end(pos);
      if (e - pos + 1 > best_size) {
        best_size = e - pos + 1;
        best = pos;
      }
      pos = e + 1;
    }
    return best;
  }

  OrderedPartition individualize(const OrderedPartition& p, int start, int v) const {
    OrderedPartition q = p;
    int at = start;
    while (q.lab[at] != v) ++at;
    std::swap(q.lab[at], q.lab[start]);
    q.end[start] = 1;
    refine(q, {start});
    return q;
  }

  std::vector<VertexSet> permuted_rows(const std::vector<int>& lab) const {
    std::vector<int> inv(n_);
    for (int i = 0; i < n_; ++i) inv[lab[i]] = i;
    std::vector<VertexSet> rows(n_);
    for (int i = 0; i < n_; ++i)
      for (int w : g_.neighbors(lab[i])) rows[i].set(inv[w]);
    return rows;
  }

  static int compare_rows(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return -1;
      if (b[i] < a[i]) return 1;
    }
    return 0;
  }

  int common_prefix(const std::vector<int>& other) const {
    int c = 0;
    while (c < static_cast<int>(path_.size()) && c < static_cast<int>(other.size()) && path_[c] == other[c]) ++c;
    return c;
  }

  void record_automorphism(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    Permutation a(n_);
    for (int i = 0; i < n_; ++i) a[from_lab[i]] = to_lab[i];
    automorphisms_.push_back(std::move(a));
  }

  int leaf(const OrderedPartition& p) {
    auto rows = permuted_rows(p.lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_rows_ = rows;
      best_rows_ = std::move(rows);
      first_path_ = best_path_ = path_;
      return kContinue;
    }
    if (compare_rows(rows, first_rows_) == 0) {
      record_automorphism(first_lab_, p.lab);
      return common_prefix(first_path_);
    }
    int c = compare_rows(rows, best_rows_);
    if (c == 0) {
      record_automorphism(best_lab_, p.lab);
      return common_prefix(best_path_);
    }
    if (c > 0) {
      best_rows_ = std::move(rows);
      best_lab_ = p.lab;
      best_path_ = path_;
    }
    return kContinue;
  }

  // Orbits of the automorphisms found so far that fix the current path pointwise.
  void stabiliser_orbits(UnionFind& uf) const {
    for (const auto& a : automorphisms_) {
      bool fixes = true;
      for (int v : path_)
        if (a[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, a[v]);
    }
  }

  int search(const OrderedPartition& p, bool on_first_path) {
    const int start = target_cell(p);
    if (start < 0) return leaf(p);
    const int level = static_cast<int>(path_.size());
    const int e = p.cell_end(start);
    std::vector<int> cell(p.lab.begin() + start, p.lab.begin() + e + 1);
    std::sort(cell.begin(), cell.end());

    std::size_t auts_seen = automorphisms_.size();
    UnionFind uf(n_);
    stabiliser_orbits(uf);
    for (std::size_t idx = 0; idx < cell.size(); ++idx) {
      const int w = cell[idx];
      if (idx > 0) {
        if (automorphisms_.size() != auts_seen) {
          auts_seen = automorphisms_.size();
          uf = UnionFind(n_);
          stabiliser_orbits(uf);
        }
        if (uf.find(w) != w) continue;
      }
      OrderedPartition child = individualize(p, start, w);
      path_.push_back(w);
      int r = search(child, on_first_path && idx == 0);
      path_.pop_back();
      if (r < level) return r;
    }
    if (on_first_path) {
      UnionFind orbit(n_);
      stabiliser_orbits(orbit);
      int rep = orbit.find(cell[0]);
      int size = 0;
      for (int v : cell)
        if (orbit.find(v) == rep) ++size;
      group_order_ *= size;
    }
    return kContinue;
  }

  const Graph& g_;
  const int n_;
  std::vector<int> path_;
  bool have_leaf_ = false;
  std::vector<int> first_lab_, best_lab_;
  std::vector<int> first_path_, best_path_;
  std::vector<VertexSet> first_rows_, best_rows_;
  std::vector<Permutation> automorphisms_;
  BigInt group_order_ = 1;
};

}  // namespace detail

/// Canonical labelling with automorphism group data.
inline CanonicalForm canonical_form(const Graph& g) { return detail::CanonSearch(g).run(); }

/// Canonical graph6 string only.
inline std::string canonical_string(const Graph& g) { return canonical_form(g).graph6; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_string(a) == canonical_string(b);
}

}  // namespace folkman
