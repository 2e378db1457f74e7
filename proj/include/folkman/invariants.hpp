#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// True iff `cand` contains a clique of size k.
inline bool has_clique(const Graph& g, VertexSet cand, int k) {
  if (k <= 0) return true;
  if (cand.count() < k) return false;
  if (k == 1) return true;
  if (k == 2) {
    for (int v : cand)
      if (g.neighbors(v).intersects(cand)) return true;
    return false;
  }
  while (cand.count() >= k) {
    int v = cand.first();
    cand.reset(v);
    if (has_clique(g, g.neighbors(v) & cand, k - 1)) return true;
  }
  return false;
}

/// Returns some k-clique inside `cand`, or an empty vector.
inline std::vector<int> find_clique(const Graph& g, VertexSet cand, int k) {
  std::vector<int> out;
  if (k <= 0) return out;
  auto rec = [&](auto&& self, VertexSet c, int need) -> bool {
    if (need == 0) return true;
    while (c.count() >= need) {
      int v = c.first();
      c.reset(v);
      out.push_back(v);
      if (self(self, g.neighbors(v) & c, need - 1)) return true;
      out.pop_back();
    }
    return false;
  };
  if (!rec(rec, cand, k)) out.clear();
  return out;
}

namespace detail {

/// Branch and bound maximum clique with greedy colouring bounds.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run(VertexSet cand, VertexSet seed) {
    best_ = seed;
    best_size_ = seed.count();
    // greedy lower bound: repeatedly take the candidate with most candidate neighbours
    VertexSet greedy;
    VertexSet c = cand;
    while (c.any()) {
      int pick = -1;
      int deg = -1;
      for (int v : c) {
        int d = (g_.neighbors(v) & c).count();
        if (d > deg) {
          deg = d;
          pick = v;
        }
      }
      greedy.set(pick);
      c &= g_.neighbors(pick);
    }
    if (greedy.count() > best_size_) {
      best_ = greedy;
      best_size_ = greedy.count();
    }
    expand(VertexSet{}, cand);
    return best_;
  }

 private:
  void expand(VertexSet current, VertexSet cand) {
    std::vector<int> order;
    std::vector<int> bound;
    colour_sort(cand, order, bound);
    const int size = current.count();
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      int v = order[i];
      VertexSet next = current;
      next.set(v);
      VertexSet nc = cand & g_.neighbors(v);
      if (nc.empty()) {
        if (next.count() > best_size_) {
          best_ = next;
          best_size_ = next.count();
        }
      } else {
        expand(next, nc);
      }
      cand.reset(v);
    }
  }

  // Greedy sequential colouring; bound[i] is the colour count up to order[i].
  void colour_sort(VertexSet cand, std::vector<int>& order, std::vector<int>& bound) const {
    int colour = 0;
    while (cand.any()) {
      ++colour;
      VertexSet avail = cand;
      while (avail.any()) {
        int v = avail.first();
        avail.reset(v);
        avail -= g_.neighbors(v);
        cand.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  const Graph& g_;
  VertexSet best_;
  int best_size_ = 0;
};

}  // namespace detail

/// A maximum clique of g restricted to `cand`.
inline VertexSet maximum_clique(const Graph& g, VertexSet cand) {
  return detail::MaxCliqueSearch(g).run(cand, VertexSet{});
}
inline VertexSet maximum_clique(const Graph& g) { return maximum_clique(g, g.vertices()); }

inline int clique_number(const Graph& g) { return maximum_clique(g).count(); }

inline VertexSet maximum_independent_set(const Graph& g) { return maximum_clique(g.complement()); }

/// Exact independence number.
inline int independence_number(const Graph& g) { return maximum_independent_set(g).count(); }

/// Triangles as sorted vertex triples in lexicographic order.
inline std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    VertexSet above = g.neighbors(a) - VertexSet::range(a + 1);
    for (int b : above) {
      VertexSet common = g.neighbors(b) & above;
      for (int c : common)
        if (c > b) out.push_back({a, b, c});
    }
  }
  return out;
}

/// Number of triangles containing edge uv.
inline int triangles_on_edge(const Graph& g, int u, int v) {
  return (g.neighbors(u) & g.neighbors(v)).count();
}

namespace detail {

/// Exact k-colourability by DSATUR-ordered backtracking. Fills `colour` when
/// colourable.
class KColouring {
 public:
  KColouring(const Graph& g, int k) : g_(g), k_(k) {}

  bool solve(std::vector<int>& colour) {
    const int n = g_.order();
    colour_.assign(n, -1);
    blocked_.assign(static_cast<std::size_t>(n) * k_, 0);
    if (n == 0) {
      colour.clear();
      return true;
    }
    if (k_ <= 0) return false;
    bool ok = search(0, 0);
    if (ok) colour = colour_;
    return ok;
  }

 private:
  int free_count(int v) const {
    int c = 0;
    for (int i = 0; i < k_; ++i) c += blocked_[v * k_ + i] == 0;
    return c;
  }

  bool search(int coloured, int used) {
    const int n = g_.order();
    if (coloured == n) return true;
    int pick = -1;
    int pick_free = k_ + 1;
    int pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour_[v] >= 0) continue;
      int f = free_count(v);
      int d = g_.degree(v);
      if (f < pick_free || (f == pick_free && d > pick_deg)) {
        pick = v;
        pick_free = f;
        pick_deg = d;
      }
    }
    if (pick_free == 0) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (blocked_[pick * k_ + c]) continue;
      colour_[pick] = c;
      for (int w : g_.neighbors(pick)) ++blocked_[w * k_ + c];
      if (search(coloured + 1, std::max(used, c + 1))) return true;
      for (int w : g_.neighbors(pick)) --blocked_[w * k_ + c];
      colour_[pick] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colour_;
  std::vector<int> blocked_;
};

}  // namespace detail

/// Proper colouring with at most k colours, if one exists.
inline bool k_colourable(const Graph& g, int k, std::vector<int>* colouring = nullptr) {
  std::vector<int> c;
  bool ok = detail::KColouring(g, k).solve(c);
  if (ok && colouring) *colouring = std::move(c);
  return ok;
}

/// Exact chromatic number. Lower bound is max(omega, ceil(n / alpha)).
inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  int lower = clique_number(g);
  int alpha = independence_number(g);
  lower = std::max(lower, (n + alpha - 1) / alpha);
  for (int k = lower;; ++k)
    if (k_colourable(g, k)) return k;
}

inline bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  VertexSet seen = VertexSet::singleton(within.first());
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// At least 3 vertices, connected, and no cut vertex.
inline bool is_two_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v) {
    VertexSet rest = g.vertices();
    rest.reset(v);
    if (!is_connected(g, rest)) return false;
  }
  return true;
}

}  // namespace folkman
