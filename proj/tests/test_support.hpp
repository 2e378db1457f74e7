#pragma once

// Independent oracles and generators shared by the unit suites. Nothing in
// here calls into the canonical labelling or the generators under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Graph whose upper-triangle bits (in (0,1),(0,2),(1,2),(0,3)... order) are `mask`.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

/// Isomorphism test by trying every permutation (n <= 9).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (da[u] != db[p[u]]) {
        ok = false;
        break;
      }
      for (int v = u + 1; v < n; ++v)
        if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) {
          ok = false;
          break;
        }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Size of Aut(g) by brute force over all permutations (n <= 8).
inline long brute_automorphism_count(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) {
          ok = false;
          break;
        }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// One representative per isomorphism class of n-vertex graphs, by brute
/// force over all labelled graphs and pairwise permutation checks (n <= 6).
inline std::vector<Graph> brute_all_graphs(int n) {
  std::vector<Graph> reps;
  const int bits = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
    Graph g = graph_from_mask(n, m);
    bool seen = false;
    for (const Graph& r : reps)
      if (brute_isomorphic(g, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(std::move(g));
  }
  return reps;
}

/// Clique oracle: checks every k-subset.
inline bool brute_has_clique(const Graph& g, int k) {
  const int n = g.order();
  if (k > n) return false;
  if (k <= 1) return k <= 0 || n > 0;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!g.adjacent(idx[i], idx[j])) {
          ok = false;
          break;
        }
    if (ok) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Largest independent set by enumerating all vertex subsets (n <= 20).
inline int brute_independence_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    int c = __builtin_popcount(m);
    if (c <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if ((m >> u) & 1U)
        for (int v = u + 1; v < n; ++v)
          if (((m >> v) & 1U) && g.adjacent(u, v)) {
            ok = false;
            break;
          }
    if (ok) best = c;
  }
  return best;
}

inline Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i~i+5.
inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return std::move(b).build();
}

}  // namespace folkman::testing
