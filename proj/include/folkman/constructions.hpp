#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/canon.hpp"
#include "folkman/gf8.hpp"
#include "folkman/graph.hpp"
#include "folkman/invariants.hpp"
#include "folkman/parallel.hpp"
#include "folkman/pattern.hpp"

namespace folkman {

/// g plus a vertex adjacent to everything.
inline Graph cone(const Graph& g) { return g.with_vertex(g.vertices()); }

/// Vertex i adjacent to i +- d (mod n) for d in D, D within 1..n/2.
inline Graph circulant(int n, const std::vector<int>& distances) {
  GraphBuilder b(n);
  for (int d : distances) {
    if (d < 1 || d > n / 2) throw std::invalid_argument("circulant distance out of range: " + std::to_string(d));
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + d) % n);
  }
  return std::move(b).build();
}

/// Pairs (x,y) over GF(8) minus the origin; (x1,y1) ~ (x2,y2) iff
/// x1*y2 + x2*y1 = 1. Vertex (x,y) has index 8x + y - 1.
inline Graph polarity_graph_64() {
  GraphBuilder b(63);
  for (int u = 1; u < 64; ++u)
    for (int v = u + 1; v < 64; ++v) {
      auto x1 = static_cast<std::uint8_t>(u >> 3), y1 = static_cast<std::uint8_t>(u & 7);
      auto x2 = static_cast<std::uint8_t>(v >> 3), y2 = static_cast<std::uint8_t>(v & 7);
      if (gf8::add(gf8::mul(x1, y2), gf8::mul(x2, y1)) == 1) b.add_edge(u - 1, v - 1);
    }
  return std::move(b).build();
}

namespace named {

inline Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return std::move(b).build();
}

/// 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
inline Graph icosahedron() {
  GraphBuilder b(12);
  for (int i = 0; i < 5; ++i) {
    int u = 1 + i, un = 1 + (i + 1) % 5, l = 6 + i, ln = 6 + (i + 1) % 5;
    b.add_edge(0, u);
    b.add_edge(u, un);
    b.add_edge(u, l);
    b.add_edge(u, ln);
    b.add_edge(l, ln);
    b.add_edge(11, l);
  }
  return std::move(b).build();
}

/// Quadratic residues mod 17.
inline Graph paley17() { return circulant(17, {1, 2, 4, 8}); }

/// Mycielskian of C5.
inline Graph grotzsch() {
  GraphBuilder b(11);
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    b.add_edge(i, j);
    b.add_edge(5 + i, j);
    b.add_edge(5 + j, i);
    b.add_edge(10, 5 + i);
  }
  return std::move(b).build();
}

/// 11 vertices: three triangles {0,1,x}, {2,3,x}, {4,5,x} joined through 6..10.
inline Graph folkman_33_j5_11() {
  return Graph::from_edges(11, {{0, 1}, {1, 6}, {6, 0}, {0, 7}, {7, 1}, {1, 9}, {9, 0}, {0, 10}, {10, 1},
                                {2, 3}, {3, 6}, {6, 2}, {2, 8}, {8, 3}, {3, 9}, {9, 2}, {2, 10}, {10, 3},
                                {4, 5}, {5, 7}, {7, 4}, {4, 8}, {8, 5}, {5, 9}, {9, 4}, {4, 10}, {10, 5},
                                {9, 10}, {6, 7}, {7, 8}, {8, 6}});
}

/// Singletons and pairs of {1..5}: pairs adjacent iff they meet, every
/// other pair of vertices adjacent iff disjoint.
inline Graph folkman_333_j6_15() {
  std::vector<std::vector<int>> sets;
  for (int a = 1; a <= 5; ++a) sets.push_back({a});
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) sets.push_back({a, b});
  auto meet = [](const std::vector<int>& x, const std::vector<int>& y) {
    for (int a : x)
      for (int b : y)
        if (a == b) return true;
    return false;
  };
  GraphBuilder g(static_cast<int>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool both_pairs = sets[i].size() == 2 && sets[j].size() == 2;
      if (both_pairs == meet(sets[i], sets[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return std::move(g).build();
}

}  // namespace named

inline VertexSet permute_set(const VertexSet& s, const Permutation& p) {
  VertexSet out;
  for (int v : s) out.set(p[v]);
  return out;
}

/// Least member of the orbit of s under the group generated by gens.
inline VertexSet orbit_minimum(const VertexSet& s, const std::vector<Permutation>& gens) {
  std::set<VertexSet> seen{s};
  std::vector<VertexSet> queue{s};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& p : gens) {
      VertexSet t = permute_set(queue[h], p);
      if (seen.insert(t).second) queue.push_back(t);
    }
  return *seen.begin();
}

struct ExtensionTask {
  Graph base;
  int k = 1;
  std::optional<Pattern> forbidden;
  bool independent = false;
  int workers = 1;
};

/// Graphs G, one per isomorphism class and in canonical form, with some
/// k-set S such that G - S is isomorphic to base and G avoids the pattern.
inline std::vector<Graph> k_extensions(const ExtensionTask& t) {
  const int b = t.base.order();
  const int k = t.k;
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (b + k > kMaxOrder) throw std::invalid_argument("extension exceeds maximum order");
  if (k * b + k * (k - 1) / 2 > 64) throw std::length_error("extension search space too large");
  if (t.forbidden && contains_pattern(t.base, *t.forbidden)) return {};

  // neighbourhoods admissible for a single new vertex, increasing order
  std::vector<VertexSet> single;
  auto valid_at_new = [&](const Graph& g) { return !t.forbidden || !contains_pattern_at(g, *t.forbidden, g.order() - 1); };
  auto collect = [&](auto&& self, VertexSet s, int from) -> void {
    single.push_back(s);
    for (int v = from; v < b; ++v) {
      VertexSet s2 = s;
      s2.set(v);
      if (valid_at_new(t.base.with_vertex(s2))) self(self, s2, v + 1);
    }
  };
  collect(collect, VertexSet{}, 0);
  std::sort(single.begin(), single.end());

  const auto gens = canonical_form(t.base).generators;
  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < single.size(); ++i)
    if (orbit_minimum(single[i], gens) == single[i]) firsts.push_back(i);

  std::vector<std::map<std::string, int>> found(static_cast<std::size_t>(std::max(1, t.workers)));
  parallel_for(firsts.size(), t.workers, [&](std::size_t fi, int w) {
    auto& out = found[static_cast<std::size_t>(w)];
    auto rec = [&](auto&& self, const Graph& g, int placed, std::size_t min_index) -> void {
      if (placed == k) {
        out.emplace(canonical_string(g), 0);
        return;
      }
      for (std::size_t i = min_index; i < single.size(); ++i) {
        const int prior = placed;
        const int inner_choices = (t.independent || prior == 0) ? 1 : (1 << prior);
        for (int inner = 0; inner < inner_choices; ++inner) {
          VertexSet nb = single[i];
          for (int j = 0; j < prior; ++j)
            if ((inner >> j) & 1) nb.set(b + j);
          Graph h = g.with_vertex(nb);
          if (!valid_at_new(h)) continue;
          self(self, h, placed + 1, i);
        }
      }
    };
    const std::size_t i0 = firsts[fi];
    Graph g1 = t.base.with_vertex(single[i0]);
    rec(rec, g1, 1, i0);
  });

  std::map<std::string, int> all;
  for (auto& m : found) all.merge(m);
  std::vector<Graph> result;
  for (const auto& [s, _] : all) result.push_back(decode_graph6(s));
  return result;
}

struct MinimizeOptions {
  /// Try deleting a maximum independent set before single vertices.
  bool independent_set_first = false;
  EdgeArrowOptions edge;
  int workers = 1;
};

struct MinimizeResult {
  Graph graph;
  /// kept[i] is the input index of vertex i of graph.
  std::vector<int> kept;
  bool edge_minimal = true;
  std::optional<Edge> removable_edge;
};

inline bool decided_arrows(const Graph& g, const ArrowSpec& spec, const EdgeArrowOptions& opt) {
  auto r = arrows(g, spec, opt);
  if (!r.decided()) throw std::runtime_error("arrowing undecided within time budget");
  return r.arrows();
}

/// Edge orbits under the group generated by gens, as representatives.
inline std::vector<Edge> edge_orbit_representatives(const Graph& g, const std::vector<Permutation>& gens) {
  auto edges = g.edges();
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) index[{edges[i].u, edges[i].v}] = i;
  detail::UnionFind uf(static_cast<int>(edges.size()));
  for (const auto& p : gens)
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      int a = p[edges[i].u], c = p[edges[i].v];
      uf.unite(i, index.at({std::min(a, c), std::max(a, c)}));
    }
  std::vector<Edge> reps;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (uf.find(i) == i) reps.push_back(edges[i]);
  return reps;
}

/// Greedy deletion to a vertex-minimal arrowing subgraph. Candidates are
/// tried in ascending degree (ties by index), one per Aut-orbit.
inline MinimizeResult minimize_witness(const Graph& g, const ArrowSpec& spec, const std::optional<Pattern>& forbidden,
                                       const MinimizeOptions& opt = {}) {
  if (forbidden && contains_pattern(g, *forbidden)) throw std::invalid_argument("input contains the forbidden pattern");
  if (!decided_arrows(g, spec, opt.edge)) throw std::invalid_argument("input does not arrow");

  MinimizeResult res{g, {}, true, std::nullopt};
  res.kept.resize(g.order());
  std::iota(res.kept.begin(), res.kept.end(), 0);

  auto drop = [&](VertexSet removed) {
    VertexSet keep = res.graph.vertices() - removed;
    std::vector<int> kept;
    for (int v : keep) kept.push_back(res.kept[v]);
    res.graph = res.graph.induced(keep);
    res.kept = std::move(kept);
  };

  if (opt.independent_set_first) {
    VertexSet s = maximum_independent_set(res.graph);
    if (s.any() && decided_arrows(res.graph.induced(res.graph.vertices() - s), spec, opt.edge)) drop(s);
  }

  while (true) {
    const Graph& cur = res.graph;
    auto cf = canonical_form(cur);
    std::vector<int> cand;
    for (int v = 0; v < cur.order(); ++v)
      if (cf.orbits[v] == v) cand.push_back(v);
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return cur.degree(a) < cur.degree(b); });
    std::size_t hit = parallel_first(cand.size(), opt.workers, [&](std::size_t i) {
      return decided_arrows(cur.without_vertex(cand[i]), spec, opt.edge);
    });
    if (hit == cand.size()) break;
    drop(VertexSet::singleton(cand[hit]));
  }

  auto reps = edge_orbit_representatives(res.graph, canonical_form(res.graph).generators);
  std::size_t e = parallel_first(reps.size(), opt.workers, [&](std::size_t i) {
    return decided_arrows(res.graph.without_edge(reps[i].u, reps[i].v), spec, opt.edge);
  });
  if (e < reps.size()) {
    res.edge_minimal = false;
    res.removable_edge = reps[e];
  }
  return res;
}

}  // namespace folkman
