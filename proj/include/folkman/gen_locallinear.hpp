#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "folkman/canon.hpp"
#include "folkman/graph.hpp"
#include "folkman/parallel.hpp"
#include "folkman/pattern.hpp"

namespace folkman {

/// Every edge lies in exactly one triangle.
inline bool is_locally_linear(const Graph& g) {
  for (const auto& e : g.edges())
    if ((g.neighbors(e.u) & g.neighbors(e.v)).count() != 1) return false;
  return true;
}

namespace detail {

inline bool has_c4_at(const Graph& g, int v) {
  for (int u = 0; u < g.order(); ++u)
    if (u != v && (g.neighbors(u) & g.neighbors(v)).count() >= 2) return true;
  return false;
}

/// Pairwise non-adjacent with pairwise disjoint neighbourhoods.
inline bool is_addable_triple(const Graph& g, int a, int b, int c, bool c4free) {
  const int t[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (g.adjacent(t[i], t[j]) || (g.neighbors(t[i]) & g.neighbors(t[j])).any()) return false;
  if (!c4free) return true;
  Graph h = g.with_edge(a, b).with_edge(a, c).with_edge(b, c);
  return !has_c4_at(h, a) && !has_c4_at(h, b) && !has_c4_at(h, c);
}

}  // namespace detail

/// Maximal locally linear: no triangle on three vertices can be added
/// while staying locally linear (and C4-free when flagged).
inline bool is_mll(const Graph& g, bool c4free = false) {
  if (!is_locally_linear(g)) throw std::invalid_argument("graph is not locally linear");
  if (c4free && contains_pattern(g, Pattern::cycle4())) throw std::invalid_argument("graph contains C4");
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b) || (g.neighbors(a) & g.neighbors(b)).any()) continue;
      for (int c = b + 1; c < n; ++c)
        if (detail::is_addable_triple(g, a, b, c, c4free)) return false;
    }
  return true;
}

struct LLTask {
  int order = 1;
  bool c4free = false;
  bool maximal_only = false;
  /// At full order, test maximality before canonicity.
  bool maximality_first = false;
  int workers = 1;
};

namespace detail {

class LLGenerator {
 public:
  LLGenerator(const LLTask& t, std::function<void(const Graph&)> sink) : t_(t), sink_(std::move(sink)) {}

  std::uint64_t run_subtree(int part, int parts, int split_depth) {
    part_ = part;
    parts_ = parts;
    split_depth_ = split_depth;
    visit(Graph(1));
    return emitted_;
  }

 private:
  using Key = std::pair<int, std::vector<int>>;

  static Key key(const Graph& g, int v) {
    std::vector<int> sig;
    for (int w : g.neighbors(v)) sig.push_back(g.degree(w));
    std::sort(sig.begin(), sig.end());
    return {g.degree(v), std::move(sig)};
  }

  // Canonical deletion: least (degree, sorted neighbour degrees), then least canonical label.
  static bool accepted(const Graph& g, int v, CanonicalForm* cf_out) {
    const Key kv = key(g, v);
    if (g.degree(v) > g.min_degree()) return false;
    int ties = 0;
    for (int u = 0; u < g.order(); ++u) {
      if (g.degree(u) != g.degree(v)) continue;
      Key ku = key(g, u);
      if (ku < kv) return false;
      if (ku == kv) ++ties;
    }
    if (ties == 1) return true;
    CanonicalForm cf = canonical_form(g);
    int best = -1;
    for (int u = 0; u < g.order(); ++u)
      if (g.degree(u) == g.degree(v) && key(g, u) == kv && (best < 0 || cf.labeling[u] < cf.labeling[best])) best = u;
    bool ok = cf.orbits[best] == cf.orbits[v];
    if (ok && cf_out) *cf_out = std::move(cf);
    return ok;
  }

  void visit(const Graph& g) {
    if (g.order() == split_depth_ && (counter_++ % static_cast<std::uint64_t>(parts_)) != static_cast<std::uint64_t>(part_))
      return;
    if (g.order() == t_.order) {
      if (t_.maximal_only && !t_.maximality_first && !is_mll(g, t_.c4free)) return;
      ++emitted_;
      sink_(g);
      return;
    }
    const int m = g.order();
    int limit = 2 * m;
    for (int u = 0; u < m; ++u) limit = std::min(limit, g.degree(u) + 2);
    const bool dedupe = canonical_form(g).group_order > 1;
    std::set<std::string> seen;
    std::vector<std::pair<int, int>> pairs;
    choose(g, 0, VertexSet{}, pairs, limit, dedupe, seen);
  }

  bool compatible(const Graph& g, VertexSet chosen, int u) const {
    if ((g.neighbors(u) & chosen).any()) return false;
    if (t_.c4free)
      for (int s : chosen)
        if ((g.neighbors(u) & g.neighbors(s)).any()) return false;
    return true;
  }

  // A path u-x-y-w of length 3 in g.
  static bool has_3path(const Graph& g, int u, int w) {
    for (int x : g.neighbors(u))
      if (x != w && (g.neighbors(x) & g.neighbors(w) - VertexSet::singleton(u)).any()) return true;
    return false;
  }

  void choose(const Graph& g, int from, VertexSet chosen, std::vector<std::pair<int, int>>& pairs, int limit, bool dedupe,
              std::set<std::string>& seen) {
    const int m = g.order();
    int u = from;
    while (u < m && chosen.test(u)) ++u;
    if (u >= m) {
      finish(g, pairs, dedupe, seen);
      return;
    }
    choose(g, u + 1, chosen, pairs, limit, dedupe, seen);
    if (static_cast<int>(chosen.count()) + 2 > limit) return;
    if (!compatible(g, chosen, u)) return;
    VertexSet with_u = chosen;
    with_u.set(u);
    for (int w = u + 1; w < m; ++w) {
      if (chosen.test(w) || g.adjacent(u, w)) continue;
      if ((g.neighbors(u) & g.neighbors(w)).any()) continue;
      if (!compatible(g, with_u, w)) continue;
      if (t_.c4free && has_3path(g, u, w)) continue;
      VertexSet next = with_u;
      next.set(w);
      pairs.emplace_back(u, w);
      choose(g, u + 1, next, pairs, limit, dedupe, seen);
      pairs.pop_back();
    }
  }

  void finish(const Graph& p, const std::vector<std::pair<int, int>>& pairs, bool dedupe, std::set<std::string>& seen) {
    const int m = p.order();
    GraphBuilder b(m + 1);
    for (const auto& e : p.edges()) b.add_edge(e.u, e.v);
    for (auto [x, y] : pairs) {
      b.add_edge(x, y);
      b.add_edge(m, x);
      b.add_edge(m, y);
    }
    Graph g = std::move(b).build();
    if (g.order() == t_.order && t_.maximal_only && t_.maximality_first && !is_mll(g, t_.c4free)) return;
    CanonicalForm cf;
    if (!accepted(g, m, &cf)) return;
    if (dedupe) {
      std::string c = cf.graph6.empty() ? canonical_string(g) : cf.graph6;
      if (!seen.insert(std::move(c)).second) return;
    }
    visit(g);
  }

  const LLTask& t_;
  std::function<void(const Graph&)> sink_;
  int part_ = 0, parts_ = 1, split_depth_ = 0;
  std::uint64_t counter_ = 0;
  std::uint64_t emitted_ = 0;
};

}  // namespace detail

/// Streams one representative per isomorphism class of locally linear
/// (optionally C4-free, optionally maximal) graphs of the given order.
inline std::uint64_t generate_ll(const LLTask& t, const std::function<void(const Graph&)>& sink) {
  if (t.order < 1) throw std::invalid_argument("order must be >= 1");
  if (t.order > kMaxOrder) throw std::invalid_argument("order exceeds maximum");
  if (t.workers <= 1) return detail::LLGenerator(t, sink).run_subtree(0, 1, 0);
  std::mutex mu;
  auto locked = [&](const Graph& g) {
    std::lock_guard lock(mu);
    sink(g);
  };
  const int parts = t.workers * 8;
  const int depth = std::max(1, t.order - 3);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(parts));
  parallel_for(static_cast<std::size_t>(parts), t.workers, [&](std::size_t i, int) {
    counts[i] = detail::LLGenerator(t, locked).run_subtree(static_cast<int>(i), parts, depth);
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

struct LLCounts {
  int order = 0;
  std::uint64_t ll = 0;
  std::uint64_t mll = 0;
};

/// LL and MLL counts (C4-free variants when flagged) at one order.
inline LLCounts count_ll(int n, bool c4free, int workers = 1) {
  LLCounts c{n, 0, 0};
  LLTask t{n, c4free, false, false, workers};
  std::mutex mu;
  generate_ll(t, [&](const Graph& g) {
    bool m = is_mll(g, c4free);
    std::lock_guard lock(mu);
    ++c.ll;
    c.mll += m;
  });
  return c;
}

}  // namespace folkman
