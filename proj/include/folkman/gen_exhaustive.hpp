#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "folkman/canon.hpp"
#include "folkman/graph.hpp"
#include "folkman/invariants.hpp"
#include "folkman/parallel.hpp"
#include "folkman/pattern.hpp"

namespace folkman {

struct GenFilter {
  int order = 1;
  /// No pattern means all graphs.
  std::optional<Pattern> forbidden;
  bool require_2connected = false;
  bool maximal_only = false;
};

/// Nodes of the given depth (graph order) are numbered in visiting order;
/// only those with number % parts == part are expanded.
struct PrefixSplit {
  int depth = 0;
  int part = 0;
  int parts = 1;
};

struct GenOptions {
  PrefixSplit split;
  /// Record visited nodes and check every output's canonical parent.
  bool audit = false;
  int workers = 1;
};

struct GenStats {
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
  std::uint64_t audit_failures = 0;
};

/// True iff adding any non-edge creates p.
inline bool is_maximal_free(const Graph& g, const Pattern& p) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && !contains_pattern_at(g.with_edge(u, v), p, u)) return false;
  return true;
}

namespace detail {

/// Canonical deletion for vertex augmentation: among vertices maximizing
/// (degree, neighbour degree sum), the one with least canonical label.
/// Returns true iff v lies in its Aut(G)-orbit.
inline bool is_canonical_max_degree_addition(const Graph& g, int v) {
  const int n = g.order();
  auto key = [&](int u) {
    int s = 0;
    for (int w : g.neighbors(u)) s += g.degree(w);
    return std::pair{g.degree(u), s};
  };
  const auto kv = key(v);
  int ties = 0;
  for (int u = 0; u < n; ++u) {
    auto ku = key(u);
    if (ku > kv) return false;
    if (ku == kv) ++ties;
  }
  if (ties == 1) return true;
  CanonicalForm cf = canonical_form(g);
  int best = -1;
  for (int u = 0; u < n; ++u)
    if (key(u) == kv && (best < 0 || cf.labeling[u] < cf.labeling[best])) best = u;
  return cf.orbits[best] == cf.orbits[v];
}

/// Least member of the orbit of a subset under the group generated by gens.
inline bool is_orbit_minimal(const VertexSet& s, const std::vector<Permutation>& gens) {
  if (gens.empty()) return true;
  auto image = [](const VertexSet& x, const Permutation& p) {
    VertexSet out;
    for (int v : x) out.set(p[v]);
    return out;
  };
  for (const auto& p : gens)
    if (image(s, p) < s) return false;
  std::set<VertexSet> seen{s};
  std::vector<VertexSet> queue{s};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& p : gens) {
      VertexSet t = image(queue[h], p);
      if (t < s) return false;
      if (seen.insert(t).second) queue.push_back(t);
    }
  return true;
}

class ExhaustiveGenerator {
 public:
  ExhaustiveGenerator(const GenFilter& f, const GenOptions& opt, std::function<void(const Graph&)> sink)
      : f_(f), opt_(opt), sink_(std::move(sink)) {}

  GenStats run() {
    if (f_.order < 1) throw std::invalid_argument("order must be >= 1");
    if (f_.order > kMaxOrder) throw std::invalid_argument("order exceeds maximum");
    if (f_.forbidden && f_.forbidden->order() < 3) throw std::invalid_argument("pattern order must be >= 3");
    if (opt_.split.parts < 1 || opt_.split.part < 0 || opt_.split.part >= opt_.split.parts)
      throw std::invalid_argument("bad prefix split");
    split_depth_ = opt_.split.parts > 1 ? std::clamp(opt_.split.depth, 1, f_.order) : 0;
    if (opt_.audit) visited_.resize(f_.order + 1);
    visit(Graph(1));
    return stats_;
  }

 private:
  void visit(const Graph& g) {
    const int n = g.order();
    if (n == split_depth_ && (split_counter_++ % opt_.split.parts) != static_cast<std::uint64_t>(opt_.split.part))
      return;
    ++stats_.nodes;
    if (opt_.audit) visited_[n].insert(canonical_string(g));
    if (n == f_.order) {
      emit(g);
      return;
    }
    const CanonicalForm cf = canonical_form(g);
    const int need = g.max_degree();
    VertexSet s;
    extend(g, cf.generators, need, 0, s);
  }

  void extend(const Graph& p, const std::vector<Permutation>& gens, int need, int from, VertexSet& s) {
    const int m = p.order();
    if (s.count() + (m - from) < need) return;
    if (from == m) {
      if (!is_orbit_minimal(s, gens)) return;
      Graph g = p.with_vertex(s);
      if (!is_canonical_max_degree_addition(g, m)) return;
      visit(g);
      return;
    }
    extend(p, gens, need, from + 1, s);
    s.set(from);
    if (!f_.forbidden || !contains_pattern_at(p.with_vertex(s), *f_.forbidden, m)) extend(p, gens, need, from + 1, s);
    s.reset(from);
  }

  void emit(const Graph& g) {
    if (f_.require_2connected && !is_two_connected(g)) return;
    if (f_.maximal_only && f_.forbidden && !is_maximal_free(g, *f_.forbidden)) return;
    if (f_.maximal_only && !f_.forbidden && g.size() != static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2) return;
    if (opt_.audit && g.order() > 1) {
      // recompute the canonical deletion vertex and look for its parent
      int del = -1;
      for (int v = 0; v < g.order() && del < 0; ++v)
        if (is_canonical_max_degree_addition(g, v)) del = v;
      if (del < 0 || !visited_[g.order() - 1].contains(canonical_string(g.without_vertex(del))))
        ++stats_.audit_failures;
    }
    ++stats_.emitted;
    sink_(g);
  }

  const GenFilter& f_;
  const GenOptions& opt_;
  std::function<void(const Graph&)> sink_;
  GenStats stats_;
  int split_depth_ = 0;
  std::uint64_t split_counter_ = 0;
  std::vector<std::set<std::string>> visited_;
};

}  // namespace detail

/// Streams one representative per isomorphism class of graphs of order
/// f.order avoiding f.forbidden, pruning as soon as the pattern appears.
/// With workers > 1 the sink is called under a lock, in no fixed order.
inline GenStats generate_free_graphs(const GenFilter& f, const std::function<void(const Graph&)>& sink,
                                     const GenOptions& opt = {}) {
  if (opt.workers <= 1) return detail::ExhaustiveGenerator(f, opt, sink).run();
  if (opt.split.parts > 1) throw std::invalid_argument("prefix split and workers cannot be combined");
  std::mutex m;
  auto locked = [&](const Graph& g) {
    std::lock_guard lock(m);
    sink(g);
  };
  const int parts = opt.workers * 8;
  std::vector<GenStats> stats(static_cast<std::size_t>(parts));
  parallel_for(static_cast<std::size_t>(parts), opt.workers, [&](std::size_t i, int) {
    GenOptions sub = opt;
    sub.workers = 1;
    sub.split = {std::max(1, f.order - 2), static_cast<int>(i), parts};
    stats[i] = detail::ExhaustiveGenerator(f, sub, locked).run();
  });
  GenStats total;
  for (const auto& s : stats) {
    total.nodes += s.nodes;
    total.emitted += s.emitted;
    total.audit_failures += s.audit_failures;
  }
  return total;
}

inline std::vector<Graph> all_free_graphs(const GenFilter& f, const GenOptions& opt = {}) {
  std::vector<Graph> out;
  generate_free_graphs(f, [&](const Graph& g) { out.push_back(g); }, opt);
  return out;
}

}  // namespace folkman
