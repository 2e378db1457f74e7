#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"

namespace folkman {

/// Forbidden-subgraph descriptor. Containment is subgraph containment, not
/// induced: J4 is found inside K4.
class Pattern {
 public:
  enum class Kind { kClique, kJGraph, kCycle4, kWheel5, kCoP2P3, kCustom };

  static Pattern clique(int k) {
    if (k < 3) throw std::invalid_argument("clique pattern needs k >= 3");
    return Pattern(Kind::kClique, k, complete(k));
  }
  /// K_k minus one edge.
  static Pattern jgraph(int k) {
    if (k < 3) throw std::invalid_argument("J pattern needs k >= 3");
    return Pattern(Kind::kJGraph, k, complete(k).without_edge(0, 1));
  }
  static Pattern cycle4() { return Pattern(Kind::kCycle4, 4, Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})); }
  /// Hub 4 joined to the rim cycle 0-1-2-3.
  static Pattern wheel5() {
    return Pattern(Kind::kWheel5, 5,
                   Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  }
  /// Complement of P2 (0-1) plus P3 (2-3-4).
  static Pattern co_p2p3() {
    Graph pp = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
    return Pattern(Kind::kCoP2P3, 5, pp.complement());
  }
  static Pattern custom(Graph g) {
    if (g.order() > 10) throw std::invalid_argument("custom pattern order must be <= 10");
    int n = g.order();
    return Pattern(Kind::kCustom, n, std::move(g));
  }

  /// Parses "K4", "J5", "C4", "W5", "coP2P3", or "g6:<graph6>".
  static Pattern parse(std::string_view text) {
    if (text == "C4") return cycle4();
    if (text == "W5") return wheel5();
    if (text == "coP2P3" || text == "co-P2P3") return co_p2p3();
    if (text.starts_with("g6:")) return custom(decode_graph6(text.substr(3)));
    if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'J')) {
      int k = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad pattern: " + std::string(text));
        k = k * 10 + (c - '0');
      }
      return text[0] == 'K' ? clique(k) : jgraph(k);
    }
    throw std::invalid_argument("bad pattern: " + std::string(text));
  }

  Kind kind() const { return kind_; }
  int order() const { return graph_.order(); }
  const Graph& graph() const { return graph_; }

  std::string name() const {
    switch (kind_) {
      case Kind::kClique: return "K" + std::to_string(param_);
      case Kind::kJGraph: return "J" + std::to_string(param_);
      case Kind::kCycle4: return "C4";
      case Kind::kWheel5: return "W5";
      case Kind::kCoP2P3: return "coP2P3";
      case Kind::kCustom: return "g6:" + encode_graph6(graph_);
    }
    return "?";
  }

  int parameter() const { return param_; }

 private:
  Pattern(Kind kind, int param, Graph g) : kind_(kind), param_(param), graph_(std::move(g)) {}

  static Graph complete(int k) {
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
    return std::move(b).build();
  }

  Kind kind_;
  int param_;
  Graph graph_;
};

namespace detail {

// Clique Q of size `need` inside cand whose common neighbourhood has >= 2 vertices.
inline bool jgraph_search(const Graph& g, VertexSet cand, VertexSet common, int need) {
  if (need == 0) return common.count() >= 2;
  while (cand.count() >= need) {
    int v = cand.first();
    cand.reset(v);
    VertexSet c2 = common & g.neighbors(v);
    if (c2.count() < need - 1 + 2) continue;
    if (jgraph_search(g, cand & g.neighbors(v), c2, need - 1)) return true;
  }
  return false;
}

/// Backtracking subgraph-monomorphism search for small patterns.
class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& target, const Graph& pattern) : g_(target), p_(pattern) {}

  /// Any embedding; if anchor_target >= 0 the embedding must use that vertex.
  bool find(int anchor_target = -1) {
    const int k = p_.order();
    if (k == 0) return true;
    if (k > g_.order()) return false;
    if (anchor_target < 0) {
      build_order(highest_degree_vertex());
      image_.assign(k, -1);
      return extend(0, VertexSet{});
    }
    // try every pattern vertex as the preimage of the anchor
    for (int p0 = 0; p0 < k; ++p0) {
      if (g_.degree(anchor_target) < p_.degree(p0)) continue;
      build_order(p0);
      image_.assign(k, -1);
      image_[p0] = anchor_target;
      if (extend(1, VertexSet::singleton(anchor_target))) return true;
    }
    return false;
  }

 private:
  int highest_degree_vertex() const {
    int best = 0;
    for (int v = 1; v < p_.order(); ++v)
      if (p_.degree(v) > p_.degree(best)) best = v;
    return best;
  }

  void build_order(int anchor) {
    const int k = p_.order();
    order_.assign(1, anchor);
    VertexSet placed = VertexSet::singleton(anchor);
    while (static_cast<int>(order_.size()) < k) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (placed.test(v)) continue;
        int links = (p_.neighbors(v) & placed).count();
        if (links > best_links || (links == best_links && p_.degree(v) > p_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed.set(best);
    }
  }

  bool extend(int depth, VertexSet used) {
    const int k = p_.order();
    if (depth == k) return true;
    const int pv = order_[depth];
    VertexSet cand = g_.vertices() - used;
    for (int q : p_.neighbors(pv))
      if (image_[q] >= 0) cand &= g_.neighbors(image_[q]);
    const int need = p_.degree(pv);
    for (int t : cand) {
      if (g_.degree(t) < need) continue;
      image_[pv] = t;
      VertexSet u2 = used;
      u2.set(t);
      if (extend(depth + 1, u2)) return true;
    }
    image_[pv] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& p_;
  std::vector<int> order_;
  std::vector<int> image_;
};

}  // namespace detail

/// True iff g has a (not necessarily induced) subgraph isomorphic to p.
inline bool contains_pattern(const Graph& g, const Pattern& p) {
  if (p.order() > g.order()) return false;
  switch (p.kind()) {
    case Pattern::Kind::kClique:
      return has_clique(g, g.vertices(), p.parameter());
    case Pattern::Kind::kJGraph:
      return detail::jgraph_search(g, g.vertices(), g.vertices(), p.parameter() - 2);
    case Pattern::Kind::kCycle4:
      for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
          if ((g.neighbors(u) & g.neighbors(v)).count() >= 2) return true;
      return false;
    default:
      return detail::SubgraphSearch(g, p.graph()).find();
  }
}

/// True iff g has a copy of p that uses vertex v.
inline bool contains_pattern_at(const Graph& g, const Pattern& p, int v) {
  if (p.order() > g.order()) return false;
  switch (p.kind()) {
    case Pattern::Kind::kClique:
      return has_clique(g, g.neighbors(v), p.parameter() - 1);
    case Pattern::Kind::kJGraph: {
      VertexSet closed = g.neighbors(v);
      closed.set(v);
      return detail::jgraph_search(g, closed, g.vertices(), p.parameter() - 2);
    }
    case Pattern::Kind::kCycle4:
      for (int u = 0; u < g.order(); ++u)
        if (u != v && (g.neighbors(u) & g.neighbors(v)).count() >= 2) return true;
      return false;
    default:
      return detail::SubgraphSearch(g, p.graph()).find(v);
  }
}

}  // namespace folkman
