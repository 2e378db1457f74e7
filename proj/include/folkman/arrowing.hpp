#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/graph.hpp"
#include "folkman/invariants.hpp"
#include "folkman/sat.hpp"

namespace folkman {

enum class ArrowMode { kVertex, kEdge };

/// Target tuple (a_1,...,a_k) with a mode.
struct ArrowSpec {
  std::vector<int> targets;
  ArrowMode mode = ArrowMode::kVertex;

  static ArrowSpec vertex(std::vector<int> t) { return validated({std::move(t), ArrowMode::kVertex}); }
  static ArrowSpec edge33() { return {{3, 3}, ArrowMode::kEdge}; }

  /// Accepts "3,3", "(2,2,3)", "(3,3)^v", "(3,3)^e".
  static ArrowSpec parse(std::string_view text) {
    ArrowSpec s;
    if (text.ends_with("^v")) {
      text.remove_suffix(2);
    } else if (text.ends_with("^e")) {
      s.mode = ArrowMode::kEdge;
      text.remove_suffix(2);
    }
    if (text.starts_with('(') && text.ends_with(')')) text = text.substr(1, text.size() - 2);
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw std::invalid_argument("bad arrow spec");
      s.targets.push_back(std::stoi(cur));
      cur.clear();
    };
    for (char c : text) {
      if (c == ',') flush();
      else if (c >= '0' && c <= '9') cur += c;
      else if (c != ' ') throw std::invalid_argument("bad arrow spec: " + std::string(text));
    }
    flush();
    return validated(std::move(s));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < targets.size(); ++i) out += (i ? "," : "") + std::to_string(targets[i]);
    return out + (mode == ArrowMode::kVertex ? ")^v" : ")^e");
  }

  static ArrowSpec validated(ArrowSpec s) {
    if (s.targets.empty()) throw std::invalid_argument("arrow spec needs at least one target");
    if (s.targets.size() > 16) throw std::invalid_argument("at most 16 colours supported");
    for (int a : s.targets)
      if (a < 1) throw std::invalid_argument("targets must be >= 1");
    if (s.mode == ArrowMode::kEdge && s.targets != std::vector<int>{3, 3})
      throw std::invalid_argument("edge arrowing supports (3,3) only");
    return s;
  }
};

/// Colour of every vertex, or of every edge in Graph::edges() order.
struct Coloring {
  ArrowMode mode = ArrowMode::kVertex;
  std::vector<int> colour;
};

enum class Decision { kArrows, kDoesNotArrow, kUndecided };

struct ArrowResult {
  Decision decision = Decision::kUndecided;
  /// Good colouring when decision == kDoesNotArrow.
  std::optional<Coloring> witness;
  std::vector<std::string> notes;

  bool arrows() const { return decision == Decision::kArrows; }
  bool decided() const { return decision != Decision::kUndecided; }
};

/// Every colour class i is K_{a_i}-free.
inline bool is_good_vertex_coloring(const Graph& g, const std::vector<int>& targets, const Coloring& c) {
  if (c.mode != ArrowMode::kVertex || static_cast<int>(c.colour.size()) != g.order()) return false;
  std::vector<VertexSet> cls(targets.size());
  for (int v = 0; v < g.order(); ++v) {
    int k = c.colour[v];
    if (k < 0 || k >= static_cast<int>(targets.size())) return false;
    cls[k].set(v);
  }
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (has_clique(g, cls[i], targets[i])) return false;
  return true;
}

/// No monochromatic triangle under a 2-colouring of Graph::edges().
inline bool is_good_edge_coloring_33(const Graph& g, const Coloring& c) {
  auto edges = g.edges();
  if (c.mode != ArrowMode::kEdge || c.colour.size() != edges.size()) return false;
  std::vector<std::vector<int>> col(g.order(), std::vector<int>(g.order(), -1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (c.colour[i] != 0 && c.colour[i] != 1) return false;
    col[edges[i].u][edges[i].v] = col[edges[i].v][edges[i].u] = c.colour[i];
  }
  for (auto [a, b, t] : triangles(g))
    if (col[a][b] == col[a][t] && col[a][b] == col[b][t]) return false;
  return true;
}

namespace detail {

/// Order: BFS from a maximum-degree vertex (smallest index on ties),
/// restarting the same way in each further component.
inline std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  VertexSet left = g.vertices();
  while (left.any()) {
    int root = -1;
    for (int v : left)
      if (root < 0 || g.degree(v) > g.degree(root)) root = v;
    std::vector<int> queue{root};
    left.reset(root);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : g.neighbors(queue[h]) & left) {
        left.reset(w);
        queue.push_back(w);
      }
    order.insert(order.end(), queue.begin(), queue.end());
  }
  return order;
}

class VertexArrowSearch {
 public:
  VertexArrowSearch(const Graph& g, std::vector<int> targets)
      : g_(g), a_(std::move(targets)), k_(static_cast<int>(a_.size())), order_(bfs_order(g)) {}

  /// Finds a good colouring; all targets must be >= 2.
  std::optional<std::vector<int>> find_good() {
    State s;
    s.domain.assign(g_.order(), static_cast<std::uint32_t>((std::uint64_t{1} << k_) - 1));
    s.colour.assign(g_.order(), -1);
    s.cls.assign(k_, VertexSet{});
    s.uncoloured = g_.vertices();
    if (dfs(s, 0)) return result_;
    return std::nullopt;
  }

 private:
  struct State {
    std::vector<std::uint32_t> domain;
    std::vector<int> colour;
    std::vector<VertexSet> cls;
    VertexSet uncoloured;
  };

  bool assign(State& s, int v, int c) const {
    std::vector<std::pair<int, int>> queue{{v, c}};
    auto remove = [&](int z, int i) {
      std::uint32_t& d = s.domain[z];
      if (!(d & (1U << i))) return true;
      d &= ~(1U << i);
      if (d == 0) return false;
      if ((d & (d - 1)) == 0) queue.emplace_back(z, __builtin_ctz(d));
      return true;
    };
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto [x, i] = queue[h];
      if (s.colour[x] >= 0) {
        if (s.colour[x] != i) return false;
        continue;
      }
      if (!(s.domain[x] & (1U << i))) return false;
      const VertexSet same = g_.neighbors(x) & s.cls[i];
      if (a_[i] >= 4 && has_clique(g_, same, a_[i] - 1)) return false;
      s.colour[x] = i;
      s.cls[i].set(x);
      s.uncoloured.reset(x);
      if (a_[i] == 2) {
        for (int z : g_.neighbors(x) & s.uncoloured)
          if (!remove(z, i)) return false;
      } else if (a_[i] == 3) {
        for (int w : same)
          for (int z : g_.neighbors(x) & g_.neighbors(w) & s.uncoloured)
            if (!remove(z, i)) return false;
      }
    }
    return true;
  }

  bool dfs(const State& s, std::size_t pos) {
    while (pos < order_.size() && s.colour[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      result_ = s.colour;
      return true;
    }
    const int v = order_[pos];
    for (int c = 0; c < k_; ++c) {
      if (!(s.domain[v] & (1U << c))) continue;
      if (s.cls[c].empty()) {
        bool twin = false;
        for (int e = 0; e < c && !twin; ++e) twin = a_[e] == a_[c] && s.cls[e].empty();
        if (twin) continue;
      }
      State t = s;
      if (assign(t, v, c) && dfs(t, pos + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> a_;
  int k_;
  std::vector<int> order_;
  std::vector<int> result_;
};

}  // namespace detail

/// Decides g -> (a_1,...,a_k)^v. Entries equal to 1 force an empty colour
/// class and are dropped before the search.
inline ArrowResult arrows_vertex(const Graph& g, const ArrowSpec& spec) {
  if (spec.mode != ArrowMode::kVertex) throw std::invalid_argument("arrows_vertex needs a vertex spec");
  ArrowSpec::validated(spec);
  ArrowResult out;
  std::vector<int> kept;
  std::vector<int> original;
  for (std::size_t i = 0; i < spec.targets.size(); ++i) {
    if (spec.targets[i] == 1) continue;
    kept.push_back(spec.targets[i]);
    original.push_back(static_cast<int>(i));
  }
  if (kept.size() != spec.targets.size())
    out.notes.push_back("targets equal to 1 removed: those colours cannot be used");
  if (kept.empty()) {
    if (g.order() > 0) {
      out.decision = Decision::kArrows;
    } else {
      out.decision = Decision::kDoesNotArrow;
      out.witness = Coloring{ArrowMode::kVertex, {}};
    }
    return out;
  }
  auto good = detail::VertexArrowSearch(g, kept).find_good();
  if (!good) {
    out.decision = Decision::kArrows;
    return out;
  }
  Coloring c{ArrowMode::kVertex, std::move(*good)};
  for (int& x : c.colour) x = original[x];
  if (!is_good_vertex_coloring(g, spec.targets, c)) throw std::logic_error("vertex witness failed verification");
  out.decision = Decision::kDoesNotArrow;
  out.witness = std::move(c);
  return out;
}

/// Clauses over edge variables; variable i (1-based) is edges[i-1].
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<Edge> edges;
};

/// Two clauses per triangle forbidding a monochromatic triangle.
/// Satisfiable iff g does not arrow (3,3)^e.
inline CnfFormula encode_cnf_33(const Graph& g) {
  CnfFormula f;
  f.edges = g.edges();
  f.num_vars = static_cast<int>(f.edges.size());
  std::vector<std::vector<int>> index(g.order(), std::vector<int>(g.order(), 0));
  for (std::size_t i = 0; i < f.edges.size(); ++i)
    index[f.edges[i].u][f.edges[i].v] = index[f.edges[i].v][f.edges[i].u] = static_cast<int>(i) + 1;
  for (auto [a, b, c] : triangles(g)) {
    int x = index[a][b], y = index[a][c], z = index[b][c];
    f.clauses.push_back({x, y, z});
    f.clauses.push_back({-x, -y, -z});
  }
  return f;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

struct EdgeArrowOptions {
  std::chrono::milliseconds timeout{60000};
};

/// Decides g -> (3,3)^e through satisfiability of encode_cnf_33(g).
inline ArrowResult arrows_edge_33(const Graph& g, const EdgeArrowOptions& opt = {}) {
  ArrowResult out;
  CnfFormula f = encode_cnf_33(g);
  sat::Solver solver(f.num_vars);
  bool consistent = true;
  for (const auto& c : f.clauses) consistent = solver.add_clause(c) && consistent;
  // swapping the two colours maps good colourings to good colourings
  if (f.num_vars > 0) consistent = solver.add_clause({1}) && consistent;
  sat::Result r = consistent ? solver.solve(sat::Clock::now() + opt.timeout) : sat::Result::kUnsat;
  if (r == sat::Result::kUnknown) {
    out.notes.push_back("solver timeout");
    return out;
  }
  if (r == sat::Result::kUnsat) {
    out.decision = Decision::kArrows;
    return out;
  }
  Coloring c{ArrowMode::kEdge, std::vector<int>(f.edges.size())};
  for (int i = 0; i < f.num_vars; ++i) c.colour[i] = solver.model_value(i + 1) ? 1 : 0;
  if (!is_good_edge_coloring_33(g, c)) throw std::logic_error("edge witness failed verification");
  out.decision = Decision::kDoesNotArrow;
  out.witness = std::move(c);
  return out;
}

/// Dispatches on spec.mode.
inline ArrowResult arrows(const Graph& g, const ArrowSpec& spec, const EdgeArrowOptions& opt = {}) {
  return spec.mode == ArrowMode::kVertex ? arrows_vertex(g, spec) : arrows_edge_33(g, opt);
}

class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exhaustive check over all colourings: k^n <= 1e8 vertex colourings or
/// 2^|E| <= 1e8 edge colourings.
inline bool brute_force_arrows(const Graph& g, const ArrowSpec& spec) {
  constexpr double kLimit = 1e8;
  if (spec.mode == ArrowMode::kVertex) {
    const int k = static_cast<int>(spec.targets.size());
    const int n = g.order();
    if (n * std::log10(static_cast<double>(k)) > 8.0 + 1e-12) throw InstanceTooLarge("too many vertex colourings");
    Coloring c{ArrowMode::kVertex, std::vector<int>(n, 0)};
    while (true) {
      if (is_good_vertex_coloring(g, spec.targets, c)) return false;
      int i = 0;
      while (i < n && ++c.colour[i] == k) c.colour[i++] = 0;
      if (i == n) return true;
    }
  }
  const auto m = static_cast<int>(g.size());
  if (std::pow(2.0, m) > kLimit) throw InstanceTooLarge("too many edge colourings");
  auto edges = g.edges();
  auto tris = triangles(g);
  std::vector<std::vector<int>> index(g.order(), std::vector<int>(g.order(), -1));
  for (int i = 0; i < m; ++i) index[edges[i].u][edges[i].v] = index[edges[i].v][edges[i].u] = i;
  std::vector<std::array<int, 3>> tri_edges;
  for (auto [a, b, c] : tris) tri_edges.push_back({index[a][b], index[a][c], index[b][c]});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool good = true;
    for (auto [x, y, z] : tri_edges) {
      int s = static_cast<int>((mask >> x) & 1U) + static_cast<int>((mask >> y) & 1U) + static_cast<int>((mask >> z) & 1U);
      if (s == 0 || s == 3) {
        good = false;
        break;
      }
    }
    if (good) return false;
  }
  return true;
}

}  // namespace folkman
