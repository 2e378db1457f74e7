#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/canon.hpp"
#include "folkman/constructions.hpp"
#include "folkman/gen_exhaustive.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"
#include "folkman/parallel.hpp"
#include "folkman/pattern.hpp"
#include "folkman/sat.hpp"

namespace folkman {

struct PropertyVerdict {
  bool pass = true;
  std::string reason;
  /// Offending vertices (a K4, a vertex and its bad neighbourhood subgraph, ...).
  std::vector<int> vertices;
  std::optional<Edge> edge;
};

struct PropertyReport {
  std::array<PropertyVerdict, 5> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Every edge lies in at least two triangles.
inline std::optional<Edge> edge_in_fewer_than_two_triangles(const Graph& g) {
  for (const auto& e : g.edges())
    if ((g.neighbors(e.u) & g.neighbors(e.v)).count() < 2) return e;
  return std::nullopt;
}

/// Every vertex of every induced neighbourhood has degree at least two there.
inline std::optional<Edge> low_degree_in_neighbourhood(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if ((g.neighbors(v) & g.neighbors(u)).count() < 2) return Edge{std::min(u, v), std::max(u, v)};
  return std::nullopt;
}

/// Necessary conditions on a minimal (3,3)^e-arrowing co-(P2+P3)-free graph.
/// Passing says nothing about minimality or arrowing.
inline PropertyReport check_minimal_cop2p3_properties(const Graph& g) {
  if (contains_pattern(g, Pattern::co_p2p3())) throw std::invalid_argument("graph contains co-(P2+P3)");
  PropertyReport r;
  const int n = g.order();

  if (auto k4 = find_clique(g, g.vertices(), 4); !k4.empty()) r.items[0] = {false, "contains K4", k4, std::nullopt};

  if (auto e = edge_in_fewer_than_two_triangles(g))
    r.items[1] = {false, "edge in fewer than two triangles", {}, e};

  for (int u = 0; u < n && r.items[2].pass; ++u) {
    Graph nb = g.induced(g.neighbors(u));
    std::vector<int> members;
    for (int v : g.neighbors(u)) members.push_back(v);
    auto lift = [&](const std::vector<int>& local) {
      std::vector<int> out{u};
      for (int x : local) out.push_back(members[x]);
      return out;
    };
    if (auto t = find_clique(nb, nb.vertices(), 3); !t.empty()) {
      r.items[2] = {false, "neighbourhood contains K3", lift(t), std::nullopt};
      break;
    }
    for (int a = 0; a < nb.order(); ++a)
      for (int b = a + 1; b < nb.order(); ++b) {
        VertexSet common = nb.neighbors(a) & nb.neighbors(b);
        if (common.count() >= 2 && r.items[2].pass) {
          int c = common.first();
          int d = (common - VertexSet::singleton(c)).first();
          r.items[2] = {false, "neighbourhood contains C4", lift({a, c, b, d}), std::nullopt};
        }
      }
  }

  for (int u = 0; u < n && r.items[3].pass; ++u) {
    const VertexSet x = g.vertices() - g.neighbors(u) - VertexSet::singleton(u);
    std::vector<std::pair<Edge, VertexSet>> apexes;
    for (int a : g.neighbors(u))
      for (int b : g.neighbors(u) & g.neighbors(a))
        if (a < b) apexes.push_back({{a, b}, g.neighbors(a) & g.neighbors(b) & x});
    for (std::size_t i = 0; i < apexes.size() && r.items[3].pass; ++i) {
      if (apexes[i].second.empty()) {
        r.items[3] = {false, "neighbourhood edge without apex outside the closed neighbourhood", {u}, apexes[i].first};
        break;
      }
      for (std::size_t j = i + 1; j < apexes.size(); ++j)
        if (VertexSet shared = apexes[i].second & apexes[j].second; shared.any()) {
          r.items[3] = {false, "two neighbourhood edges share an apex", {u, shared.first()}, apexes[i].first};
          break;
        }
    }
  }

  for (int u = 0; u < n; ++u)
    if (g.degree(u) < 8) {
      r.items[4] = {false, "degree " + std::to_string(g.degree(u)) + " < 8", {u}, std::nullopt};
      break;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Apex extension sweep

/// colour[i] in {0,1} for H.edges()[i]. True iff the edges to a new
/// universal vertex can be 2-coloured without a monochromatic triangle,
/// decided through the (3,3)^e encoding of the cone with the interior fixed.
inline bool apex_extendable(const Graph& h, const std::vector<int>& colour) {
  const Graph c = cone(h);
  CnfFormula f = encode_cnf_33(c);
  sat::Solver s(f.num_vars);
  bool ok = true;
  for (const auto& cl : f.clauses) ok = s.add_clause(cl) && ok;
  const auto inner = h.edges();
  // interior edges keep their relative order inside the cone's edge list
  std::size_t k = 0;
  for (std::size_t i = 0; i < f.edges.size() && ok; ++i) {
    const Edge& e = f.edges[i];
    if (e.v == h.order()) continue;
    if (k >= inner.size() || inner[k] != e) throw std::logic_error("cone edge order mismatch");
    const int var = static_cast<int>(i) + 1;
    ok = s.add_clause({colour[k] ? var : -var}) && ok;
    ++k;
  }
  return ok && s.solve(std::nullopt) == sat::Result::kSat;
}

/// Direct enumeration of all 2^n apex colourings.
inline bool apex_extendable_brute(const Graph& h, const std::vector<int>& colour) {
  const int n = h.order();
  if (n > 24) throw std::invalid_argument("too many apex edges for enumeration");
  const auto edges = h.edges();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    bool good = true;
    for (std::size_t i = 0; i < edges.size() && good; ++i) {
      const int c = colour[i];
      const int cu = (m >> edges[i].u) & 1U, cv = (m >> edges[i].v) & 1U;
      good = !(cu == c && cv == c);
    }
    if (good) return true;
  }
  return false;
}

struct MinDegreeRow {
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t colourings_checked = 0;
  /// Non-extendable colourings counted with multiplicity (whole orbits).
  std::uint64_t non_extendable = 0;
  bool all_extendable = true;
  std::optional<Graph> witness_graph;
  std::vector<int> witness_colouring;
  /// Canonical graph6 of every H with a non-extendable colouring.
  std::vector<std::string> bad_graphs;
};

struct MinDegreeOptions {
  bool symmetry_reduction = true;
  int workers = 1;
};

namespace detail {

struct GraphSweep {
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  std::optional<std::vector<int>> first_bad;
};

inline GraphSweep sweep_colourings(const Graph& h, bool reduce) {
  const auto edges = h.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 26) throw std::invalid_argument("too many edges for colouring sweep");
  GraphSweep out;
  const std::uint64_t total = 1ULL << m;
  auto colours_of = [&](std::uint64_t mask) {
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = (mask >> i) & 1U;
    return c;
  };
  auto record = [&](std::uint64_t mask, std::uint64_t weight) {
    ++out.checked;
    auto c = colours_of(mask);
    if (!apex_extendable(h, c)) {
      out.bad += weight;
      if (!out.first_bad) out.first_bad = c;
    }
  };
  if (!reduce) {
    for (std::uint64_t mask = 0; mask < total; ++mask) record(mask, 1);
    return out;
  }
  // edge permutations induced by the automorphism group generators
  std::vector<std::vector<int>> edge_perms;
  std::vector<std::vector<int>> index(h.order(), std::vector<int>(h.order(), -1));
  for (int i = 0; i < m; ++i) index[edges[i].u][edges[i].v] = index[edges[i].v][edges[i].u] = i;
  for (const auto& p : canonical_form(h).generators) {
    std::vector<int> ep(m);
    for (int i = 0; i < m; ++i) ep[i] = index[p[edges[i].u]][p[edges[i].v]];
    edge_perms.push_back(std::move(ep));
  }
  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    seen[mask] = true;
    queue.assign(1, mask);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& ep : edge_perms) {
        std::uint64_t img = 0;
        for (int i = 0; i < m; ++i)
          if ((queue[q] >> i) & 1U) img |= 1ULL << ep[i];
        if (!seen[img]) {
          seen[img] = true;
          queue.push_back(img);
        }
      }
    record(mask, queue.size());
  }
  return out;
}

}  // namespace detail

/// For each order up to n_max: every triangle-free H whose cone avoids
/// co-(P2+P3), every 2-colouring of E(H), and whether a universal vertex
/// can be added without a monochromatic triangle.
inline std::vector<MinDegreeRow> min_degree_lower_bound(int n_max, const MinDegreeOptions& opt = {}) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (n_max > 9) throw std::invalid_argument("n_max above 9 is infeasible");
  std::vector<MinDegreeRow> rows;
  const Pattern cop = Pattern::co_p2p3();
  for (int n = 1; n <= n_max; ++n) {
    MinDegreeRow row;
    row.n = n;
    std::vector<Graph> hs;
    for (const auto& h : all_free_graphs(GenFilter{n, Pattern::clique(3)}))
      if (!contains_pattern(cone(h), cop)) hs.push_back(h);
    row.graphs = hs.size();
    std::vector<detail::GraphSweep> sweeps(hs.size());
    parallel_for(hs.size(), opt.workers,
                 [&](std::size_t i, int) { sweeps[i] = detail::sweep_colourings(hs[i], opt.symmetry_reduction); });
    std::vector<std::pair<std::string, std::size_t>> bad;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      row.colourings_checked += sweeps[i].checked;
      row.non_extendable += sweeps[i].bad;
      if (sweeps[i].first_bad) {
        if (apex_extendable_brute(hs[i], *sweeps[i].first_bad)) throw std::logic_error("apex check disagrees with enumeration");
        bad.emplace_back(canonical_string(hs[i]), i);
      }
    }
    std::sort(bad.begin(), bad.end());
    row.all_extendable = bad.empty();
    for (const auto& [s, _] : bad) row.bad_graphs.push_back(s);
    if (!bad.empty()) {
      row.witness_graph = hs[bad.front().second];
      row.witness_colouring = *sweeps[bad.front().second].first_bad;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// K4 whose 4-cycle 0-1-2-3 has every edge subdivided (by 4..7).
inline Graph subdivided_k4() {
  return Graph::from_edges(8, {{0, 4}, {4, 1}, {1, 5}, {5, 2}, {2, 6}, {6, 3}, {3, 7}, {7, 0}, {0, 2}, {1, 3}});
}

}  // namespace folkman
