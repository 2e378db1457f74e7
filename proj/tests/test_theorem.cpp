#include <gtest/gtest.h>

#include <set>

#include "folkman/theorem.hpp"
#include "test_support.hpp"

using namespace folkman;
using namespace folkman::testing;

namespace {

// Checks that a failing verdict's counterexample really violates its item.
void expect_checkable(const Graph& g, int item, const PropertyVerdict& v) {
  ASSERT_FALSE(v.pass);
  switch (item) {
    case 0: {
      ASSERT_EQ(v.vertices.size(), 4u);
      for (int a : v.vertices)
        for (int b : v.vertices)
          if (a != b) EXPECT_TRUE(g.adjacent(a, b));
      break;
    }
    case 1: {
      ASSERT_TRUE(v.edge);
      EXPECT_TRUE(g.adjacent(v.edge->u, v.edge->v));
      EXPECT_LT((g.neighbors(v.edge->u) & g.neighbors(v.edge->v)).count(), 2);
      break;
    }
    case 2: {
      ASSERT_GE(v.vertices.size(), 4u);
      const int u = v.vertices[0];
      for (std::size_t i = 1; i < v.vertices.size(); ++i) EXPECT_TRUE(g.adjacent(u, v.vertices[i]));
      const std::size_t k = v.vertices.size() - 1;
      for (std::size_t i = 1; i <= k; ++i) {
        int a = v.vertices[i], b = v.vertices[i % k + 1];
        EXPECT_TRUE(g.adjacent(a, b));
      }
      break;
    }
    case 3: {
      ASSERT_TRUE(v.edge);
      const int u = v.vertices[0];
      EXPECT_TRUE(g.adjacent(u, v.edge->u));
      EXPECT_TRUE(g.adjacent(u, v.edge->v));
      EXPECT_TRUE(g.adjacent(v.edge->u, v.edge->v));
      if (v.vertices.size() > 1) {
        const int apex = v.vertices[1];
        EXPECT_TRUE(g.adjacent(apex, v.edge->u) && g.adjacent(apex, v.edge->v));
        EXPECT_FALSE(g.adjacent(apex, u));
      } else {
        VertexSet outside = g.vertices() - g.neighbors(u) - VertexSet::singleton(u);
        EXPECT_TRUE((g.neighbors(v.edge->u) & g.neighbors(v.edge->v) & outside).empty());
      }
      break;
    }
    case 4:
      EXPECT_LT(g.degree(v.vertices[0]), 8);
      break;
  }
}

}  // namespace

TEST(CoP2P3Properties, K4FailsItemOne) {
  auto r = check_minimal_cop2p3_properties(complete_graph(4));
  expect_checkable(complete_graph(4), 0, r.items[0]);
  EXPECT_FALSE(r.all_pass());
}

TEST(CoP2P3Properties, IcosahedronFailsOnlyDegree) {
  Graph g = named::icosahedron();
  auto r = check_minimal_cop2p3_properties(g);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(r.items[i].pass) << i << ' ' << r.items[i].reason;
  expect_checkable(g, 4, r.items[4]);
}

TEST(CoP2P3Properties, PendantEdgeFailsItemTwo) {
  Graph g = complete_graph(3).with_vertex(VertexSet::singleton(0));
  auto r = check_minimal_cop2p3_properties(g);
  expect_checkable(g, 1, r.items[1]);
}

TEST(CoP2P3Properties, RejectsPatternInput) {
  EXPECT_THROW(check_minimal_cop2p3_properties(complete_graph(5)), std::invalid_argument);
}

TEST(CoP2P3Properties, ItemTwoEquivalence) {
  std::mt19937_64 rng(8);
  int both_hold = 0;
  for (int i = 0; i < 2000; ++i) {
    Graph g = random_graph(4 + i % 6, 0.3 + 0.1 * (i % 6), rng);
    bool a = !edge_in_fewer_than_two_triangles(g);
    bool b = !low_degree_in_neighbourhood(g);
    ASSERT_EQ(a, b);
    both_hold += a;
  }
  EXPECT_GT(both_hold, 0);
}

TEST(CoP2P3Properties, FailuresCarryCheckableCounterexamples) {
  std::mt19937_64 rng(13);
  std::array<int, 5> failures{};
  for (int i = 0; i < 3000; ++i) {
    Graph g = random_graph(6 + i % 7, 0.2 + 0.05 * (i % 5), rng);
    if (contains_pattern(g, Pattern::co_p2p3())) continue;
    auto r = check_minimal_cop2p3_properties(g);
    for (int k = 0; k < 5; ++k)
      if (!r.items[k].pass) {
        ++failures[k];
        expect_checkable(g, k, r.items[k]);
      }
  }
  for (int k = 0; k < 5; ++k) EXPECT_GT(failures[k], 0) << k;
}

TEST(ApexExtension, SatMatchesEnumeration) {
  std::mt19937_64 rng(21);
  int bad = 0;
  for (const auto& h : {subdivided_k4(), cycle_graph(5), petersen_graph()}) {
    auto edges = h.edges();
    for (int t = 0; t < 200; ++t) {
      std::vector<int> c(edges.size());
      for (auto& x : c) x = static_cast<int>(rng() & 1U);
      bool sat = apex_extendable(h, c);
      ASSERT_EQ(sat, apex_extendable_brute(h, c));
      bad += !sat;
    }
  }
  EXPECT_GT(bad, 0);
}

TEST(MinDegree, ExtendableBelowEightAndSubdividedK4AtEight) {
  auto rows = min_degree_lower_bound(8);
  ASSERT_EQ(rows.size(), 8u);
  for (int n = 1; n <= 7; ++n) {
    EXPECT_TRUE(rows[n - 1].all_extendable) << n;
    EXPECT_EQ(rows[n - 1].non_extendable, 0u);
  }
  const auto& r8 = rows[7];
  EXPECT_FALSE(r8.all_extendable);
  EXPECT_EQ(r8.bad_graphs, std::vector<std::string>{canonical_string(subdivided_k4())});
  ASSERT_TRUE(r8.witness_graph);
  EXPECT_FALSE(apex_extendable_brute(*r8.witness_graph, r8.witness_colouring));
}

TEST(MinDegree, ReductionMatchesFullSweep) {
  MinDegreeOptions full;
  full.symmetry_reduction = false;
  auto a = min_degree_lower_bound(8);
  auto b = min_degree_lower_bound(8, full);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graphs, b[i].graphs);
    EXPECT_EQ(a[i].non_extendable, b[i].non_extendable);
    EXPECT_EQ(a[i].bad_graphs, b[i].bad_graphs);
    EXPECT_LE(a[i].colourings_checked, b[i].colourings_checked);
  }
}

TEST(MinDegree, RejectsInfeasibleOrders) {
  EXPECT_THROW(min_degree_lower_bound(0), std::invalid_argument);
  EXPECT_THROW(min_degree_lower_bound(10), std::invalid_argument);
}
