#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "folkman/arrowing.hpp"
#include "test_support.hpp"

using namespace folkman;
using namespace folkman::testing;

namespace {

bool arrows_v(const Graph& g, std::vector<int> t) { return arrows_vertex(g, ArrowSpec::vertex(std::move(t))).arrows(); }

// Independent edge oracle: 2-colour edges by mask, look for mono triangles by adjacency checks.
bool naive_edge_arrows(const Graph& g) {
  auto e = g.edges();
  const int m = static_cast<int>(e.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto colour = [&](int u, int v) {
      for (int i = 0; i < m; ++i)
        if ((e[i].u == u && e[i].v == v) || (e[i].u == v && e[i].v == u)) return static_cast<int>((mask >> i) & 1U);
      return -1;
    };
    bool mono = false;
    for (int a = 0; a < g.order() && !mono; ++a)
      for (int b = a + 1; b < g.order() && !mono; ++b)
        for (int c = b + 1; c < g.order() && !mono; ++c)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) {
            int x = colour(a, b);
            mono = x == colour(a, c) && x == colour(b, c);
          }
    if (!mono) return false;
  }
  return true;
}

}  // namespace

TEST(ArrowSpec, ParseAndValidate) {
  auto s = ArrowSpec::parse("(2,2,3)^v");
  EXPECT_EQ(s.targets, (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(s.mode, ArrowMode::kVertex);
  EXPECT_EQ(ArrowSpec::parse("3,3").to_string(), "(3,3)^v");
  EXPECT_EQ(ArrowSpec::parse("(3,3)^e").mode, ArrowMode::kEdge);
  EXPECT_THROW(ArrowSpec::parse("(2,3)^e"), std::invalid_argument);
  EXPECT_THROW(ArrowSpec::parse("0,3"), std::invalid_argument);
  EXPECT_THROW(ArrowSpec::parse(""), std::invalid_argument);
  EXPECT_THROW(ArrowSpec::parse("3;3"), std::invalid_argument);
}

TEST(ArrowVertex, TableExamples) {
  EXPECT_TRUE(arrows_v(complete_graph(4), {2, 3}));
  EXPECT_FALSE(arrows_v(complete_graph(3), {2, 3}));
  EXPECT_TRUE(arrows_v(complete_graph(5), {3, 3}));
  EXPECT_FALSE(arrows_v(complete_graph(4), {3, 3}));
  EXPECT_TRUE(arrows_v(petersen_graph().complement(), {2, 2, 3}));
  EXPECT_TRUE(arrows_v(complete_graph(3), {3}));
}

TEST(ArrowVertex, PathHasBipartitionWitness) {
  auto r = arrows_vertex(path_graph(3), ArrowSpec::vertex({2, 2}));
  ASSERT_EQ(r.decision, Decision::kDoesNotArrow);
  ASSERT_TRUE(r.witness);
  const auto& c = r.witness->colour;
  EXPECT_NE(c[0], c[1]);
  EXPECT_NE(c[1], c[2]);
  EXPECT_TRUE(is_good_vertex_coloring(path_graph(3), {2, 2}, *r.witness));
}

TEST(ArrowVertex, OnesAreNormalized) {
  // a colour with target 1 must stay empty
  auto r = arrows_vertex(path_graph(3), ArrowSpec::vertex({1, 2, 2}));
  EXPECT_FALSE(r.arrows());
  EXPECT_FALSE(r.notes.empty());
  EXPECT_TRUE(is_good_vertex_coloring(path_graph(3), {1, 2, 2}, *r.witness));
  for (int c : r.witness->colour) EXPECT_NE(c, 0);
  EXPECT_TRUE(arrows_v(complete_graph(3), {1, 3}));
  EXPECT_TRUE(arrows_v(Graph(1), {1, 1}));
  EXPECT_FALSE(arrows_v(Graph(0), {1}));
}

TEST(ArrowVertex, LargeTargetsUseCliqueCheck) {
  EXPECT_TRUE(arrows_v(complete_graph(7), {4, 4}));
  EXPECT_FALSE(arrows_v(complete_graph(6), {4, 4}));
  EXPECT_TRUE(arrows_v(complete_graph(6), {2, 5}));
  EXPECT_FALSE(arrows_v(complete_graph(5), {2, 5}));
}

TEST(ArrowVertex, AgreesWithBruteForceOnAllSmallGraphs) {
  const std::vector<std::vector<int>> specs{{3, 3}, {2, 3}, {2, 2, 3}, {2, 2}, {1, 3}, {4, 2}};
  for (int n = 1; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
      Graph g = graph_from_mask(n, m);
      for (const auto& t : specs) {
        ArrowSpec s = ArrowSpec::vertex(t);
        auto r = arrows_vertex(g, s);
        ASSERT_EQ(r.arrows(), brute_force_arrows(g, s)) << n << ' ' << m;
        if (!r.arrows()) ASSERT_TRUE(is_good_vertex_coloring(g, t, *r.witness));
      }
    }
  }
}

TEST(ArrowVertex, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 6 + iter % 4;
    Graph g = random_graph(n, 0.5 + 0.1 * (iter % 4), rng);
    for (const auto& t : std::vector<std::vector<int>>{{3, 3}, {2, 3}, {2, 2, 3}}) {
      ArrowSpec s = ArrowSpec::vertex(t);
      ASSERT_EQ(arrows_vertex(g, s).arrows(), brute_force_arrows(g, s));
    }
  }
}

TEST(ArrowVertex, PermutationInvariance) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = random_graph(8, 0.6, rng);
    std::vector<int> t{2, 3, 3};
    bool base = arrows_v(g, t);
    std::shuffle(t.begin(), t.end(), rng);
    EXPECT_EQ(base, arrows_v(g, t));
  }
}

TEST(ArrowVertex, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = random_graph(8, 0.55, rng);
    if (!arrows_v(g, {3, 3})) continue;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (!g.adjacent(u, v)) ASSERT_TRUE(arrows_v(g.with_edge(u, v), {3, 3}));
  }
}

TEST(Cnf, SizesAndLayout) {
  auto f3 = encode_cnf_33(complete_graph(3));
  EXPECT_EQ(f3.num_vars, 3);
  EXPECT_EQ(f3.clauses.size(), 2u);
  auto f4 = encode_cnf_33(complete_graph(4));
  EXPECT_EQ(f4.num_vars, 6);
  EXPECT_EQ(f4.clauses.size(), 8u);
  auto f6 = encode_cnf_33(complete_graph(6));
  EXPECT_EQ(f6.num_vars, 15);
  EXPECT_EQ(f6.clauses.size(), 40u);
  for (const auto& c : f6.clauses) {
    ASSERT_EQ(c.size(), 3u);
    bool pos = c[0] > 0;
    for (int l : c) EXPECT_EQ(l > 0, pos);
  }
  EXPECT_EQ(to_dimacs(f3), "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  EXPECT_EQ(encode_cnf_33(cycle_graph(5)).clauses.size(), 0u);
}

TEST(ArrowEdge, CompleteGraphs) {
  EXPECT_TRUE(arrows_edge_33(complete_graph(6)).arrows());
  EXPECT_TRUE(naive_edge_arrows(complete_graph(6)));
  auto r = arrows_edge_33(complete_graph(5));
  ASSERT_EQ(r.decision, Decision::kDoesNotArrow);
  EXPECT_TRUE(is_good_edge_coloring_33(complete_graph(5), *r.witness));
  EXPECT_FALSE(naive_edge_arrows(complete_graph(5)));
  EXPECT_TRUE(brute_force_arrows(complete_graph(6), ArrowSpec::edge33()));
  EXPECT_FALSE(brute_force_arrows(complete_graph(5), ArrowSpec::edge33()));
}

TEST(ArrowEdge, TriangleFreeNeverArrows) {
  for (Graph g : {cycle_graph(5), petersen_graph(), Graph(0), path_graph(4)}) {
    auto r = arrows_edge_33(g);
    EXPECT_EQ(r.decision, Decision::kDoesNotArrow);
    EXPECT_TRUE(is_good_edge_coloring_33(g, *r.witness));
  }
}

TEST(ArrowEdge, AgreesWithBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
      Graph g = graph_from_mask(n, m);
      ASSERT_EQ(arrows_edge_33(g).arrows(), brute_force_arrows(g, ArrowSpec::edge33()));
    }
  }
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = random_graph(7, 0.45, rng);
    if (g.size() > 20) continue;
    ASSERT_EQ(arrows_edge_33(g).arrows(), naive_edge_arrows(g));
  }
}

TEST(ArrowEdge, TimeoutIsUndecided) {
  std::mt19937_64 rng(5);
  Graph g = random_graph(40, 0.6, rng);
  auto r = arrows_edge_33(g, {std::chrono::milliseconds(0)});
  // zero budget may still finish before the first deadline poll
  if (!r.decided()) {
    EXPECT_FALSE(r.witness);
    EXPECT_FALSE(r.notes.empty());
  }
}

TEST(BruteForce, RejectsLargeInstances) {
  EXPECT_THROW(brute_force_arrows(complete_graph(20), ArrowSpec::vertex({3, 3, 3})), InstanceTooLarge);
  EXPECT_THROW(brute_force_arrows(complete_graph(8), ArrowSpec::edge33()), InstanceTooLarge);
}

TEST(Sat, SmallFormulas) {
  sat::Solver s(2);
  s.add_clause({1, 2});
  s.add_clause({-1, 2});
  s.add_clause({1, -2});
  ASSERT_EQ(s.solve(), sat::Result::kSat);
  EXPECT_TRUE(s.model_value(1));
  EXPECT_TRUE(s.model_value(2));
  s.add_clause({-1, -2});
  EXPECT_EQ(s.solve(), sat::Result::kUnsat);
}

TEST(Sat, PigeonholeIsUnsat) {
  // 6 pigeons, 5 holes
  const int p = 6, h = 5;
  auto var = [&](int i, int j) { return i * h + j + 1; };
  sat::Solver s(p * h);
  for (int i = 0; i < p; ++i) {
    std::vector<int> c;
    for (int j = 0; j < h; ++j) c.push_back(var(i, j));
    s.add_clause(c);
  }
  for (int j = 0; j < h; ++j)
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b) s.add_clause({-var(a, j), -var(b, j)});
  EXPECT_EQ(s.solve(), sat::Result::kUnsat);
}

TEST(Sat, RandomThreeSatModelsSatisfy) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 30;
    std::vector<std::vector<int>> f;
    std::uniform_int_distribution<int> var(1, n), sign(0, 1);
    for (int c = 0; c < 120; ++c) {
      std::vector<int> cl;
      for (int k = 0; k < 3; ++k) cl.push_back(sign(rng) ? var(rng) : -var(rng));
      f.push_back(cl);
    }
    sat::Solver s(n);
    for (auto& c : f) s.add_clause(c);
    auto r = s.solve();
    if (r == sat::Result::kSat) {
      for (auto& c : f) {
        bool ok = false;
        for (int l : c) ok |= s.model_value(std::abs(l)) == (l > 0);
        ASSERT_TRUE(ok);
      }
    } else {
      ASSERT_EQ(r, sat::Result::kUnsat);
    }
  }
}

TEST(Sat, AgreesWithExhaustiveOnTinyFormulas) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 10;
    std::vector<std::vector<int>> f;
    std::uniform_int_distribution<int> var(1, n), sign(0, 1), width(1, 4);
    for (int c = 0; c < 45; ++c) {
      std::vector<int> cl;
      for (int k = 0, w = width(rng); k < w; ++k) cl.push_back(sign(rng) ? var(rng) : -var(rng));
      f.push_back(cl);
    }
    bool exists = false;
    for (int m = 0; m < (1 << n) && !exists; ++m) {
      bool all = true;
      for (auto& c : f) {
        bool ok = false;
        for (int l : c) ok |= (((m >> (std::abs(l) - 1)) & 1) != 0) == (l > 0);
        if (!ok) {
          all = false;
          break;
        }
      }
      exists = all;
    }
    sat::Solver s(n);
    for (auto& c : f) s.add_clause(c);
    ASSERT_EQ(s.solve() == sat::Result::kSat, exists) << iter;
  }
}
