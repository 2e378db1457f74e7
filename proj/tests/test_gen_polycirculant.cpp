#include <gtest/gtest.h>

#include <set>

#include "folkman/constructions.hpp"
#include "folkman/gen_polycirculant.hpp"
#include "test_support.hpp"

using namespace folkman;
using namespace folkman::testing;

namespace {

std::set<std::string> canon_set(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(canonical_string(g));
  return out;
}

std::vector<Graph> gen(std::vector<int> blocks, std::optional<Pattern> p = std::nullopt, std::optional<int> alpha = std::nullopt,
                       PolyOptions opt = {}) {
  return generate_semipolycirculant({BlockStructure::make(std::move(blocks)), std::move(p), alpha}, opt).graphs;
}

// Every labelled graph on the structure's vertices that theta fixes.
std::vector<Graph> theta_fixed(const std::vector<int>& blocks) {
  BlockStructure b = BlockStructure::make(blocks);
  const int n = b.order();
  std::vector<int> theta(n);
  for (std::size_t i = 0, base = 0; i < blocks.size(); base += blocks[i], ++i)
    for (int x = 0; x < blocks[i]; ++x) theta[base + x] = static_cast<int>(base) + (x + 1) % blocks[i];
  std::vector<Graph> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (1ULL << pairs); ++m) {
    Graph g = graph_from_mask(n, m);
    bool fixed = true;
    for (const auto& e : g.edges()) fixed = fixed && g.adjacent(theta[e.u], theta[e.v]);
    if (fixed) out.push_back(std::move(g));
  }
  return out;
}

std::set<std::string> brute(const std::vector<Graph>& fixed, const std::optional<Pattern>& p, std::optional<int> alpha) {
  std::set<std::string> out;
  for (const auto& g : fixed) {
    if (p && contains_pattern(g, *p)) continue;
    if (alpha && brute_independence_number(g) > *alpha) continue;
    out.insert(canonical_string(g));
  }
  return out;
}

}  // namespace

TEST(BlockStructure, Validation) {
  EXPECT_NO_THROW(BlockStructure::make({20, 5, 5}));
  EXPECT_NO_THROW(BlockStructure::make({12, 12, 6, 2}));
  EXPECT_THROW(BlockStructure::make({6, 4}), std::invalid_argument);
  EXPECT_THROW(BlockStructure::make({4, 6}), std::invalid_argument);
  EXPECT_THROW(BlockStructure::make({}), std::invalid_argument);
  EXPECT_THROW(BlockStructure::make({0}), std::invalid_argument);
  EXPECT_THROW(BlockStructure::make({100, 50}), std::invalid_argument);
  EXPECT_EQ(BlockStructure::make({8, 8, 8, 8, 4}).order(), 36);
}

TEST(EdgeClasses, CountsAndPartition) {
  EXPECT_EQ(enumerate_block_edge_classes(BlockStructure::make({5})).size(), 2u);
  EXPECT_EQ(enumerate_block_edge_classes(BlockStructure::make({2, 2})).size(), 4u);
  // 7 + 3*15 + 7 + 7
  EXPECT_EQ(enumerate_block_edge_classes(BlockStructure::make({15, 15, 15})).size(), 66u);
  for (auto blocks : std::vector<std::vector<int>>{{6}, {4, 2}, {6, 3, 3}, {12, 12, 6, 2}, {8, 4, 2, 1}}) {
    BlockStructure b = BlockStructure::make(blocks);
    const int n = b.order();
    std::set<std::pair<int, int>> seen;
    for (const auto& c : enumerate_block_edge_classes(b))
      for (const auto& e : c.pairs) {
        ASSERT_LT(e.u, e.v);
        ASSERT_TRUE(seen.insert({e.u, e.v}).second);
      }
    EXPECT_EQ(static_cast<int>(seen.size()), n * (n - 1) / 2);
  }
}

TEST(EdgeClasses, ClassesAreThetaOrbits) {
  BlockStructure b = BlockStructure::make({6, 3, 3, 1});
  Permutation th = theta_permutation(b);
  for (const auto& c : enumerate_block_edge_classes(b)) {
    std::set<std::pair<int, int>> members;
    for (const auto& e : c.pairs) members.insert({e.u, e.v});
    int u = c.pairs.front().u, v = c.pairs.front().v;
    std::set<std::pair<int, int>> orbit;
    for (int k = 0; k < 6; ++k) {
      orbit.insert({std::min(u, v), std::max(u, v)});
      u = th[u];
      v = th[v];
    }
    EXPECT_EQ(orbit, members);
  }
}

TEST(PolyGen, SingleBlockExamples) {
  auto five = gen({5});
  EXPECT_EQ(five.size(), 3u);
  EXPECT_EQ(canon_set(five), canon_set({Graph(5), cycle_graph(5), complete_graph(5)}));
  EXPECT_EQ(gen({4}).size(), 4u);
  auto c5 = gen({5}, Pattern::clique(3), 2);
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_TRUE(isomorphic(c5[0], cycle_graph(5)));
}

TEST(PolyGen, NoRamseyGraphOnSixVertices) {
  for (auto blocks : std::vector<std::vector<int>>{{6}, {3, 3}, {2, 2, 2}, {4, 2}, {2, 2, 1, 1}, {1, 1, 1, 1, 1, 1}})
    EXPECT_TRUE(gen(blocks, Pattern::clique(3), 2).empty());
}

TEST(PolyGen, CirculantsMatchDistanceSubsets) {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> want;
    const int h = n / 2;
    for (int m = 0; m < (1 << h); ++m) {
      std::vector<int> d;
      for (int i = 0; i < h; ++i)
        if ((m >> i) & 1) d.push_back(i + 1);
      want.insert(canonical_string(circulant(n, d)));
    }
    EXPECT_EQ(canon_set(gen({n})), want) << n;
  }
}

TEST(PolyGen, MatchesLabelledBruteForce) {
  const std::vector<std::vector<int>> structures{{3, 3}, {4, 2}, {2, 2, 2}, {4, 1, 1}, {3, 3, 1}, {6, 1}, {2, 2, 2, 1}, {4, 2, 1}};
  const std::vector<std::pair<std::optional<Pattern>, std::optional<int>>> filters{
      {std::nullopt, std::nullopt}, {Pattern::clique(3), std::nullopt}, {Pattern::jgraph(4), 3}, {std::nullopt, 2}};
  for (const auto& s : structures) {
    auto fixed = theta_fixed(s);
    for (const auto& [p, a] : filters) EXPECT_EQ(canon_set(gen(s, p, a)), brute(fixed, p, a)) << BlockStructure{s}.to_string();
  }
}

TEST(PolyGen, OutputInvariants) {
  const BlockStructure b = BlockStructure::make({6, 6, 3});
  auto out = generate_semipolycirculant({b, Pattern::jgraph(5), 5});
  EXPECT_GT(out.graphs.size(), 0u);
  EXPECT_GE(out.leaves, out.graphs.size());
  std::set<std::string> seen;
  for (const auto& g : out.graphs) {
    EXPECT_TRUE(verify_theta_certificate(g, b));
    EXPECT_FALSE(contains_pattern(g, Pattern::jgraph(5)));
    EXPECT_LE(independence_number(g), 5);
    EXPECT_TRUE(seen.insert(canonical_string(g)).second);
  }
}

TEST(PolyGen, SymmetryCapDoesNotChangeOutput) {
  for (auto blocks : std::vector<std::vector<int>>{{6, 6, 3}, {5, 5, 5}}) {
    PolyOptions small;
    small.symmetry_cap = 1;
    EXPECT_EQ(canon_set(gen(blocks, Pattern::jgraph(5), 6, small)), canon_set(gen(blocks, Pattern::jgraph(5), 6)));
  }
}

TEST(PolyGen, SplitAndWorkersPartitionOutput) {
  auto whole = canon_set(gen({6, 6, 3}, Pattern::jgraph(5), 6));
  std::set<std::string> joined;
  for (int part = 0; part < 4; ++part) {
    PolyOptions opt;
    opt.split = {5, part, 4};
    auto piece = canon_set(gen({6, 6, 3}, Pattern::jgraph(5), 6, opt));
    joined.insert(piece.begin(), piece.end());
  }
  EXPECT_EQ(joined, whole);
  PolyOptions par;
  par.workers = 3;
  EXPECT_EQ(canon_set(gen({6, 6, 3}, Pattern::jgraph(5), 6, par)), whole);
}

TEST(PolyGen, FifteenVertexConstructionIsFound) {
  auto out = canon_set(gen({5, 5, 5}, Pattern::jgraph(6)));
  EXPECT_TRUE(out.contains(canonical_string(named::folkman_333_j6_15())));
}

TEST(GenTask, ParseRoundTrip) {
  GenTask t = GenTask::parse("blocks=15,15,15 forbid=J4 alpha<=10");
  EXPECT_EQ(t.structure.sizes, (std::vector<int>{15, 15, 15}));
  ASSERT_TRUE(t.forbidden);
  EXPECT_EQ(t.forbidden->name(), "J4");
  EXPECT_EQ(t.alpha_bound, 10);
  EXPECT_EQ(GenTask::parse(t.to_string()).to_string(), t.to_string());
  EXPECT_THROW(GenTask::parse("forbid=J4"), std::invalid_argument);
  EXPECT_THROW(GenTask::parse("blocks=6,4"), std::invalid_argument);
  EXPECT_THROW(GenTask::parse("blocks=6 colour=3"), std::invalid_argument);
}
