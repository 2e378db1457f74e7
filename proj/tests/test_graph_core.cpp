#include <gtest/gtest.h>

#include <random>
#include <set>

#include "folkman/canon.hpp"
#include "folkman/graph6.hpp"
#include "folkman/invariants.hpp"
#include "folkman/pattern.hpp"
#include "test_support.hpp"

namespace folkman {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::petersen_graph;

TEST(Graph, RejectsBadOrderAndLoops) {
  EXPECT_THROW(Graph(129), std::invalid_argument);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(b.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, DerivedGraphsAreNewValues) {
  Graph c5 = cycle_graph(5);
  Graph d = c5.without_vertex(0);
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(d.order(), 4);
  EXPECT_EQ(d.size(), 3);
  Graph e = c5.with_edge(0, 2);
  EXPECT_EQ(c5.size(), 5);
  EXPECT_EQ(e.size(), 6);
}

TEST(Graph6, DecodesKnownStrings) {
  Graph empty5 = decode_graph6("D??");
  EXPECT_EQ(empty5.order(), 5);
  EXPECT_EQ(empty5.size(), 0);
  EXPECT_EQ(decode_graph6("C~"), complete_graph(4));
  EXPECT_EQ(decode_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, EncodesKnownGraphs) {
  EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(encode_graph6(Graph(5)), "D??");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
}

TEST(Graph6, ErrorsAreDistinct) {
  auto kind_of = [](std::string_view s) {
    try {
      decode_graph6(s);
    } catch (const Graph6Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for " << s;
    return Graph6Error::Kind::kBadSparse6;
  };
  EXPECT_EQ(kind_of(""), Graph6Error::Kind::kMalformedLength);
  EXPECT_EQ(kind_of("~?"), Graph6Error::Kind::kMalformedLength);
  EXPECT_EQ(kind_of("D?"), Graph6Error::Kind::kBodyLength);
  EXPECT_EQ(kind_of("D?@"), Graph6Error::Kind::kNonzeroPadding);  // low pad bit set
  EXPECT_EQ(kind_of("D? "), Graph6Error::Kind::kBodyLength);      // trailing space stripped
  EXPECT_EQ(kind_of("D?\x01"), Graph6Error::Kind::kInvalidCharacter);
  // order 129 in the 4-byte form
  EXPECT_EQ(kind_of("~?A@"), Graph6Error::Kind::kOrderTooLarge);
}

TEST(Graph6, LargeOrderRoundTrip) {
  std::mt19937_64 rng(7);
  Graph g = testing::random_graph(128, 0.3, rng);
  std::string s = encode_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(decode_graph6(s), g);
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> order(0, 30);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    Graph g = testing::random_graph(order(rng), dens(rng), rng);
    std::string s = encode_graph6(g);
    ASSERT_EQ(decode_graph6(s), g) << s;
    ASSERT_EQ(encode_graph6(decode_graph6(s)), s);
  }
}

TEST(Sparse6, DecodesReferenceExample) {
  // Example from the format description: 7 vertices, edges 0-1 0-2 1-2 5-6.
  Graph g = decode_sparse6(":Fa@x^");
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(5, 6));
  EXPECT_EQ(decode_any(":Fa@x^"), g);
}

TEST(Pattern, BasicContainment) {
  EXPECT_TRUE(contains_pattern(complete_graph(4), Pattern::jgraph(4)));
  EXPECT_FALSE(contains_pattern(cycle_graph(5), Pattern::clique(3)));
  EXPECT_FALSE(contains_pattern(petersen_graph().complement(), Pattern::jgraph(5)));
  EXPECT_TRUE(contains_pattern(petersen_graph().complement(), Pattern::jgraph(4)));
  EXPECT_TRUE(contains_pattern(cycle_graph(4), Pattern::cycle4()));
  EXPECT_TRUE(contains_pattern(complete_graph(4), Pattern::cycle4()));
  EXPECT_FALSE(contains_pattern(cycle_graph(5), Pattern::cycle4()));
  EXPECT_FALSE(contains_pattern(complete_graph(3), Pattern::clique(4)));
}

TEST(Pattern, NamedShapes) {
  Pattern w5 = Pattern::wheel5();
  EXPECT_EQ(w5.graph().size(), 8);
  Pattern co = Pattern::co_p2p3();
  EXPECT_EQ(co.graph().size(), 7);
  EXPECT_EQ(Pattern::parse("J5").name(), "J5");
  EXPECT_EQ(Pattern::parse("coP2P3").kind(), Pattern::Kind::kCoP2P3);
  EXPECT_THROW(Pattern::parse("K2"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("Q4"), std::invalid_argument);
  EXPECT_THROW(Pattern::custom(Graph(11)), std::invalid_argument);
  // K5 contains co-(P2 u P3), which has 7 of the 10 edges
  EXPECT_TRUE(contains_pattern(complete_graph(5), co));
  EXPECT_FALSE(contains_pattern(complete_graph(4), co));
}

// Fast paths agree with the generic subgraph search on random graphs.
TEST(Pattern, FastPathsMatchGenericSearch) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    Graph g = testing::random_graph(3 + trial % 7, 0.5, rng);
    for (const Pattern& p : {Pattern::clique(3), Pattern::clique(4), Pattern::jgraph(4), Pattern::jgraph(5),
                             Pattern::cycle4()}) {
      bool generic = detail::SubgraphSearch(g, p.graph()).find();
      ASSERT_EQ(contains_pattern(g, p), generic) << p.name() << " " << encode_graph6(g);
      for (int v = 0; v < g.order(); ++v)
        ASSERT_EQ(contains_pattern_at(g, p, v), detail::SubgraphSearch(g, p.graph()).find(v))
            << p.name() << " at " << v << " " << encode_graph6(g);
    }
  }
}

TEST(Pattern, CliqueAgreesWithSubsetOracle) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 9; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = testing::random_graph(n, 0.6, rng);
      for (int k = 3; k <= n; ++k)
        ASSERT_EQ(contains_pattern(g, Pattern::clique(k)), testing::brute_has_clique(g, k));
    }
}

TEST(Invariants, IndependenceNumber) {
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(petersen_graph()), testing::brute_independence_number(petersen_graph()));
  EXPECT_EQ(independence_number(petersen_graph()), 4);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_graph(1 + trial % 16, 0.4, rng);
    ASSERT_EQ(independence_number(g), testing::brute_independence_number(g));
  }
}

TEST(Invariants, IndependenceMatchesComplementClique) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testing::random_graph(1 + trial % 12, 0.5, rng);
    int alpha = independence_number(g);
    Graph h = g.complement();
    int largest = 1;
    for (int k = 3; k <= g.order(); ++k)
      if (contains_pattern(h, Pattern::clique(k))) largest = k;
    if (largest < 3) largest = h.size() > 0 ? 2 : 1;
    ASSERT_EQ(alpha, largest) << encode_graph6(g);
  }
}

TEST(Invariants, ChromaticNumber) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(complete_graph(6)), 6);
  EXPECT_EQ(chromatic_number(petersen_graph()), 3);
  EXPECT_EQ(chromatic_number(Graph(4)), 1);
}

TEST(Invariants, Triangles) {
  EXPECT_EQ(triangles(complete_graph(4)).size(), 4U);
  EXPECT_TRUE(triangles(cycle_graph(5)).empty());
  for (int n = 3; n <= 10; ++n)
    EXPECT_EQ(static_cast<int>(triangles(complete_graph(n)).size()), n * (n - 1) * (n - 2) / 6);
  auto t = triangles(complete_graph(5));
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
  std::set<std::array<int, 3>> uniq(t.begin(), t.end());
  EXPECT_EQ(uniq.size(), t.size());
}

TEST(Invariants, Connectivity) {
  EXPECT_TRUE(is_two_connected(cycle_graph(5)));
  EXPECT_FALSE(is_two_connected(path_graph(4)));
  EXPECT_FALSE(is_connected(Graph(2)));
}

TEST(Complement, Basics) {
  EXPECT_EQ(complete_graph(5).complement(), Graph(5));
  EXPECT_TRUE(testing::brute_isomorphic(cycle_graph(5).complement(), cycle_graph(5)));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::random_graph(9, 0.5, rng);
    ASSERT_EQ(g.complement().complement(), g);
  }
}

TEST(Canon, InvariantUnderRelabeling) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = testing::random_graph(n, 0.45, rng);
      std::string form = canonical_string(g);
      for (int r = 0; r < 100; ++r) {
        auto perm = testing::random_permutation(n, rng);
        ASSERT_EQ(canonical_string(g.relabeled(perm)), form);
      }
    }
}

TEST(Canon, DistinguishesNonIsomorphic) {
  EXPECT_NE(canonical_string(complete_graph(4)), canonical_string(complete_graph(4).without_edge(0, 1)));
  EXPECT_EQ(canonical_string(cycle_graph(5)), canonical_string(cycle_graph(5).complement()));
}

// Brute-force class counts for n <= 6 are 1, 2, 4, 11, 34, 156.
TEST(Canon, ClassCountsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    auto reps = testing::brute_all_graphs(n);
    std::set<std::string> forms;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m)
      forms.insert(canonical_string(testing::graph_from_mask(n, m)));
    EXPECT_EQ(forms.size(), reps.size()) << "n=" << n;
  }
}

TEST(Canon, GroupOrderAndOrbits) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(1 + trial % 8, 0.5, rng);
    CanonicalForm f = canonical_form(g);
    ASSERT_EQ(f.group_order, testing::brute_automorphism_count(g)) << encode_graph6(g);
    for (const auto& gen : f.generators) ASSERT_EQ(g.relabeled(gen), g);
    // canonical labelling reproduces the canonical graph
    ASSERT_EQ(encode_graph6(g.relabeled(f.labeling)), f.graph6);
  }
  EXPECT_EQ(canonical_form(petersen_graph()).group_order, 120);
  EXPECT_EQ(canonical_form(Graph(10)).group_order, 3628800);
  EXPECT_EQ(canonical_form(cycle_graph(5)).orbits, std::vector<int>(5, 0));
}

}  // namespace
}  // namespace folkman
