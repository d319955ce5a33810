#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gcg/adversary.hpp"
#include "gcg/errors.hpp"
#include "gcg/topology.hpp"
#include "gcg/verify.hpp"

using namespace gcg;

TEST(CanonicalGraph, Examples) {
  const auto sparse = canonical_graph(CanonicalKind::Sparse, 3);
  EXPECT_EQ(sparse.edged(), (std::vector<Component>{{1, 2}, {1, 2}, {1, 2}}));
  EXPECT_EQ(sparse.lone_count(), 0);

  const auto line = canonical_graph(CanonicalKind::Line, 3);
  EXPECT_EQ(line.edged(), (std::vector<Component>{{3, 4}}));
  EXPECT_EQ(line.lone_count(), 2);

  const auto complete = canonical_graph(CanonicalKind::Complete, 6);
  EXPECT_EQ(complete.edged(), (std::vector<Component>{{6, 4}}));
  EXPECT_EQ(complete.lone_count(), 8);

  EXPECT_THROW(canonical_graph(CanonicalKind::Line, 0), std::domain_error);
}

TEST(CanonicalGraph, SatisfiesInvariants) {
  for (int m = 1; m <= 40; ++m) {
    for (auto kind : {CanonicalKind::Sparse, CanonicalKind::Line, CanonicalKind::Complete}) {
      const auto g = canonical_graph(kind, m);
      int edges = 0;
      int nodes = g.lone_count();
      for (const auto& c : g.edged()) {
        EXPECT_TRUE(is_feasible_component(c.edges, c.nodes));
        edges += c.edges;
        nodes += c.nodes;
      }
      EXPECT_EQ(edges, m);
      EXPECT_EQ(nodes, 2 * m);
    }
  }
}

TEST(MinCompleteNodes, Examples) {
  EXPECT_EQ(min_complete_nodes(1), 2);
  EXPECT_EQ(min_complete_nodes(6), 4);
  EXPECT_EQ(min_complete_nodes(10), 5);
  EXPECT_EQ(min_complete_nodes(7), 5);
}

TEST(Feasibility, Examples) {
  EXPECT_TRUE(is_feasible_component(1, 2));
  EXPECT_FALSE(is_feasible_component(2, 4));
  EXPECT_FALSE(is_feasible_component(7, 4));
  EXPECT_TRUE(is_feasible_component(6, 4));
  EXPECT_TRUE(is_feasible_component(0, 1));
  EXPECT_FALSE(is_feasible_component(0, 2));
}

TEST(GraphTopology, RejectsBadComponents) {
  EXPECT_THROW(GraphTopology({{2, 4}}), std::invalid_argument);
  EXPECT_THROW(GraphTopology({{1, 2}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(GraphTopology(std::vector<Component>{}), std::invalid_argument);
  const GraphTopology g({{1, 2}, {3, 4}});
  EXPECT_EQ(g.edged(), (std::vector<Component>{{1, 2}, {3, 4}}));
  EXPECT_EQ(g.lone_count(), 2);
  EXPECT_EQ(g.component(2), (Component{0, 1}));
  EXPECT_THROW(g.component(4), std::domain_error);
}

TEST(Enumerate, SmallCounts) {
  const auto one = enumerate_profiles(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(format_profile(one[0]), "1:2");

  const auto two = enumerate_profiles(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(format_profile(two[0]), "1:2,1:2");
  EXPECT_EQ(format_profile(two[1]), "2:3+1lone");

  std::set<std::string> three;
  for (const auto& g : enumerate_profiles(3)) three.insert(format_profile(g));
  EXPECT_TRUE(three.count("3:3+3lone"));
  EXPECT_TRUE(three.count("3:4+2lone"));
  EXPECT_EQ(three.size(), 4u);
}

TEST(Enumerate, CountsGrowAndProfilesAreDistinct) {
  std::size_t previous = 0;
  for (int m = 1; m <= 8; ++m) {
    const auto all = enumerate_profiles(m);
    EXPECT_GT(all.size(), previous);
    previous = all.size();
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    for (const auto& g : all) EXPECT_EQ(g.edges(), m);
  }
  EXPECT_THROW(enumerate_profiles(kMaxEnumerationEdges + 1), ResourceError);
}

TEST(ProfileText, RoundTrip) {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& g : enumerate_profiles(m)) EXPECT_EQ(parse_profile(format_profile(g)), g);
  }
  EXPECT_EQ(format_profile(parse_profile("3:4")), "3:4+2lone");
  EXPECT_EQ(format_profile(parse_profile("3:4,1:2+2lone")), "1:2,3:4+2lone");
}

TEST(ProfileText, RejectsMalformed) {
  for (const char* bad : {"", "3", "3:4+1lone", "2:4", "a:b", "1:2,", "1:2+lone", "0:1"}) {
    EXPECT_THROW(parse_profile(bad), std::invalid_argument) << bad;
  }
}

TEST(Realize, MatchesProfile) {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& g : enumerate_profiles(m)) {
      for (auto shape : {ComponentShape::Path, ComponentShape::Star}) {
        const Graph concrete = realize(g, shape);
        EXPECT_EQ(concrete.num_nodes(), 2 * m);
        EXPECT_EQ(concrete.num_edges(), m);
        EXPECT_EQ(profile_of(concrete), g);
      }
    }
  }
}

TEST(Realize, ProfileIsSufficientStatistic) {
  // Path and star on four nodes share the profile (3, 4).
  const GraphTopology g({{3, 4}});
  const Graph path = realize(g, ComponentShape::Path);
  const Graph star = realize(g, ComponentShape::Star);
  ASSERT_NE(path.edges(), star.edges());
  for (const auto& params : default_grid()) {
    for (int k = 0; k <= 9; ++k) {
      const auto attacks = spread_attacks(AttackAllocation(std::vector<int>{k, 0, 0}), g);
      for (auto label : {Action::X, Action::Y}) {
        JointAction a(6, Action::X);
        for (int i = 0; i < 4; ++i) a[static_cast<std::size_t>(i)] = label;
        EXPECT_EQ(global_potential(a, attacks, path, params), global_potential(a, attacks, star, params));
        EXPECT_EQ(system_welfare(a, path, params), system_welfare(a, star, params));
      }
    }
  }
}

TEST(ProfileOf, RequiresTwiceAsManyNodesAsEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(profile_of(g), std::invalid_argument);
}
