#include <gtest/gtest.h>

#include <set>

#include "fixtures.h"
#include "glp/oracle.h"

namespace glp {
namespace {

using fixtures::build;
using fixtures::z;

std::size_t falling_sum(int n) {
  std::size_t total = 0;
  for (int k = 0; k <= n - 2; ++k) {
    std::size_t term = 1;
    for (int j = 0; j < k; ++j) term *= static_cast<std::size_t>(n - 2 - j);
    total += term;
  }
  return total;
}

TEST(Oracle, CompleteGraphPathCounts) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(oracle::count_st_paths(fixtures::complete_graph(n), 0, 1), falling_sum(n))
        << "n=" << n;
  }
}

TEST(Oracle, ParallelArcsAreDistinctPaths) {
  EXPECT_EQ(oracle::count_st_paths(fixtures::triple_parallel(), 0, 1), 3u);
}

TEST(Oracle, LabelSets) {
  LabeledGraph g = fixtures::f1();
  oracle::LabelSet ls = oracle::label_set_bruteforce(g, g.vertex("s"), g.vertex("t"), 3);
  EXPECT_FALSE(ls.overflow);
  EXPECT_EQ(std::set<GroupElement>(ls.labels.begin(), ls.labels.end()),
            (std::set<GroupElement>{z(g.group(), 0), z(g.group(), 1)}));
  for (std::size_t i = 0; i < ls.labels.size(); ++i) {
    EXPECT_EQ(walk_label(g, ls.witnesses[i]), ls.labels[i]);
  }
  oracle::LabelSet capped = oracle::label_set_bruteforce(fixtures::triple_parallel(), 0, 1, 2);
  EXPECT_TRUE(capped.overflow);
  EXPECT_EQ(capped.labels.size(), 3u);
}

TEST(Oracle, Cycles) {
  int n = 0;
  oracle::enumerate_cycles(fixtures::complete_graph(4), [&](const Walk&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 7);
  n = 0;
  oracle::enumerate_cycles(fixtures::f3(), [&](const Walk& w) {
    EXPECT_EQ(w.steps.size(), 2u);
    ++n;
    return true;
  });
  EXPECT_EQ(n, 1);
  EXPECT_FALSE(oracle::all_cycles_balanced(fixtures::f1()));
  EXPECT_TRUE(oracle::all_cycles_balanced(fixtures::complete_graph(5)));
}

TEST(Oracle, SelfInverseCycles) {
  LabeledGraph z2 = build(GroupSpec::cyclic(2), {{"x", "y", "0"}, {"x", "y", "1"}});
  EXPECT_TRUE(oracle::self_inverse_unbalanced_cycle_exists(z2));
  EXPECT_FALSE(oracle::self_inverse_unbalanced_cycle_exists(fixtures::f3()));
  EXPECT_FALSE(oracle::self_inverse_unbalanced_cycle_exists(fixtures::complete_graph(4)));
}

TEST(Oracle, DisjointPaths) {
  LabeledGraph k4 = fixtures::complete_graph(4);
  auto r = oracle::disjoint_paths_bruteforce(k4, {{0, 1}, {2, 3}});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ((*r)[0].steps.size(), 1u);

  LabeledGraph line = build(GroupSpec::cyclic(3), {{"a", "b", "0"}, {"b", "c", "0"}, {"c", "d", "0"}});
  EXPECT_FALSE(oracle::disjoint_paths_bruteforce(line, {{0, 3}, {1, 2}}).has_value());
  EXPECT_TRUE(oracle::disjoint_paths_bruteforce(line, {{0, 1}, {2, 3}}).has_value());

  LabeledGraph two = build(GroupSpec::cyclic(3), {{"a", "b", "0"}, {"c", "d", "0"}});
  EXPECT_TRUE(oracle::disjoint_paths_bruteforce(two, {{0, 1}, {2, 3}}).has_value());
}

}  // namespace
}  // namespace glp
