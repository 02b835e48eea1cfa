#include <gtest/gtest.h>

#include <set>

#include "fixtures.h"
#include "glp/oracle.h"
#include "glp/random_instance.h"
#include "glp/solve.h"

namespace glp {
namespace {

using fixtures::build;
using fixtures::z;

std::set<GroupElement> witness_labels(const LabeledGraph& g, VertexId s, VertexId t,
                                      const LabelSummary& r) {
  std::set<GroupElement> out;
  for (const LabeledPath& w : r.witnesses) {
    EXPECT_TRUE(validate_path(g, w.path, s, t));
    EXPECT_EQ(walk_label(g, w.path), w.label);
    out.insert(w.label);
  }
  return out;
}

TEST(Solve, F1HasTwoLabels) {
  LabeledGraph g = fixtures::f1();
  VertexId s = g.vertex("s"), t = g.vertex("t");
  LabelSummary r = test_two_labels(g, s, t);
  EXPECT_EQ(r.count, LabelCount::kTwo);
  EXPECT_EQ(witness_labels(g, s, t, r),
            (std::set<GroupElement>{z(g.group(), 0), z(g.group(), 1)}));
}

TEST(Solve, TripleParallel) {
  LabeledGraph g = fixtures::triple_parallel();
  LabelSummary r = test_two_labels(g, 0, 1);
  EXPECT_EQ(r.count, LabelCount::kThreeOrMore);
  EXPECT_EQ(witness_labels(g, 0, 1, r).size(), 3u);
  auto three = find_three_paths(g, 0, 1);
  ASSERT_EQ(three.size(), 3u);
  for (const LabeledPath& p : three) EXPECT_EQ(p.path.steps.size(), 1u);
}

TEST(Solve, Disconnected) {
  LabeledGraph g(GroupSpec::cyclic(3));
  g.add_arc("s", "a", z(g.group(), 1));
  g.add_arc("b", "t", z(g.group(), 1));
  LabelSummary r = test_two_labels(g, g.vertex("s"), g.vertex("t"));
  EXPECT_EQ(r.count, LabelCount::kZero);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(Solve, SinglePath) {
  LabeledGraph g = build(GroupSpec::symmetric(3), {{"s", "u", "(1,2)"}, {"u", "t", "(2,3)"}});
  VertexId s = g.vertex("s"), t = g.vertex("t");
  LabelSummary r = test_two_labels(g, s, t);
  EXPECT_EQ(r.count, LabelCount::kOne);
  EXPECT_EQ(witness_labels(g, s, t, r).size(), 1u);
}

TEST(Solve, CaseB) {
  LabeledGraph g = fixtures::case_b();
  VertexId s = g.vertex("s"), t = g.vertex("t");
  LabelSummary r = test_two_labels(g, s, t);
  EXPECT_EQ(r.count, LabelCount::kTwo);
  EXPECT_EQ(witness_labels(g, s, t, r),
            (std::set<GroupElement>{z(g.group(), 0), z(g.group(), 1)}));
}

TEST(Solve, LadderHasTwoLabels) {
  LabeledGraph g = fixtures::ladder();
  VertexId s = g.vertex("s"), t = g.vertex("t");
  LabelSummary r = test_two_labels(g, s, t);
  EXPECT_EQ(r.count, LabelCount::kTwo);
  GroupSpec s3 = g.group();
  EXPECT_EQ(witness_labels(g, s, t, r),
            (std::set<GroupElement>{parse_element(s3, "(1,2)"), parse_element(s3, "(1,3)")}));
}

TEST(Solve, FindThreePaths) {
  LabeledGraph g = fixtures::f1();
  g.add_arc("s", "t", z(g.group(), 2));
  VertexId s = g.vertex("s"), t = g.vertex("t");
  auto three = find_three_paths(g, s, t);
  std::set<GroupElement> labels;
  for (const LabeledPath& p : three) {
    EXPECT_TRUE(validate_path(g, p.path, s, t));
    labels.insert(walk_label(g, p.path));
  }
  EXPECT_EQ(labels.size(), 3u);
  EXPECT_THROW(find_three_paths(fixtures::f1(), s, t), std::logic_error);
}

TEST(Solve, FindThreePathsInDiamond) {
  GroupSpec z4 = GroupSpec::cyclic(4);
  LabeledGraph g = build(z4, {{"s", "a", "0"}, {"a", "t", "0"}, {"s", "b", "1"}, {"b", "t", "0"},
                              {"s", "c", "2"}, {"c", "t", "0"}, {"s", "d", "3"}, {"d", "t", "0"}});
  auto three = find_three_paths(g, g.vertex("s"), g.vertex("t"));
  std::set<GroupElement> labels;
  for (const LabeledPath& p : three) labels.insert(walk_label(g, p.path));
  EXPECT_EQ(labels.size(), 3u);
}

TEST(Solve, ForbiddenTwo) {
  LabeledGraph g = fixtures::f1();
  VertexId s = g.vertex("s"), t = g.vertex("t");
  const GroupSpec& z3 = g.group();
  EXPECT_FALSE(forbidden_two_path(g, s, t, z(z3, 0), z(z3, 1)).has_value());
  auto p = forbidden_two_path(g, s, t, z(z3, 0), z(z3, 2));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(format_walk(g, p->path), "s,u,t");
  EXPECT_EQ(p->label, z(z3, 1));

  LabeledGraph tp = fixtures::triple_parallel();
  auto q = forbidden_two_path(tp, 0, 1, z(z3, 0), z(z3, 1));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->label, z(z3, 2));
  EXPECT_EQ(q->path.steps.size(), 1u);
  EXPECT_THROW(forbidden_two_path(g, s, t, z(z3, 1), z(z3, 1)), std::invalid_argument);
}

TEST(Solve, Z3Labels) {
  LabeledGraph g = fixtures::f1();
  VertexId s = g.vertex("s"), t = g.vertex("t");
  LabelSummary r = z3_labels(g, s, t);
  ASSERT_EQ(r.witnesses.size(), 2u);
  EXPECT_EQ(r.witnesses[0].label, z(g.group(), 0));
  EXPECT_EQ(r.witnesses[1].label, z(g.group(), 1));

  LabelSummary all = z3_labels(fixtures::triple_parallel(), 0, 1);
  EXPECT_EQ(all.witnesses.size(), 3u);

  LabeledGraph one = build(GroupSpec::cyclic(3), {{"s", "t", "2"}});
  LabelSummary single = z3_labels(one, 0, 1);
  ASSERT_EQ(single.witnesses.size(), 1u);
  EXPECT_EQ(single.witnesses[0].label, z(one.group(), 2));

  EXPECT_THROW(z3_labels(fixtures::ladder(), 0, 1), GroupMismatch);
}

TEST(Solve, AgreesWithOracle) {
  Rng rng(61);
  std::vector<GroupSpec> specs = {GroupSpec::cyclic(3), GroupSpec::cyclic(4),
                                  GroupSpec::symmetric(3), GroupSpec::free({"a", "b"})};
  for (int i = 0; i < 400; ++i) {
    const GroupSpec& spec = specs[i % specs.size()];
    int n = 2 + static_cast<int>(rng.below(6));
    LabeledGraph g = random_graph(rng, n, n + static_cast<int>(rng.below(8)), spec, 0.6);
    VertexId s = 0, t = n - 1;
    oracle::LabelSet want = oracle::label_set_bruteforce(g, s, t, 3);
    LabelSummary r = test_two_labels(g, s, t);
    std::set<GroupElement> got = witness_labels(g, s, t, r);
    if (want.overflow) {
      EXPECT_EQ(r.count, LabelCount::kThreeOrMore);
      EXPECT_EQ(got.size(), 3u);
    } else {
      EXPECT_EQ(static_cast<std::size_t>(r.count), want.labels.size());
      EXPECT_EQ(got, std::set<GroupElement>(want.labels.begin(), want.labels.end()));
    }
  }
}

}  // namespace
}  // namespace glp
