#include <gtest/gtest.h>

#include <set>

#include "fixtures.h"
#include "glp/connectivity.h"
#include "glp/contraction.h"
#include "glp/oracle.h"
#include "glp/random_instance.h"

namespace glp {
namespace {

using fixtures::build;
using fixtures::z;

std::set<GroupElement> labels_of(const LabeledGraph& g, VertexId s, VertexId t) {
  oracle::LabelSet ls = oracle::label_set_bruteforce(g, s, t, 1000);
  return {ls.labels.begin(), ls.labels.end()};
}

Step step_from(const LabeledGraph& g, ArcId id, VertexId from) {
  return {id, g.arc(id).tail == from ? Direction::kForward : Direction::kBackward};
}

TEST(Contraction, BoundarySubgraph) {
  LabeledGraph g = fixtures::f1();
  VertexId u = g.vertex("u");
  std::vector<VertexId> x = {u};
  LabeledGraph piece = boundary_subgraph(g, x);
  EXPECT_EQ(piece.arc_count(), 2u);
  EXPECT_FALSE(piece.has_arc(0));
  EXPECT_EQ(neighborhood(g, x), (std::vector<VertexId>{g.vertex("s"), g.vertex("t")}));
  EXPECT_EQ(boundary_subgraph(g, std::vector<VertexId>{}).arc_count(), 0u);
  EXPECT_EQ(boundary_subgraph(g, g.vertices()), g);
}

TEST(Contraction, TwoContractPath) {
  GroupSpec z3 = GroupSpec::cyclic(3);
  LabeledGraph g = build(z3, {{"s", "a", "1"}, {"a", "b", "0"}, {"b", "t", "1"}, {"s", "t", "0"}});
  VertexId s = g.vertex("s"), t = g.vertex("t");
  std::vector<VertexId> x = {g.vertex("a"), g.vertex("b")};
  ASSERT_TRUE(is_2contractible(g, s, t, x));
  Contraction c = two_contract(g, s, t, x);
  ASSERT_EQ(c.record.added.size(), 1u);
  EXPECT_EQ(c.record.added[0].label, z(z3, 2));
  EXPECT_EQ(c.graph.vertex_count(), 2u);
  EXPECT_EQ(labels_of(c.graph, s, t), labels_of(g, s, t));

  Path p{s, {{c.record.added[0].arc, Direction::kForward}}};
  Path e = expand_path(g, std::vector<ContractionRecord>{c.record}, p);
  EXPECT_EQ(walk_vertices(g, e).size(), 4u);
  EXPECT_EQ(walk_label(g, e), z(z3, 2));
}

TEST(Contraction, TwoContractDigon) {
  GroupSpec z3 = GroupSpec::cyclic(3);
  LabeledGraph g = build(z3, {{"s", "x", "0"}, {"x", "m", "0"}, {"x", "m", "1"},
                              {"m", "y", "0"}, {"y", "t", "0"}, {"s", "t", "0"}});
  VertexId s = g.vertex("s"), t = g.vertex("t");
  std::vector<VertexId> x = {g.vertex("m")};
  Contraction c = two_contract(g, s, t, x);
  ASSERT_EQ(c.record.added.size(), 2u);
  std::set<GroupElement> added = {c.record.added[0].label, c.record.added[1].label};
  EXPECT_EQ(added, labels_of(boundary_subgraph(g, x), g.vertex("x"), g.vertex("y")));
}

TEST(Contraction, TwoContractSkipsEquivalentArc) {
  GroupSpec z3 = GroupSpec::cyclic(3);
  LabeledGraph g = build(z3, {{"s", "a", "1"}, {"a", "t", "1"}, {"t", "s", "1"}});
  VertexId s = g.vertex("s"), t = g.vertex("t");
  std::vector<VertexId> x = {g.vertex("a")};
  Contraction c = two_contract(g, s, t, x);
  EXPECT_TRUE(c.record.added.empty());
  EXPECT_EQ(c.graph.arc_count(), 1u);
}

TEST(Contraction, RejectsWholeGraph) {
  GroupSpec z3 = GroupSpec::cyclic(3);
  LabeledGraph g = build(z3, {{"s", "a", "1"}, {"a", "t", "1"}});
  std::vector<VertexId> x = {g.vertex("a")};
  EXPECT_FALSE(is_2contractible(g, g.vertex("s"), g.vertex("t"), x));
  EXPECT_THROW(two_contract(g, g.vertex("s"), g.vertex("t"), x), std::invalid_argument);
}

LabeledGraph star_graph(const std::string& cx) {
  return build(GroupSpec::cyclic(3), {{"c", "s", cx}, {"c", "y", "0"}, {"c", "t", "0"},
                                      {"s", "w", "0"}, {"w", "t", "1"}, {"y", "w", "0"}});
}

TEST(Contraction, ThreeContractStar) {
  LabeledGraph g = star_graph("0");
  VertexId s = g.vertex("s"), t = g.vertex("t");
  std::vector<VertexId> x = {g.vertex("c")};
  ASSERT_TRUE(is_3contractible(g, s, t, x));
  Contraction c = three_contract(g, s, t, x);
  ASSERT_EQ(c.record.triangle.size(), 3u);
  for (const TriangleArc& a : c.record.triangle) {
    EXPECT_EQ(c.graph.arc(a.arc).label, z(g.group(), 0));
  }
  EXPECT_EQ(labels_of(c.graph, s, t), labels_of(g, s, t));
}

TEST(Contraction, FindThreeContractible) {
  LabeledGraph g = star_graph("0");
  VertexId s = g.vertex("s"), t = g.vertex("t");
  auto found = find_3contractible(g, s, t);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(is_3contractible(g, s, t, *found));
  EXPECT_EQ(neighborhood(g, *found).size(), 3u);
  EXPECT_TRUE(oracle::all_cycles_balanced(boundary_subgraph(g, *found)));
}

TEST(Contraction, ThreeContractLabel) {
  LabeledGraph g = star_graph("1");
  VertexId s = g.vertex("s"), t = g.vertex("t"), y = g.vertex("y");
  std::vector<VertexId> x = {g.vertex("c")};
  Contraction c = three_contract(g, s, t, x);
  int seen = 0;
  for (const TriangleArc& a : c.record.triangle) {
    if (std::set<VertexId>{a.tail, a.head} == std::set<VertexId>{s, y}) {
      EXPECT_EQ(arc_traverse_label(c.graph, a.arc, y), z(g.group(), 2));
      ++seen;
    }
  }
  EXPECT_EQ(seen, 1);
  EXPECT_EQ(labels_of(c.graph, s, t), labels_of(g, s, t));
}

TEST(Contraction, ThreeContractRejectsUnbalanced) {
  LabeledGraph g = star_graph("0");
  g.add_arc("c", "y", z(g.group(), 1));
  std::vector<VertexId> x = {g.vertex("c")};
  EXPECT_FALSE(is_3contractible(g, g.vertex("s"), g.vertex("t"), x));
  EXPECT_THROW(three_contract(g, g.vertex("s"), g.vertex("t"), x), std::invalid_argument);
}

TEST(Contraction, DegreeThreeVertexOfK4) {
  LabeledGraph g = fixtures::complete_graph(4);
  auto found = find_3contractible(g, 0, 1);
  ASSERT_TRUE(found.has_value());
  // Boundary {0,1,2} is the first triple, leaving {3}.
  EXPECT_EQ(*found, std::vector<VertexId>{3});
  EXPECT_TRUE(oracle::all_cycles_balanced(boundary_subgraph(g, *found)));
}

TEST(Contraction, NoThreeContractibleWhenStarsAreUnbalanced) {
  LabeledGraph g = fixtures::complete_graph(4);
  g.add_arc(2, 3, make_scalar(g.group(), 1));
  EXPECT_FALSE(find_3contractible(g, 0, 1).has_value());
}

TEST(Contraction, ExpandConsecutiveTriangleArcs) {
  LabeledGraph g = star_graph("1");
  VertexId s = g.vertex("s"), t = g.vertex("t"), y = g.vertex("y");
  std::vector<VertexId> x = {g.vertex("c")};
  Contraction c = three_contract(g, s, t, x);
  ArcId sy = -1, yt = -1;
  for (const TriangleArc& a : c.record.triangle) {
    std::set<VertexId> ends = {a.tail, a.head};
    if (ends == std::set<VertexId>{s, y}) sy = a.arc;
    if (ends == std::set<VertexId>{y, t}) yt = a.arc;
  }
  ASSERT_GE(sy, 0);
  ASSERT_GE(yt, 0);
  Path p{s, {step_from(c.graph, sy, s), step_from(c.graph, yt, y)}};
  ASSERT_TRUE(validate_path(c.graph, p, s, t));
  Path e = expand_path(g, std::vector<ContractionRecord>{c.record}, p);
  EXPECT_TRUE(validate_path(g, e, s, t));
  EXPECT_EQ(walk_vertices(g, e), (std::vector<VertexId>{s, g.vertex("c"), t}));
  EXPECT_EQ(walk_label(g, e), walk_label(c.graph, p));
}

TEST(Contraction, ExpandUntouchedPath) {
  LabeledGraph g = fixtures::f1();
  Path p{g.vertex("s"), {{0, Direction::kForward}}};
  EXPECT_EQ(expand_path(g, {}, p), p);
}

TEST(Contraction, RandomContractionsPreserveLabels) {
  Rng rng(41);
  std::vector<GroupSpec> specs = {GroupSpec::cyclic(3), GroupSpec::symmetric(3),
                                  GroupSpec::free({"a", "b"})};
  int done = 0;
  for (int i = 0; i < 2000 && done < 150; ++i) {
    const GroupSpec& spec = specs[i % 3];
    LabeledGraph g = normalize_to_D(random_graph(rng, 7, 12, spec, 0.6), 0, 6);
    if (g.vertex_count() < 4) continue;
    std::optional<Contraction> c;
    if (auto x3 = find_3contractible(g, 0, 6)) {
      c = three_contract(g, 0, 6, *x3);
    } else if (auto cut = find_2cut(g)) {
      std::vector<VertexId> cutv = {(*cut)[0], (*cut)[1]};
      for (const auto& comp : components(g, cutv)) {
        if (is_2contractible(g, 0, 6, comp)) {
          c = two_contract(g, 0, 6, comp);
          break;
        }
      }
    }
    if (!c) continue;
    ++done;
    oracle::LabelSet after = oracle::label_set_bruteforce(c->graph, 0, 6, 1000);
    EXPECT_EQ(labels_of(c->graph, 0, 6), labels_of(g, 0, 6));
    for (std::size_t k = 0; k < after.labels.size(); ++k) {
      Path e = expand_path(g, std::vector<ContractionRecord>{c->record}, after.witnesses[k]);
      EXPECT_TRUE(validate_path(g, e, 0, 6));
      EXPECT_EQ(walk_label(g, e), after.labels[k]);
    }
  }
  EXPECT_EQ(done, 150);
}

}  // namespace
}  // namespace glp
