#include <gtest/gtest.h>

#include "glp/instance_io.h"
#include "glp/random_instance.h"

namespace glp {
namespace {

TEST(InstanceIo, ParsesSmallInstance) {
  ParsedInstance p = parse_instance("group cyclic 3\narc s u 1\narc u t 2\n");
  EXPECT_EQ(p.graph.vertex_count(), 3u);
  EXPECT_EQ(p.graph.arc_count(), 2u);
  EXPECT_EQ(p.graph.group(), GroupSpec::cyclic(3));
  EXPECT_TRUE(p.warnings.empty());
  EXPECT_EQ(p.graph.vertex("s"), 0);
  EXPECT_EQ(p.graph.vertex("t"), 1);
  EXPECT_EQ(p.graph.vertex("u"), 2);
}

TEST(InstanceIo, LoopIsAnError) {
  try {
    parse_instance("group cyclic 3\narc u u 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(InstanceIo, FreeWords) {
  ParsedInstance p = parse_instance("group free a b\narc x y a.b'\n");
  const auto& w = std::get<Word>(p.graph.arc(0).label.payload());
  EXPECT_EQ(w.letters, (std::vector<int>{1, -2}));
}

TEST(InstanceIo, CommentsAndEdges) {
  ParsedInstance p = parse_instance("# header\nedge a b  # trailing\nvertex c\n");
  EXPECT_EQ(p.graph.group(), GroupSpec::cyclic(1));
  EXPECT_EQ(p.graph.vertex_count(), 3u);
  EXPECT_EQ(p.graph.arc_count(), 1u);
}

TEST(InstanceIo, Errors) {
  EXPECT_THROW(parse_instance("arc a b 1\n"), ParseError);
  EXPECT_THROW(parse_instance("group cyclic 3\narc a b 7x\n"), ParseError);
  EXPECT_THROW(parse_instance("group cyclic 3\nbogus a b\n"), ParseError);
  EXPECT_THROW(parse_instance("group quaternion\n"), ParseError);
  EXPECT_THROW(parse_instance("group cyclic 3\narc a-b c 1\n"), ParseError);
  EXPECT_THROW(read_instance("/nonexistent/file.glg"), std::exception);
}

TEST(InstanceIo, DuplicateVertexWarns) {
  ParsedInstance p = parse_instance("vertex a\nvertex a\n");
  EXPECT_EQ(p.warnings.size(), 1u);
}

TEST(InstanceIo, RoundTrip) {
  Rng rng(81);
  std::vector<GroupSpec> specs = {GroupSpec::cyclic(5), GroupSpec::integers(),
                                  GroupSpec::symmetric(4), GroupSpec::free({"a", "b"})};
  for (int i = 0; i < 100; ++i) {
    LabeledGraph g = random_graph(rng, 6, 9, specs[i % 4], 0.2);
    std::string text = serialize_instance(g);
    ParsedInstance p = parse_instance(text);
    EXPECT_EQ(serialize_instance(p.graph), text);
    ASSERT_EQ(p.graph.arc_count(), g.arc_count());
    for (const Arc& a : g.arcs()) {
      const Arc& b = p.graph.arc(a.id);
      EXPECT_EQ(p.graph.name(b.tail), g.name(a.tail));
      EXPECT_EQ(p.graph.name(b.head), g.name(a.head));
      EXPECT_EQ(b.label, a.label);
    }
  }
}

}  // namespace
}  // namespace glp
