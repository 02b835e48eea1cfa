// Small named graphs shared by the tests.

#ifndef GLP_TESTS_FIXTURES_H_
#define GLP_TESTS_FIXTURES_H_

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp::fixtures {

inline GroupElement z(const GroupSpec& spec, std::int64_t v) {
  return make_scalar(spec, v);
}

inline LabeledGraph build(
    const GroupSpec& spec,
    const std::vector<std::tuple<std::string, std::string, std::string>>& arcs) {
  LabeledGraph g(spec);
  for (const auto& [u, v, l] : arcs) g.add_arc(u, v, parse_element(spec, l));
  return g;
}

// s->t:0, s->u:0, u->t:1 over Z_3.
inline LabeledGraph f1() {
  return build(GroupSpec::cyclic(3), {{"s", "t", "0"}, {"s", "u", "0"}, {"u", "t", "1"}});
}

// Digon x->y labeled 0 and 1 over Z_3.
inline LabeledGraph f3() {
  return build(GroupSpec::cyclic(3), {{"x", "y", "0"}, {"x", "y", "1"}});
}

// 4-cycle s->a:0, a->t:1, s->b:0, b->t:0 over Z_3.
inline LabeledGraph f5() {
  return build(GroupSpec::cyclic(3),
               {{"s", "a", "0"}, {"a", "t", "1"}, {"s", "b", "0"}, {"b", "t", "0"}});
}

inline LabeledGraph triple_parallel() {
  return build(GroupSpec::cyclic(3), {{"s", "t", "0"}, {"s", "t", "1"}, {"s", "t", "2"}});
}

// Six vertices s, v1..v4, t with identity arcs s-v1, s-v2, v1-v2, v3-v4, v3-t,
// v4-t and parallel pairs v1->v3, v2->v4 labeled 1 and 0, over Z_3.
inline LabeledGraph case_b() {
  return build(GroupSpec::cyclic(3), {{"s", "v1", "0"},
                                      {"s", "v2", "0"},
                                      {"v1", "v2", "0"},
                                      {"v3", "v4", "0"},
                                      {"v3", "t", "0"},
                                      {"v4", "t", "0"},
                                      {"v1", "v3", "1"},
                                      {"v1", "v3", "0"},
                                      {"v2", "v4", "1"},
                                      {"v2", "v4", "0"}});
}

// Cube drawn as two concentric 4-cycles o0..o3 (outer, with o0 = s and
// o1 = t) and i0..i3 (inner) joined by rungs o_k -> i_k.  The s-t arc reads
// (1,2), the outer path s,o3,o2,t reads (1,3); the inner 4-cycle is the only
// unbalanced inner face.
inline LabeledGraph ladder() {
  return build(GroupSpec::symmetric(3), {{"s", "t", "(1,2)"},
                                         {"s", "o3", "id"},
                                         {"o3", "o2", "id"},
                                         {"o2", "t", "(1,3)"},
                                         {"i0", "i1", "(1,2)"},
                                         {"i0", "i3", "id"},
                                         {"i3", "i2", "id"},
                                         {"i2", "i1", "(1,3)"},
                                         {"s", "i0", "id"},
                                         {"t", "i1", "id"},
                                         {"o2", "i2", "id"},
                                         {"o3", "i3", "id"}});
}

// The ladder with i3->i2 relabeled so that a rung face is unbalanced too.
inline LabeledGraph ladder_two_faces() {
  LabeledGraph g = ladder();
  const GroupSpec& spec = g.group();
  for (const Arc& a : g.arcs()) {
    if (g.name(a.tail) == "i3" && g.name(a.head) == "i2") {
      g.set_arc(a.id, a.tail, a.head, parse_element(spec, "(2,3)"));
    }
  }
  return g;
}

// The cube with identity labels except at s, where arcs read (1,2) or (1,3).
inline LabeledGraph cube_case_a() {
  return build(GroupSpec::symmetric(3), {{"s", "t", "(1,2)"},
                                         {"s", "o3", "(1,3)"},
                                         {"o3", "o2", "id"},
                                         {"o2", "t", "id"},
                                         {"i0", "i1", "id"},
                                         {"i0", "i3", "id"},
                                         {"i3", "i2", "id"},
                                         {"i2", "i1", "id"},
                                         {"s", "i0", "(1,2)"},
                                         {"t", "i1", "id"},
                                         {"o2", "i2", "id"},
                                         {"o3", "i3", "id"}});
}

// K_{3,4} with parts a0..a2 and b0..b3, s = a0 and t = b0; two arcs away
// from the terminals carry non-identity labels and the s-t arc reads (1,2).
inline LabeledGraph k34() {
  LabeledGraph g(GroupSpec::symmetric(3));
  const GroupSpec& spec = g.group();
  const std::vector<std::string> a = {"s", "a1", "a2"};
  const std::vector<std::string> b = {"t", "b1", "b2", "b3"};
  for (const auto& u : a) {
    for (const auto& v : b) {
      std::string label = "id";
      if (u == "s" && v == "t") label = "(1,2)";
      if (u == "a2" && v == "b3") label = "(1,2,3)";
      if (u == "a1" && v == "b2") label = "(1,2)";
      g.add_arc(u, v, parse_element(spec, label));
    }
  }
  return g;
}

inline LabeledGraph complete_graph(int n) {
  LabeledGraph g(GroupSpec::cyclic(3));
  for (int i = 0; i < n; ++i) g.add_vertex("k" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_arc(i, j, make_scalar(g.group(), 0));
  }
  return g;
}

inline LabeledGraph k33() {
  LabeledGraph g(GroupSpec::cyclic(3));
  for (const char* u : {"a0", "a1", "a2"}) {
    for (const char* v : {"b0", "b1", "b2"}) {
      g.add_arc(u, v, make_scalar(g.group(), 0));
    }
  }
  return g;
}

inline LabeledGraph cycle_graph(int n) {
  LabeledGraph g(GroupSpec::cyclic(3));
  for (int i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n, make_scalar(g.group(), 0));
  return g;
}

}  // namespace glp::fixtures

#endif  // GLP_TESTS_FIXTURES_H_
