// Disjoint paths problems as group-labeled path problems.
//
// For two pairs, every edge becomes an arc labeled 0 in Z_3 and one arc
// t1 -> s2 labeled 1 is added.  An s1-t2 path has label 1 exactly when it
// uses that arc forwards, and then its two halves are disjoint s1-t1 and
// s2-t2 paths.  For k pairs the labels live in S_{2k-1} and the arc
// t_i -> s_{i+1} carries the 3-cycle (2i-1, 2i+1, 2i).

#ifndef GLP_REDUCE_H_
#define GLP_REDUCE_H_

#include <optional>
#include <utility>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp {

struct ReducedInstance {
  LabeledGraph graph;
  VertexId s = -1;
  VertexId t = -1;
  GroupElement target;
  // Arcs t_i -> s_{i+1}, in order.
  std::vector<ArcId> links;
};

// Vertex ids and arc ids of `g` are kept; labels of `g` are ignored.  Throws
// std::invalid_argument unless the four terminals are distinct vertices.
ReducedInstance reduce_2disjoint(const LabeledGraph& g, VertexId s1,
                                 VertexId t1, VertexId s2, VertexId t2);

// Vertex-disjoint s1-t1 and s2-t2 paths in `g`, or nullopt.
std::optional<std::pair<Path, Path>> solve_2disjoint(const LabeledGraph& g,
                                                     VertexId s1, VertexId t1,
                                                     VertexId s2, VertexId t2);

// Construction only.  `pairs` must hold k >= 2 pairs of 2k distinct vertices.
ReducedInstance reduce_kdisjoint(
    const LabeledGraph& g,
    const std::vector<std::pair<VertexId, VertexId>>& pairs);

}  // namespace glp

#endif  // GLP_REDUCE_H_
