// Shifting, spanning-tree normalization and the balance-based algorithms that
// sit on top of it.
//
// Shifting by α at v multiplies the labels of arcs entering v by α on the left
// and the labels of arcs leaving v by α⁻¹ on the right.  Labels of walks that
// neither start nor end at v are unchanged, so shifting at vertices other than
// s and t never changes the set of s-t path labels.

#ifndef GLP_NORMALIZE_H_
#define GLP_NORMALIZE_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp {

LabeledGraph shift(const LabeledGraph& g, VertexId v, const GroupElement& alpha);

// Breadth-first spanning forest with vertex potentials.  potential[v] is the
// label of the tree path from v to the root of its component, so shifting by
// potential[v] at every v turns every tree arc into the identity.
struct SpanningForest {
  std::vector<VertexId> parent;     // -1 at roots and absent vertices
  std::vector<ArcId> parent_arc;    // -1 at roots and absent vertices
  std::vector<int> depth;
  std::vector<GroupElement> potential;
  std::vector<VertexId> roots;
  std::vector<bool> is_tree_arc;    // indexed by arc id
};

// Roots are taken in `preferred_roots` order first, then by smallest vertex
// id.  Children are discovered by ascending vertex id, then arc id.
SpanningForest spanning_forest(const LabeledGraph& g,
                               std::span<const VertexId> preferred_roots = {});

struct TreeNormalization {
  // (s,t)-equivalent graph: every tree arc not incident to s is the
  // identity, and arcs at s read α (leaving s) for the unique label α when
  // the graph is balanced.
  LabeledGraph graph;
  SpanningForest forest;
  // For every non-tree arc, its label after shifting at every vertex
  // including s, i.e. the label of its fundamental cycle read at t.
  std::map<ArcId, GroupElement> residual;
};

// Tree rooted at t.  Throws std::invalid_argument on disconnected input.
TreeNormalization tree_normalize(const LabeledGraph& g, VertexId s, VertexId t);

struct BalanceReport {
  bool balanced = true;
  // Fundamental cycle of the lowest-id non-identity residual arc.
  std::optional<Walk> witness;
};

BalanceReport is_balanced(const LabeledGraph& g);

// Closed walk through arc `id` and the forest path between its endpoints.
Walk fundamental_cycle(const LabeledGraph& g, const SpanningForest& forest,
                       ArcId id);

// An s-t path whose label differs from `alpha`, or nullopt when every s-t
// path has label alpha (or none exists).
std::optional<Path> nonzero_path(const LabeledGraph& g, VertexId s, VertexId t,
                                 const GroupElement& alpha);

// Two s-t paths with distinct labels obtained by routing s and t disjointly
// onto the unbalanced cycle `cycle` and going around it both ways.  Requires
// g to be D-normalized with respect to s and t.
std::pair<Path, Path> two_paths_from_cycle(const LabeledGraph& g, VertexId s,
                                           VertexId t, const Walk& cycle);

// For αβ⁻¹ = βα⁻¹: true iff g is unbalanced and, after shifting along a
// spanning tree at vertices other than s and t, arcs at s read α or β and all
// other arcs read 1 or αβ⁻¹.  Throws std::invalid_argument when αβ⁻¹ ≠ βα⁻¹.
bool commuting_two_label_test(const LabeledGraph& g, VertexId s, VertexId t,
                              const GroupElement& alpha,
                              const GroupElement& beta);

}  // namespace glp

#endif  // GLP_NORMALIZE_H_
