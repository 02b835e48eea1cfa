// 2- and 3-contractions of vertex sets and expansion of paths back through
// them.
//
// For X ⊆ V \ {s,t}, the boundary subgraph G⟦X⟧ is the subgraph induced by X
// and its neighbourhood N(X), minus the arcs joining two vertices of N(X).
// A contraction deletes X and summarizes G⟦X⟧ by arcs between boundary
// vertices carrying the labels of boundary-to-boundary paths through it.
// Neither contraction changes the set of s-t path labels.

#ifndef GLP_CONTRACTION_H_
#define GLP_CONTRACTION_H_

#include <optional>
#include <span>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp {

enum class ContractionKind { kTwo, kThree };

// An arc introduced by a contraction, with a path through G⟦X⟧ from its tail
// to its head that has the same label.
struct AddedArc {
  ArcId arc = -1;
  VertexId tail = -1;
  VertexId head = -1;
  GroupElement label;
  Path witness;
};

struct TriangleArc {
  ArcId arc = -1;
  VertexId tail = -1;
  VertexId head = -1;
};

struct ContractionRecord {
  ContractionKind kind = ContractionKind::kTwo;
  std::vector<VertexId> removed;   // X, ascending
  std::vector<VertexId> boundary;  // N(X), ascending
  std::vector<AddedArc> added;
  // Three-contractions only: the balanced triangle on the boundary, one arc
  // per boundary pair, either newly added or an existing equivalent arc.
  std::vector<TriangleArc> triangle;
  // G⟦X⟧ as it was in the graph before contraction; witnesses live here.
  LabeledGraph piece{GroupSpec::integers()};
};

struct Contraction {
  LabeledGraph graph;
  ContractionRecord record;
};

// A label of paths between two boundary vertices with a path attaining it.
struct LabelWitness {
  GroupElement label;
  Path path;
};

std::vector<VertexId> neighborhood(const LabeledGraph& g,
                                   std::span<const VertexId> x);

// G⟦X⟧.
LabeledGraph boundary_subgraph(const LabeledGraph& g,
                               std::span<const VertexId> x);

bool is_2contractible(const LabeledGraph& g, VertexId s, VertexId t,
                      std::span<const VertexId> x);
bool is_3contractible(const LabeledGraph& g, VertexId s, VertexId t,
                      std::span<const VertexId> x);

// 2-contraction of X with N(X) = {x, y}, x < y.  `labels` lists the labels of
// x-y paths in G⟦X⟧ with witnesses running from x to y.  One x->y arc is
// added per label unless an equivalent arc is already present.  Throws
// std::invalid_argument when X is not 2-contractible.
Contraction two_contract(const LabeledGraph& g, VertexId s, VertexId t,
                         std::span<const VertexId> x,
                         std::span<const LabelWitness> labels);

// Same, with the labels of G⟦X⟧ found by exhaustive path enumeration.
Contraction two_contract(const LabeledGraph& g, VertexId s, VertexId t,
                         std::span<const VertexId> x);

// 3-contraction of X.  Throws std::invalid_argument when X is not
// 3-contractible.
Contraction three_contract(const LabeledGraph& g, VertexId s, VertexId t,
                           std::span<const VertexId> x);

// First 3-contractible set: boundary triples in ascending order, then the
// components of G - triple by smallest vertex.
std::optional<std::vector<VertexId>> find_3contractible(const LabeledGraph& g,
                                                        VertexId s, VertexId t);

// Rewrites a path of the graph obtained after applying `records` in order
// (records.front() first) into a path of `original` with the same label.
// Throws std::logic_error if the result is not a simple path of `original`.
Path expand_path(const LabeledGraph& original,
                 std::span<const ContractionRecord> records, const Path& p);

}  // namespace glp

#endif  // GLP_CONTRACTION_H_
