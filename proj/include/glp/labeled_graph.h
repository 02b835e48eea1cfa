// Group-labeled multigraphs, walks and their labels.
//
// A LabeledGraph is a loopless directed multigraph whose arcs carry group
// elements.  The direction of an arc only matters for labels: traversing an
// arc backwards contributes the inverse of its label.  The label of a walk is
// the product of its step labels taken right to left, i.e. the last step is
// the leftmost factor.
//
// Vertex and arc identifiers are stable: subgraphs keep the identifiers of
// the graph they were taken from, and new arcs never reuse an identifier of
// the parent graph.

#ifndef GLP_LABELED_GRAPH_H_
#define GLP_LABELED_GRAPH_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "glp/group.h"

namespace glp {

using VertexId = int;
using ArcId = int;

struct Arc {
  ArcId id = -1;
  VertexId tail = -1;
  VertexId head = -1;
  GroupElement label;
  // Marks arcs that are not part of the input, such as the auxiliary s-t arc.
  bool is_virtual = false;
};

enum class Direction { kForward, kBackward };

struct Step {
  ArcId arc = -1;
  Direction direction = Direction::kForward;
  friend bool operator==(const Step&, const Step&) = default;
};

struct Walk {
  VertexId start = -1;
  std::vector<Step> steps;
  friend bool operator==(const Walk&, const Walk&) = default;
};

// A walk whose vertices are pairwise distinct.  Checked by validate_path.
using Path = Walk;

class InvalidWalk : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LabeledGraph {
 public:
  explicit LabeledGraph(GroupSpec spec);

  const GroupSpec& group() const { return spec_; }

  // Returns the existing vertex when `name` is already present.
  VertexId add_vertex(std::string_view name);
  ArcId add_arc(VertexId tail, VertexId head, GroupElement label,
                bool is_virtual = false);
  ArcId add_arc(std::string_view tail, std::string_view head,
                GroupElement label);
  void set_arc(ArcId id, VertexId tail, VertexId head, GroupElement label);

  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;
  const std::string& name(VertexId v) const;

  // Present vertices in ascending id order.
  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool has_vertex(VertexId v) const;
  std::size_t vertex_count() const { return vertices_.size(); }

  // Arcs in ascending id order.
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  bool has_arc(ArcId id) const;
  const Arc& arc(ArcId id) const;
  // Arc ids incident to `v`, ascending.
  std::span<const ArcId> incident(VertexId v) const;
  VertexId other_end(ArcId id, VertexId v) const;

  // Exclusive upper bound on vertex ids, including removed vertices.
  VertexId id_bound() const { return static_cast<VertexId>(names_.size()); }
  ArcId next_arc_id() const { return next_arc_id_; }

  // Induced subgraph on the given vertices (identifiers preserved).
  LabeledGraph induced(std::span<const VertexId> keep) const;
  LabeledGraph without_vertices(std::span<const VertexId> removed) const;
  LabeledGraph without_arcs(std::span<const ArcId> removed) const;
  // Same vertices, only the listed arcs.
  LabeledGraph with_arcs(std::span<const ArcId> kept) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  void insert_arc(Arc arc);
  LabeledGraph empty_like() const;

  GroupSpec spec_;
  std::vector<std::string> names_;
  std::vector<bool> present_;
  std::vector<VertexId> vertices_;
  std::vector<Arc> arcs_;
  std::vector<int> arc_pos_;
  std::vector<std::vector<ArcId>> incident_;
  ArcId next_arc_id_ = 0;
};

bool operator==(const Arc& a, const Arc& b);

// Label of arc `id` when it is traversed so that it enters `entered`.
GroupElement arc_traverse_label(const LabeledGraph& g, ArcId id,
                                VertexId entered);

VertexId step_source(const LabeledGraph& g, const Step& step);
VertexId step_target(const LabeledGraph& g, const Step& step);

// Vertex sequence v0, .., vl of a walk.  Throws InvalidWalk when a step does
// not continue from the previous endpoint or names a missing arc.
std::vector<VertexId> walk_vertices(const LabeledGraph& g, const Walk& w);
VertexId walk_end(const LabeledGraph& g, const Walk& w);
bool is_valid_walk(const LabeledGraph& g, const Walk& w);

// Right-to-left product of the step labels.
GroupElement walk_label(const LabeledGraph& g, const Walk& w);

Walk reverse_walk(const LabeledGraph& g, const Walk& w);
// Requires walk_end(a) == b.start.
Walk concat_walks(const LabeledGraph& g, const Walk& a, const Walk& b);

// True iff `p` is an s-t walk in `g` with pairwise distinct vertices.
bool validate_path(const LabeledGraph& g, const Path& p, VertexId s,
                   VertexId t);

// Comma-separated vertex names, e.g. "s,u,t".
std::string format_walk(const LabeledGraph& g, const Walk& w);

// Removes arcs equivalent to an earlier arc: parallel with equal labels or
// anti-parallel with mutually inverse labels.  The lowest id survives.
LabeledGraph dedupe_equivalent_arcs(const LabeledGraph& g);

// The maximal subgraph in which every vertex lies on an s-t path and no two
// arcs are equivalent.  Computed as the block of G + {s,t} containing the
// added edge.  When s and t are disconnected the result has vertices s and t
// only and no arcs.
LabeledGraph normalize_to_D(const LabeledGraph& g, VertexId s, VertexId t);

// Replaces arcs by equivalent ones so that arcs at s leave s and arcs at t
// enter t.  An arc between s and t is oriented from s to t.
LabeledGraph orient_around_terminals(const LabeledGraph& g, VertexId s,
                                     VertexId t);

// BFS path from s to t over the underlying graph, preferring low vertex ids
// and then low arc ids.  `blocked` vertices are avoided.
std::optional<Path> find_path(const LabeledGraph& g, VertexId s, VertexId t,
                              std::span<const VertexId> blocked = {});

// Calls `visit(path)` for every simple s-t path, in depth-first order with
// ascending arc ids; stops early when `visit` returns false.
template <typename Visitor>
void for_each_simple_path(const LabeledGraph& g, VertexId s, VertexId t,
                          Visitor&& visit);

}  // namespace glp

#include "glp/labeled_graph_inl.h"

#endif  // GLP_LABELED_GRAPH_H_
