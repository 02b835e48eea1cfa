// Exhaustive reference implementations for small graphs.  They share no
// traversal code with the rest of the library and are meant for
// cross-checking it.

#ifndef GLP_ORACLE_H_
#define GLP_ORACLE_H_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp::oracle {

// Visits every simple s-t path once; parallel arcs give distinct paths.
// Branches by ascending neighbour id, then arc id.  Stops when `visit`
// returns false.
void enumerate_st_paths(const LabeledGraph& g, VertexId s, VertexId t,
                        const std::function<bool(const Path&)>& visit);

std::size_t count_st_paths(const LabeledGraph& g, VertexId s, VertexId t);

struct LabelSet {
  // Distinct labels in order of discovery, with the first path reaching each.
  std::vector<GroupElement> labels;
  std::vector<Path> witnesses;
  // Set when more than `cap` labels exist; `labels` then holds cap + 1 of them.
  bool overflow = false;
};

LabelSet label_set_bruteforce(const LabeledGraph& g, VertexId s, VertexId t,
                              std::size_t cap);

// Visits every simple cycle once, as a closed walk starting at its smallest
// vertex, in the direction whose first arc id is smaller than its last.
// Two parallel arcs form a cycle of length 2.
void enumerate_cycles(const LabeledGraph& g,
                      const std::function<bool(const Walk&)>& visit);

bool all_cycles_balanced(const LabeledGraph& g);

// Some simple cycle has a label γ ≠ 1 with γ² = 1.
bool self_inverse_unbalanced_cycle_exists(const LabeledGraph& g);

// Pairwise vertex-disjoint paths joining each terminal pair, by backtracking.
std::optional<std::vector<Path>> disjoint_paths_bruteforce(
    const LabeledGraph& g,
    const std::vector<std::pair<VertexId, VertexId>>& pairs);

}  // namespace glp::oracle

#endif  // GLP_ORACLE_H_
