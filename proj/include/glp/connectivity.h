// Vertex cuts and vertex-disjoint routing on the underlying undirected graph.

#ifndef GLP_CONNECTIVITY_H_
#define GLP_CONNECTIVITY_H_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp {

// Connected components of G - removed, each sorted, ordered by smallest
// member.
std::vector<std::vector<VertexId>> components(
    const LabeledGraph& g, std::span<const VertexId> removed = {});

bool is_connected(const LabeledGraph& g);

// k pairwise vertex-disjoint paths, each from a distinct source to a distinct
// sink.  A vertex that is both a source and a sink yields a length-0 path.
// Computed by augmenting paths on the vertex-split unit-capacity network;
// returns nullopt when fewer than k such paths exist.
std::optional<std::vector<Path>> vertex_disjoint_paths(
    const LabeledGraph& g, std::span<const VertexId> sources,
    std::span<const VertexId> sinks, int k);

// The lexicographically first vertex pair whose removal disconnects g, or
// nullopt.
std::optional<std::array<VertexId, 2>> find_2cut(const LabeledGraph& g);

// Every vertex triple whose removal disconnects g, ascending.
std::vector<std::array<VertexId, 3>> enumerate_3cuts(const LabeledGraph& g);

// |V| > 2 and no single vertex disconnects g (g itself connected).
bool is_biconnected(const LabeledGraph& g);
// |V| > 3 and no set of at most two vertices disconnects g.
bool is_triconnected(const LabeledGraph& g);

}  // namespace glp

#endif  // GLP_CONNECTIVITY_H_
