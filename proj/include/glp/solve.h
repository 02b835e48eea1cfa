// Counting s-t path labels up to three, finding three paths with distinct
// labels, and paths avoiding two forbidden labels.

#ifndef GLP_SOLVE_H_
#define GLP_SOLVE_H_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "glp/labeled_graph.h"
#include "glp/planar.h"

namespace glp {

enum class LabelCount { kZero, kOne, kTwo, kThreeOrMore };

struct LabeledPath {
  GroupElement label;
  Path path;
};

// For kZero, kOne and kTwo the witnesses attain exactly the label set.  For
// kThreeOrMore there are three witnesses with pairwise distinct labels.
// Witnesses are paths of the input graph.
struct LabelSummary {
  LabelCount count = LabelCount::kZero;
  std::vector<LabeledPath> witnesses;
};

// Observation points inside test_two_labels, for testing and statistics.
struct SolveHooks {
  // After every 2-contraction in the cut loop: the graph before it, the
  // contracted graph and the piece that was summarized.
  std::function<void(const LabeledGraph& before, const LabeledGraph& after,
                     const LabeledGraph& piece)>
      on_split;
  // Every embedding examined by the planar test.
  EmbeddingObserver on_embedding;
  // Name of the step that settled each (sub)problem: "empty", "parallel",
  // "balanced", "commuting", "split", "enumerate", "planar-A", "planar-C" or
  // "planar-reject".
  std::function<void(std::string_view)> on_decision;
};

LabelSummary test_two_labels(const LabeledGraph& g, VertexId s, VertexId t,
                             const SolveHooks& hooks = {});

// Three s-t paths with pairwise distinct labels.  Throws std::logic_error
// when fewer than three labels exist.
std::vector<LabeledPath> find_three_paths(const LabeledGraph& g, VertexId s,
                                          VertexId t,
                                          const SolveHooks& hooks = {});

// An s-t path whose label is neither alpha nor beta, or nullopt when every
// s-t path has label alpha or beta.  Throws std::invalid_argument when
// alpha == beta.
std::optional<LabeledPath> forbidden_two_path(const LabeledGraph& g, VertexId s,
                                              VertexId t,
                                              const GroupElement& alpha,
                                              const GroupElement& beta,
                                              const SolveHooks& hooks = {});

// The full label set over Z_3, one witness per label, sorted by label.
// Throws GroupMismatch for other groups.
LabelSummary z3_labels(const LabeledGraph& g, VertexId s, VertexId t,
                       const SolveHooks& hooks = {});

}  // namespace glp

#endif  // GLP_SOLVE_H_
