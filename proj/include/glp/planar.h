// Combinatorial plane embeddings and the planar two-label test used on large
// 3-connected instances.

#ifndef GLP_PLANAR_H_
#define GLP_PLANAR_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp {

// Rotation system plus its face boundary walks.  A face is traced by entering
// a vertex along an arc and leaving along the arc that follows it in the
// rotation of that vertex.
struct Embedding {
  std::map<VertexId, std::vector<ArcId>> rotation;
  std::vector<Walk> faces;
  int outer_face = 0;
};

// Traces the faces of a rotation system.  Arcs without a rotation entry at
// one of their endpoints make the result meaningless; see check_embedding.
std::vector<Walk> trace_faces(const LabeledGraph& g,
                              const std::map<VertexId, std::vector<ArcId>>& rotation);

// Embedding of a connected multigraph, or nullopt when it is not planar.
// With `outer_edge`, the outer face is the first face whose boundary uses
// that arc; faces_containing lists the alternatives.  Throws
// std::invalid_argument on disconnected input.
std::optional<Embedding> planar_embed(const LabeledGraph& g,
                                      std::optional<ArcId> outer_edge = {});

std::vector<int> faces_containing(const Embedding& e, ArcId arc);

// Empty when every arc appears once in the rotation of each endpoint, the
// faces are exactly the traced faces, and |V| - |E| + |F| = 2.  Otherwise a
// description of the first violation.
std::optional<std::string> check_embedding(const LabeledGraph& g,
                                           const Embedding& e);

GroupElement face_label(const LabeledGraph& g, const Embedding& e, int face);

// True iff G - s is balanced and every arc at s reads alpha or beta once G - s
// has been shifted to the identity, or the same with the roles of s and t
// swapped.  G itself must be unbalanced.
bool check_caseA(const LabeledGraph& g, VertexId s, VertexId t,
                 const GroupElement& alpha, const GroupElement& beta);

enum class D0Verdict { kInD0, kNotInD0, kThreeLabelsDetected };

struct D0Result {
  D0Verdict verdict = D0Verdict::kNotInD0;
  std::string reason;
};

using EmbeddingObserver =
    std::function<void(const LabeledGraph&, const Embedding&)>;

// Searches for a plane embedding with s and t on an outer face whose two s-t
// sides read alpha and beta, and exactly one unbalanced inner face.
// Requires a 3-connected graph on more than 6 vertices with an s-t arc and
// alpha*beta^-1 != beta*alpha^-1; throws std::invalid_argument otherwise.
// Every embedding examined is passed to `observer`.
D0Result check_caseC(const LabeledGraph& g, VertexId s, VertexId t,
                     const GroupElement& alpha, const GroupElement& beta,
                     const EmbeddingObserver& observer = {});

// Case A, then Case C.  Inputs outside the requirements of check_caseC give
// kNotInD0 with the failed requirement as reason.
D0Result check_D0(const LabeledGraph& g, VertexId s, VertexId t,
                  const GroupElement& alpha, const GroupElement& beta,
                  const EmbeddingObserver& observer = {});

}  // namespace glp

#endif  // GLP_PLANAR_H_
