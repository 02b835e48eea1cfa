#ifndef GLP_LABELED_GRAPH_INL_H_
#define GLP_LABELED_GRAPH_INL_H_

#include <utility>
#include <vector>

namespace glp {
namespace internal {

template <typename Visitor>
bool simple_path_dfs(const LabeledGraph& g, VertexId at, VertexId t,
                     std::vector<bool>& on_path, Walk& current,
                     Visitor& visit) {
  if (at == t) return visit(static_cast<const Path&>(current));
  for (ArcId id : g.incident(at)) {
    VertexId next = g.other_end(id, at);
    if (on_path[next]) continue;
    const Arc& a = g.arc(id);
    current.steps.push_back(
        {id, a.tail == at ? Direction::kForward : Direction::kBackward});
    on_path[next] = true;
    bool keep_going = simple_path_dfs(g, next, t, on_path, current, visit);
    on_path[next] = false;
    current.steps.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace internal

template <typename Visitor>
void for_each_simple_path(const LabeledGraph& g, VertexId s, VertexId t,
                          Visitor&& visit) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) return;
  std::vector<bool> on_path(g.id_bound(), false);
  Walk current{s, {}};
  on_path[s] = true;
  internal::simple_path_dfs(g, s, t, on_path, current, visit);
}

}  // namespace glp

#endif  // GLP_LABELED_GRAPH_INL_H_
