#include "glp/reduce.h"

#include <algorithm>
#include <set>

#include "glp/solve.h"

namespace glp {
namespace {

void check_terminals(const LabeledGraph& g,
                     const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::set<VertexId> seen;
  for (const auto& [a, b] : pairs) {
    for (VertexId v : {a, b}) {
      if (!g.has_vertex(v)) {
        throw std::invalid_argument("terminal is not a vertex of the graph");
      }
      if (!seen.insert(v).second) {
        throw std::invalid_argument("terminals must be distinct");
      }
    }
  }
}

// Copies the vertices and arcs of `g` with every arc labeled by the identity
// of `spec`.  Identifiers are preserved by creating placeholder vertices and
// arcs for gaps and deleting them afterwards.
LabeledGraph relabel_trivially(const LabeledGraph& g, const GroupSpec& spec) {
  LabeledGraph out(spec);
  std::vector<VertexId> placeholders;
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    VertexId id = out.add_vertex(g.name(v));
    if (!g.has_vertex(v)) placeholders.push_back(id);
  }
  std::vector<ArcId> dummy;
  VertexId anchor_a = -1, anchor_b = -1;
  if (g.vertex_count() >= 2) {
    anchor_a = g.vertices()[0];
    anchor_b = g.vertices()[1];
  }
  for (const Arc& a : g.arcs()) {
    while (out.next_arc_id() < a.id) {
      dummy.push_back(out.add_arc(anchor_a, anchor_b, identity(spec)));
    }
    out.add_arc(a.tail, a.head, identity(spec));
  }
  return out.without_arcs(dummy).without_vertices(placeholders);
}

}  // namespace

ReducedInstance reduce_2disjoint(const LabeledGraph& g, VertexId s1,
                                 VertexId t1, VertexId s2, VertexId t2) {
  check_terminals(g, {{s1, t1}, {s2, t2}});
  const GroupSpec spec = GroupSpec::cyclic(3);
  ReducedInstance out{relabel_trivially(g, spec), s1, t2,
                      make_scalar(spec, 1), {}};
  out.links.push_back(out.graph.add_arc(t1, s2, make_scalar(spec, 1)));
  return out;
}

std::optional<std::pair<Path, Path>> solve_2disjoint(const LabeledGraph& g,
                                                     VertexId s1, VertexId t1,
                                                     VertexId s2, VertexId t2) {
  ReducedInstance r = reduce_2disjoint(g, s1, t1, s2, t2);
  LabelSummary labels = z3_labels(r.graph, r.s, r.t);
  auto hit = std::find_if(labels.witnesses.begin(), labels.witnesses.end(),
                          [&](const LabeledPath& lp) { return lp.label == r.target; });
  if (hit == labels.witnesses.end()) return std::nullopt;

  const ArcId link = r.links.front();
  const Path& p = hit->path;
  auto at = std::find_if(p.steps.begin(), p.steps.end(),
                         [&](const Step& st) { return st.arc == link; });
  if (at == p.steps.end() || at->direction != Direction::kForward ||
      std::count_if(p.steps.begin(), p.steps.end(),
                    [&](const Step& st) { return st.arc == link; }) != 1) {
    throw std::logic_error("label-1 path does not cross the link arc once");
  }
  Path first{s1, {p.steps.begin(), at}};
  Path second{s2, {at + 1, p.steps.end()}};
  return std::pair{std::move(first), std::move(second)};
}

ReducedInstance reduce_kdisjoint(
    const LabeledGraph& g,
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  if (pairs.size() < 2) throw std::invalid_argument("need at least two pairs");
  check_terminals(g, pairs);
  const int k = static_cast<int>(pairs.size());
  const GroupSpec spec = GroupSpec::symmetric(2 * k - 1);
  ReducedInstance out{relabel_trivially(g, spec), pairs.front().first,
                      pairs.back().second, identity(spec), {}};
  for (int i = 1; i < k; ++i) {
    GroupElement cycle = make_cycles(spec, {{2 * i - 1, 2 * i + 1, 2 * i}});
    out.links.push_back(out.graph.add_arc(pairs[i - 1].second,
                                          pairs[i].first, cycle));
    out.target = mul(spec, cycle, out.target);
  }
  return out;
}

}  // namespace glp
