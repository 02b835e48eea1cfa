#include "glp/normalize.h"

#include <algorithm>
#include <deque>

#include "glp/connectivity.h"

namespace glp {

LabeledGraph shift(const LabeledGraph& g, VertexId v,
                   const GroupElement& alpha) {
  if (!g.has_vertex(v)) throw std::invalid_argument("shift at missing vertex");
  const GroupSpec& spec = g.group();
  LabeledGraph out = g;
  for (ArcId id : g.incident(v)) {
    const Arc& a = g.arc(id);
    GroupElement label = a.head == v ? mul(spec, alpha, a.label)
                                     : mul(spec, a.label, inv(spec, alpha));
    out.set_arc(id, a.tail, a.head, std::move(label));
  }
  return out;
}

SpanningForest spanning_forest(const LabeledGraph& g,
                               std::span<const VertexId> preferred_roots) {
  const GroupSpec& spec = g.group();
  SpanningForest f;
  f.parent.assign(g.id_bound(), -1);
  f.parent_arc.assign(g.id_bound(), -1);
  f.depth.assign(g.id_bound(), 0);
  f.potential.assign(g.id_bound(), identity(spec));
  f.is_tree_arc.assign(g.next_arc_id(), false);

  std::vector<bool> seen(g.id_bound(), false);
  std::vector<VertexId> order(preferred_roots.begin(), preferred_roots.end());
  order.insert(order.end(), g.vertices().begin(), g.vertices().end());
  for (VertexId root : order) {
    if (!g.has_vertex(root) || seen[root]) continue;
    f.roots.push_back(root);
    seen[root] = true;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      std::vector<std::pair<VertexId, ArcId>> next;
      for (ArcId id : g.incident(u)) next.emplace_back(g.other_end(id, u), id);
      std::sort(next.begin(), next.end());
      for (auto [v, id] : next) {
        if (seen[v]) continue;
        seen[v] = true;
        f.parent[v] = u;
        f.parent_arc[v] = id;
        f.depth[v] = f.depth[u] + 1;
        f.is_tree_arc[id] = true;
        // Tree path from v to the root: first v -> u, then u -> root.
        f.potential[v] =
            mul(spec, f.potential[u], arc_traverse_label(g, id, u));
        queue.push_back(v);
      }
    }
  }
  return f;
}

namespace {

GroupElement shifted_label(const GroupSpec& spec, const Arc& a,
                           const GroupElement& head_shift,
                           const GroupElement& tail_shift) {
  return mul(spec, mul(spec, head_shift, a.label), inv(spec, tail_shift));
}

}  // namespace

TreeNormalization tree_normalize(const LabeledGraph& g, VertexId s,
                                 VertexId t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw std::invalid_argument("tree_normalize: missing terminal");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("tree_normalize requires a connected graph");
  }
  const GroupSpec& spec = g.group();
  const VertexId root[] = {t};
  TreeNormalization out{g, spanning_forest(g, root), {}};
  const auto& potential = out.forest.potential;
  // The shift at s would be undone by the compensating shift at s, so s keeps
  // its labels on the s side.
  auto applied = [&](VertexId v) {
    return v == s ? identity(spec) : potential[v];
  };
  for (const Arc& a : g.arcs()) {
    out.graph.set_arc(a.id, a.tail, a.head,
                      shifted_label(spec, a, applied(a.head), applied(a.tail)));
    if (!out.forest.is_tree_arc[a.id]) {
      out.residual.emplace(
          a.id, shifted_label(spec, a, potential[a.head], potential[a.tail]));
    }
  }
  return out;
}

Walk fundamental_cycle(const LabeledGraph& g, const SpanningForest& forest,
                       ArcId id) {
  const Arc& a = g.arc(id);
  // Start at the tail, take the arc, then climb back through the tree.
  std::vector<Step> up_from_head;  // head -> lca
  std::vector<Step> up_from_tail;  // tail -> lca
  VertexId x = a.head;
  VertexId y = a.tail;
  auto climb = [&](VertexId& v, std::vector<Step>& steps) {
    ArcId pid = forest.parent_arc[v];
    const Arc& p = g.arc(pid);
    steps.push_back(
        {pid, p.tail == v ? Direction::kForward : Direction::kBackward});
    v = forest.parent[v];
  };
  while (forest.depth[x] > forest.depth[y]) climb(x, up_from_head);
  while (forest.depth[y] > forest.depth[x]) climb(y, up_from_tail);
  while (x != y) {
    climb(x, up_from_head);
    climb(y, up_from_tail);
  }
  Walk cycle{a.tail, {{id, Direction::kForward}}};
  cycle.steps.insert(cycle.steps.end(), up_from_head.begin(),
                     up_from_head.end());
  for (auto it = up_from_tail.rbegin(); it != up_from_tail.rend(); ++it) {
    cycle.steps.push_back({it->arc, it->direction == Direction::kForward
                                        ? Direction::kBackward
                                        : Direction::kForward});
  }
  return cycle;
}

BalanceReport is_balanced(const LabeledGraph& g) {
  const GroupSpec& spec = g.group();
  SpanningForest forest = spanning_forest(g);
  for (const Arc& a : g.arcs()) {
    if (forest.is_tree_arc[a.id]) continue;
    GroupElement residual = shifted_label(spec, a, forest.potential[a.head],
                                          forest.potential[a.tail]);
    if (!is_identity(spec, residual)) {
      return {false, fundamental_cycle(g, forest, a.id)};
    }
  }
  return {true, std::nullopt};
}

std::pair<Path, Path> two_paths_from_cycle(const LabeledGraph& g, VertexId s,
                                           VertexId t, const Walk& cycle) {
  std::vector<VertexId> ring = walk_vertices(g, cycle);
  if (ring.size() < 3 || ring.front() != ring.back()) {
    throw std::invalid_argument("two_paths_from_cycle: not a closed walk");
  }
  ring.pop_back();
  const int len = static_cast<int>(ring.size());
  std::vector<bool> on_cycle(g.id_bound(), false);
  for (VertexId v : ring) on_cycle[v] = true;

  const VertexId sources[] = {s, t};
  auto routes = vertex_disjoint_paths(g, sources, ring, 2);
  if (!routes) {
    throw std::logic_error(
        "two_paths_from_cycle: terminals cannot reach the cycle disjointly");
  }
  // Truncate each route at its first cycle vertex.
  Path from_s{s, {}}, from_t{t, {}};
  for (const Path& r : *routes) {
    Path cut{r.start, {}};
    VertexId at = r.start;
    for (const Step& step : r.steps) {
      if (on_cycle[at]) break;
      cut.steps.push_back(step);
      at = step_target(g, step);
    }
    (r.start == s ? from_s : from_t) = std::move(cut);
  }
  VertexId x = walk_end(g, from_s);
  VertexId y = walk_end(g, from_t);
  const int ix = static_cast<int>(std::find(ring.begin(), ring.end(), x) -
                                  ring.begin());
  const int iy = static_cast<int>(std::find(ring.begin(), ring.end(), y) -
                                  ring.begin());

  // Along the cycle direction from x to y, and against it.
  Walk ahead{x, {}}, behind{x, {}};
  for (int i = ix; i != iy; i = (i + 1) % len) {
    ahead.steps.push_back(cycle.steps[i]);
  }
  for (int i = ix; i != iy; i = (i + len - 1) % len) {
    const Step& step = cycle.steps[(i + len - 1) % len];
    behind.steps.push_back({step.arc, step.direction == Direction::kForward
                                          ? Direction::kBackward
                                          : Direction::kForward});
  }
  Walk to_t = reverse_walk(g, from_t);
  Path first = concat_walks(g, concat_walks(g, from_s, ahead), to_t);
  Path second = concat_walks(g, concat_walks(g, from_s, behind), to_t);
  return {std::move(first), std::move(second)};
}

std::optional<Path> nonzero_path(const LabeledGraph& g, VertexId s, VertexId t,
                                 const GroupElement& alpha) {
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) {
    throw std::invalid_argument("nonzero_path: invalid terminals");
  }
  LabeledGraph d = normalize_to_D(g, s, t);
  if (d.arc_count() == 0) return std::nullopt;
  BalanceReport report = is_balanced(d);
  if (report.balanced) {
    Path p = *find_path(d, s, t);
    if (equal(g.group(), walk_label(d, p), alpha)) return std::nullopt;
    return p;
  }
  auto [p, q] = two_paths_from_cycle(d, s, t, *report.witness);
  return equal(g.group(), walk_label(d, p), alpha) ? q : p;
}

bool commuting_two_label_test(const LabeledGraph& g, VertexId s, VertexId t,
                              const GroupElement& alpha,
                              const GroupElement& beta) {
  const GroupSpec& spec = g.group();
  GroupElement ab = mul(spec, alpha, inv(spec, beta));
  GroupElement ba = mul(spec, beta, inv(spec, alpha));
  if (ab != ba) {
    throw std::invalid_argument(
        "commuting_two_label_test requires alpha*beta^-1 == beta*alpha^-1");
  }
  if (is_balanced(g).balanced) return false;
  TreeNormalization norm = tree_normalize(g, s, t);
  const GroupElement one = identity(spec);
  for (const Arc& a : norm.graph.arcs()) {
    if (a.tail == s || a.head == s) {
      GroupElement leaving =
          arc_traverse_label(norm.graph, a.id, a.tail == s ? a.head : a.tail);
      if (leaving != alpha && leaving != beta) return false;
    } else if (a.label != one && a.label != ab) {
      // {1, αβ⁻¹} is closed under inversion, so direction does not matter.
      return false;
    }
  }
  return true;
}

}  // namespace glp
