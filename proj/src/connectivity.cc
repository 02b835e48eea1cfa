#include "glp/connectivity.h"

#include <algorithm>
#include <deque>

namespace glp {

std::vector<std::vector<VertexId>> components(
    const LabeledGraph& g, std::span<const VertexId> removed) {
  std::vector<bool> gone(g.id_bound(), false);
  for (VertexId v : removed) {
    if (v >= 0 && v < g.id_bound()) gone[v] = true;
  }
  std::vector<bool> seen(g.id_bound(), false);
  std::vector<std::vector<VertexId>> out;
  for (VertexId root : g.vertices()) {
    if (gone[root] || seen[root]) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (ArcId id : g.incident(u)) {
        VertexId v = g.other_end(id, u);
        if (!seen[v] && !gone[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const LabeledGraph& g) { return components(g).size() <= 1; }

namespace {

// Unit-capacity residual network used for vertex-disjoint routing.
class FlowNetwork {
 public:
  struct Edge {
    int to;
    int cap;
    int rev;
    ArcId arc;  // underlying arc for arc edges, -1 otherwise
    bool forward;
  };

  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void add(int from, int to, ArcId arc) {
    adj_[from].push_back(
        {to, 1, static_cast<int>(adj_[to].size()), arc, true});
    adj_[to].push_back(
        {from, 0, static_cast<int>(adj_[from].size()) - 1, -1, false});
  }

  bool augment(int source, int sink) {
    std::vector<std::pair<int, int>> via(adj_.size(), {-1, -1});
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(adj_[u].size()); ++i) {
        const Edge& e = adj_[u][i];
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = true;
          via[e.to] = {u, i};
          queue.push_back(e.to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (int v = sink; v != source;) {
      auto [u, i] = via[v];
      Edge& e = adj_[u][i];
      e.cap -= 1;
      adj_[e.to][e.rev].cap += 1;
      v = u;
    }
    return true;
  }

  // Forward edges out of `u` that carry one unit of flow.
  std::vector<const Edge*> flow_edges(int u) const {
    std::vector<const Edge*> out;
    for (const Edge& e : adj_[u]) {
      if (e.forward && e.cap == 0) out.push_back(&e);
    }
    return out;
  }

 private:
  std::vector<std::vector<Edge>> adj_;
};

}  // namespace

std::optional<std::vector<Path>> vertex_disjoint_paths(
    const LabeledGraph& g, std::span<const VertexId> sources,
    std::span<const VertexId> sinks, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.id_bound();
  auto in = [](VertexId v) { return 2 * v; };
  auto out = [](VertexId v) { return 2 * v + 1; };
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);

  std::vector<VertexId> srcs(sources.begin(), sources.end());
  std::vector<VertexId> snks(sinks.begin(), sinks.end());
  std::sort(srcs.begin(), srcs.end());
  srcs.erase(std::unique(srcs.begin(), srcs.end()), srcs.end());
  std::sort(snks.begin(), snks.end());
  snks.erase(std::unique(snks.begin(), snks.end()), snks.end());
  for (VertexId v : srcs) {
    if (g.has_vertex(v)) net.add(source, in(v), -1);
  }
  for (VertexId v : g.vertices()) net.add(in(v), out(v), -1);
  for (const Arc& a : g.arcs()) {
    net.add(out(a.tail), in(a.head), a.id);
    net.add(out(a.head), in(a.tail), a.id);
  }
  for (VertexId v : snks) {
    if (g.has_vertex(v)) net.add(out(v), sink, -1);
  }

  int flow = 0;
  while (flow < k && net.augment(source, sink)) ++flow;
  if (flow < k) return std::nullopt;

  std::vector<Path> paths;
  for (const auto* first : net.flow_edges(source)) {
    VertexId start = first->to / 2;
    Path p{start, {}};
    VertexId at = start;
    while (true) {
      // Each saturated vertex has exactly one outgoing unit of flow.
      auto next = net.flow_edges(out(at));
      if (next.empty()) throw std::logic_error("broken flow decomposition");
      const auto* e = next.front();
      if (e->to == sink) break;
      VertexId v = e->to / 2;
      const Arc& a = g.arc(e->arc);
      p.steps.push_back(
          {a.id, a.tail == at ? Direction::kForward : Direction::kBackward});
      at = v;
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

std::optional<std::array<VertexId, 2>> find_2cut(const LabeledGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const VertexId pair[] = {vs[i], vs[j]};
      if (components(g, pair).size() >= 2) return std::array{vs[i], vs[j]};
    }
  }
  return std::nullopt;
}

std::vector<std::array<VertexId, 3>> enumerate_3cuts(const LabeledGraph& g) {
  std::vector<std::array<VertexId, 3>> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        const VertexId triple[] = {vs[i], vs[j], vs[k]};
        if (components(g, triple).size() >= 2) {
          out.push_back({vs[i], vs[j], vs[k]});
        }
      }
    }
  }
  return out;
}

bool is_biconnected(const LabeledGraph& g) {
  if (g.vertex_count() <= 2 || !is_connected(g)) return false;
  for (VertexId v : g.vertices()) {
    const VertexId one[] = {v};
    if (components(g, one).size() >= 2) return false;
  }
  return true;
}

bool is_triconnected(const LabeledGraph& g) {
  return g.vertex_count() > 3 && is_biconnected(g) && !find_2cut(g);
}

}  // namespace glp
