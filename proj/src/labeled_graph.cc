#include "glp/labeled_graph.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

namespace glp {

LabeledGraph::LabeledGraph(GroupSpec spec) : spec_(std::move(spec)) {}

VertexId LabeledGraph::add_vertex(std::string_view name) {
  if (auto existing = find_vertex(name)) {
    if (!present_[*existing]) {
      present_[*existing] = true;
      vertices_.insert(
          std::lower_bound(vertices_.begin(), vertices_.end(), *existing),
          *existing);
    }
    return *existing;
  }
  VertexId id = static_cast<VertexId>(names_.size());
  names_.emplace_back(name);
  present_.push_back(true);
  incident_.emplace_back();
  vertices_.push_back(id);
  return id;
}

ArcId LabeledGraph::add_arc(VertexId tail, VertexId head, GroupElement label,
                            bool is_virtual) {
  if (!has_vertex(tail) || !has_vertex(head)) {
    throw std::invalid_argument("arc endpoint is not a vertex of the graph");
  }
  if (tail == head) {
    throw std::invalid_argument("loop at vertex '" + name(tail) +
                                "' is not allowed");
  }
  check_member(spec_, label);
  ArcId id = next_arc_id_;
  insert_arc(Arc{id, tail, head, std::move(label), is_virtual});
  return id;
}

ArcId LabeledGraph::add_arc(std::string_view tail, std::string_view head,
                            GroupElement label) {
  VertexId u = add_vertex(tail);
  VertexId v = add_vertex(head);
  return add_arc(u, v, std::move(label));
}

void LabeledGraph::set_arc(ArcId id, VertexId tail, VertexId head,
                           GroupElement label) {
  if (!has_arc(id)) throw std::invalid_argument("no such arc");
  Arc& a = arcs_[arc_pos_[id]];
  if (!((a.tail == tail && a.head == head) ||
        (a.tail == head && a.head == tail))) {
    throw std::invalid_argument("set_arc may only reorient an arc");
  }
  check_member(spec_, label);
  a.tail = tail;
  a.head = head;
  a.label = std::move(label);
}

void LabeledGraph::insert_arc(Arc arc) {
  if (arc.id < 0) throw std::invalid_argument("negative arc id");
  if (arc.id >= static_cast<ArcId>(arc_pos_.size())) {
    arc_pos_.resize(arc.id + 1, -1);
  }
  if (arc_pos_[arc.id] != -1) throw std::invalid_argument("duplicate arc id");
  next_arc_id_ = std::max(next_arc_id_, arc.id + 1);
  // Arcs are appended in increasing id order by every caller.
  if (!arcs_.empty() && arcs_.back().id > arc.id) {
    throw std::logic_error("arcs must be inserted in increasing id order");
  }
  arc_pos_[arc.id] = static_cast<int>(arcs_.size());
  incident_[arc.tail].push_back(arc.id);
  incident_[arc.head].push_back(arc.id);
  arcs_.push_back(std::move(arc));
}

std::optional<VertexId> LabeledGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

VertexId LabeledGraph::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v || !present_[*v]) {
    throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
  }
  return *v;
}

const std::string& LabeledGraph::name(VertexId v) const {
  if (v < 0 || v >= id_bound()) throw std::out_of_range("vertex id");
  return names_[v];
}

bool LabeledGraph::has_vertex(VertexId v) const {
  return v >= 0 && v < id_bound() && present_[v];
}

bool LabeledGraph::has_arc(ArcId id) const {
  return id >= 0 && id < static_cast<ArcId>(arc_pos_.size()) &&
         arc_pos_[id] != -1;
}

const Arc& LabeledGraph::arc(ArcId id) const {
  if (!has_arc(id)) {
    throw InvalidWalk("arc " + std::to_string(id) + " is not in the graph");
  }
  return arcs_[arc_pos_[id]];
}

std::span<const ArcId> LabeledGraph::incident(VertexId v) const {
  if (!has_vertex(v)) return {};
  return incident_[v];
}

VertexId LabeledGraph::other_end(ArcId id, VertexId v) const {
  const Arc& a = arc(id);
  if (a.tail == v) return a.head;
  if (a.head == v) return a.tail;
  throw std::invalid_argument("vertex is not an endpoint of the arc");
}

LabeledGraph LabeledGraph::empty_like() const {
  LabeledGraph out(spec_);
  out.names_ = names_;
  out.present_.assign(names_.size(), false);
  out.incident_.resize(names_.size());
  out.arc_pos_.assign(arc_pos_.size(), -1);
  out.next_arc_id_ = next_arc_id_;
  return out;
}

LabeledGraph LabeledGraph::induced(std::span<const VertexId> keep) const {
  LabeledGraph out = empty_like();
  for (VertexId v : keep) {
    if (has_vertex(v)) out.present_[v] = true;
  }
  for (VertexId v : vertices_) {
    if (out.present_[v]) out.vertices_.push_back(v);
  }
  for (const Arc& a : arcs_) {
    if (out.present_[a.tail] && out.present_[a.head]) out.insert_arc(a);
  }
  return out;
}

LabeledGraph LabeledGraph::without_vertices(
    std::span<const VertexId> removed) const {
  std::vector<bool> drop(names_.size(), false);
  for (VertexId v : removed) {
    if (v >= 0 && v < id_bound()) drop[v] = true;
  }
  std::vector<VertexId> keep;
  for (VertexId v : vertices_) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced(keep);
}

LabeledGraph LabeledGraph::without_arcs(std::span<const ArcId> removed) const {
  std::set<ArcId> drop(removed.begin(), removed.end());
  std::vector<ArcId> kept;
  for (const Arc& a : arcs_) {
    if (!drop.count(a.id)) kept.push_back(a.id);
  }
  return with_arcs(kept);
}

LabeledGraph LabeledGraph::with_arcs(std::span<const ArcId> kept) const {
  std::set<ArcId> keep(kept.begin(), kept.end());
  LabeledGraph out = empty_like();
  out.present_ = present_;
  out.vertices_ = vertices_;
  for (const Arc& a : arcs_) {
    if (keep.count(a.id)) out.insert_arc(a);
  }
  return out;
}

bool operator==(const Arc& a, const Arc& b) {
  return a.id == b.id && a.tail == b.tail && a.head == b.head &&
         a.label == b.label && a.is_virtual == b.is_virtual;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (!(a.spec_ == b.spec_) || a.vertices_ != b.vertices_ ||
      a.arcs_.size() != b.arcs_.size()) {
    return false;
  }
  for (VertexId v : a.vertices_) {
    if (a.names_[v] != b.names_[v]) return false;
  }
  return std::equal(a.arcs_.begin(), a.arcs_.end(), b.arcs_.begin());
}

GroupElement arc_traverse_label(const LabeledGraph& g, ArcId id,
                                VertexId entered) {
  const Arc& a = g.arc(id);
  if (a.head == entered) return a.label;
  if (a.tail == entered) return inv(g.group(), a.label);
  throw std::invalid_argument("vertex '" + g.name(entered) +
                              "' is not an endpoint of arc " +
                              std::to_string(id));
}

VertexId step_source(const LabeledGraph& g, const Step& step) {
  const Arc& a = g.arc(step.arc);
  return step.direction == Direction::kForward ? a.tail : a.head;
}

VertexId step_target(const LabeledGraph& g, const Step& step) {
  const Arc& a = g.arc(step.arc);
  return step.direction == Direction::kForward ? a.head : a.tail;
}

std::vector<VertexId> walk_vertices(const LabeledGraph& g, const Walk& w) {
  if (!g.has_vertex(w.start)) throw InvalidWalk("walk starts outside graph");
  std::vector<VertexId> out{w.start};
  for (const Step& step : w.steps) {
    if (step_source(g, step) != out.back()) {
      throw InvalidWalk("walk step on arc " + std::to_string(step.arc) +
                        " does not continue from the previous vertex");
    }
    out.push_back(step_target(g, step));
  }
  return out;
}

VertexId walk_end(const LabeledGraph& g, const Walk& w) {
  return walk_vertices(g, w).back();
}

bool is_valid_walk(const LabeledGraph& g, const Walk& w) {
  try {
    walk_vertices(g, w);
    return true;
  } catch (const InvalidWalk&) {
    return false;
  }
}

GroupElement walk_label(const LabeledGraph& g, const Walk& w) {
  walk_vertices(g, w);
  GroupElement label = identity(g.group());
  for (const Step& step : w.steps) {
    label = mul(g.group(),
                arc_traverse_label(g, step.arc, step_target(g, step)), label);
  }
  return label;
}

Walk reverse_walk(const LabeledGraph& g, const Walk& w) {
  Walk out{walk_end(g, w), {}};
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    out.steps.push_back({it->arc, it->direction == Direction::kForward
                                      ? Direction::kBackward
                                      : Direction::kForward});
  }
  return out;
}

Walk concat_walks(const LabeledGraph& g, const Walk& a, const Walk& b) {
  if (walk_end(g, a) != b.start) {
    throw InvalidWalk("concatenated walks do not meet");
  }
  Walk out = a;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

bool validate_path(const LabeledGraph& g, const Path& p, VertexId s,
                   VertexId t) {
  std::vector<VertexId> seq;
  try {
    seq = walk_vertices(g, p);
  } catch (const InvalidWalk&) {
    return false;
  }
  if (seq.front() != s || seq.back() != t) return false;
  std::vector<VertexId> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string format_walk(const LabeledGraph& g, const Walk& w) {
  std::string out;
  for (VertexId v : walk_vertices(g, w)) {
    if (!out.empty()) out += ",";
    out += g.name(v);
  }
  return out;
}

LabeledGraph dedupe_equivalent_arcs(const LabeledGraph& g) {
  // Key: (low endpoint, high endpoint, label read towards the high endpoint).
  std::set<std::tuple<VertexId, VertexId, GroupElement>> seen;
  std::vector<ArcId> drop;
  for (const Arc& a : g.arcs()) {
    VertexId lo = std::min(a.tail, a.head);
    VertexId hi = std::max(a.tail, a.head);
    auto key = std::make_tuple(lo, hi, arc_traverse_label(g, a.id, hi));
    if (!seen.insert(std::move(key)).second) drop.push_back(a.id);
  }
  return g.without_arcs(drop);
}

namespace {

// Biconnected components over the arcs of `g` plus one extra edge {s,t}
// (index m in the edge list).  Returns the arc ids of the block containing
// the extra edge.
std::vector<ArcId> block_with_virtual_edge(const LabeledGraph& g, VertexId s,
                                           VertexId t) {
  struct Edge {
    VertexId u, v;
    ArcId id;  // -1 for the virtual edge
  };
  std::vector<Edge> edges;
  for (const Arc& a : g.arcs()) edges.push_back({a.tail, a.head, a.id});
  const int virtual_index = static_cast<int>(edges.size());
  edges.push_back({s, t, -1});

  std::vector<std::vector<int>> adj(g.id_bound());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].u].push_back(i);
    adj[edges[i].v].push_back(i);
  }

  std::vector<int> disc(g.id_bound(), -1), low(g.id_bound(), 0);
  std::vector<int> edge_stack;
  std::vector<ArcId> result;
  bool found = false;
  int timer = 0;

  std::function<void(VertexId, int)> dfs = [&](VertexId u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (int e : adj[u]) {
      if (e == parent_edge) continue;
      VertexId v = edges[e].u == u ? edges[e].v : edges[e].u;
      if (disc[v] == -1) {
        edge_stack.push_back(e);
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<int> block;
          while (true) {
            int top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          if (!found &&
              std::find(block.begin(), block.end(), virtual_index) !=
                  block.end()) {
            found = true;
            for (int b : block) {
              if (edges[b].id >= 0) result.push_back(edges[b].id);
            }
          }
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back(e);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(s, -1);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::optional<Path> find_path(const LabeledGraph& g, VertexId s, VertexId t,
                              std::span<const VertexId> blocked) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) return std::nullopt;
  std::vector<bool> banned(g.id_bound(), false);
  for (VertexId b : blocked) {
    if (b >= 0 && b < g.id_bound()) banned[b] = true;
  }
  if (banned[s] || banned[t]) return std::nullopt;
  std::vector<ArcId> via(g.id_bound(), -1);
  std::vector<bool> seen(g.id_bound(), false);
  std::deque<VertexId> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (u == t) break;
    std::vector<std::pair<VertexId, ArcId>> next;
    for (ArcId id : g.incident(u)) next.emplace_back(g.other_end(id, u), id);
    std::sort(next.begin(), next.end());
    for (auto [v, id] : next) {
      if (seen[v] || banned[v]) continue;
      seen[v] = true;
      via[v] = id;
      queue.push_back(v);
    }
  }
  if (!seen[t]) return std::nullopt;
  std::vector<Step> reversed;
  for (VertexId v = t; v != s;) {
    const Arc& a = g.arc(via[v]);
    if (a.head == v) {
      reversed.push_back({a.id, Direction::kForward});
      v = a.tail;
    } else {
      reversed.push_back({a.id, Direction::kBackward});
      v = a.head;
    }
  }
  return Path{s, {reversed.rbegin(), reversed.rend()}};
}

LabeledGraph normalize_to_D(const LabeledGraph& g, VertexId s, VertexId t) {
  if (s == t) throw std::invalid_argument("s and t must be distinct");
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw std::invalid_argument("s and t must be vertices of the graph");
  }
  LabeledGraph deduped = dedupe_equivalent_arcs(g);
  const std::vector<VertexId> terminals{std::min(s, t), std::max(s, t)};
  if (!find_path(deduped, s, t)) {
    return deduped.induced(terminals).with_arcs({});
  }
  std::vector<ArcId> block = block_with_virtual_edge(deduped, s, t);
  std::vector<VertexId> keep = terminals;
  for (ArcId id : block) {
    keep.push_back(deduped.arc(id).tail);
    keep.push_back(deduped.arc(id).head);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return deduped.induced(keep).with_arcs(block);
}

LabeledGraph orient_around_terminals(const LabeledGraph& g, VertexId s,
                                     VertexId t) {
  LabeledGraph out = g;
  for (const Arc& a : g.arcs()) {
    bool flip = (a.head == s) || (a.tail == t && a.head != s);
    if (flip) out.set_arc(a.id, a.head, a.tail, inv(g.group(), a.label));
  }
  return out;
}

}  // namespace glp
