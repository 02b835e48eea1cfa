#include "glp/planar.h"

#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "glp/connectivity.h"
#include "glp/normalize.h"

namespace glp {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

std::pair<VertexId, VertexId> ends(const Arc& a) {
  return std::minmax(a.tail, a.head);
}

}  // namespace

std::vector<Walk> trace_faces(
    const LabeledGraph& g,
    const std::map<VertexId, std::vector<ArcId>>& rotation) {
  if (g.arc_count() == 0) {
    std::vector<Walk> out;
    for (VertexId v : g.vertices()) out.push_back({v, {}});
    return out;
  }
  // Position of each arc in the rotation at each endpoint.
  std::map<std::pair<VertexId, ArcId>, std::size_t> pos;
  for (const auto& [v, arcs] : rotation) {
    for (std::size_t i = 0; i < arcs.size(); ++i) pos[{v, arcs[i]}] = i;
  }
  std::set<std::pair<ArcId, Direction>> used;
  std::vector<Walk> faces;
  for (const Arc& a : g.arcs()) {
    for (Direction d : {Direction::kForward, Direction::kBackward}) {
      if (used.contains({a.id, d})) continue;
      Walk face{d == Direction::kForward ? a.tail : a.head, {}};
      Step step{a.id, d};
      while (used.insert({step.arc, step.direction}).second) {
        face.steps.push_back(step);
        VertexId v = step_target(g, step);
        auto it = pos.find({v, step.arc});
        auto rot = rotation.find(v);
        if (it == pos.end() || rot == rotation.end()) break;
        ArcId next = rot->second[(it->second + 1) % rot->second.size()];
        const Arc& n = g.arc(next);
        step = {next, n.tail == v ? Direction::kForward : Direction::kBackward};
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::optional<Embedding> planar_embed(const LabeledGraph& g,
                                      std::optional<ArcId> outer_edge) {
  if (!is_connected(g)) {
    throw std::invalid_argument("planar_embed requires a connected graph");
  }
  const auto& vs = g.vertices();
  std::map<VertexId, int> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);

  // The second and later arcs between a pair are subdivided so that the
  // planarity test sees a simple graph.
  BoostGraph bg(vs.size());
  std::vector<ArcId> arc_of_edge;
  std::set<std::pair<VertexId, VertexId>> seen_pairs;
  int next_vertex = static_cast<int>(vs.size());
  for (const Arc& a : g.arcs()) {
    int u = index[a.tail];
    int v = index[a.head];
    if (seen_pairs.insert(ends(a)).second) {
      boost::add_edge(u, v, static_cast<int>(arc_of_edge.size()), bg);
      arc_of_edge.push_back(a.id);
      continue;
    }
    int w = next_vertex++;
    boost::add_vertex(bg);
    boost::add_edge(u, w, static_cast<int>(arc_of_edge.size()), bg);
    arc_of_edge.push_back(a.id);
    boost::add_edge(w, v, static_cast<int>(arc_of_edge.size()), bg);
    arc_of_edge.push_back(a.id);
  }

  std::vector<std::vector<BoostEdge>> rot(boost::num_vertices(bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
          rot.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;

  Embedding e;
  auto edge_index = boost::get(boost::edge_index, bg);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto& order = e.rotation[vs[i]];
    for (const BoostEdge& be : rot[i]) {
      order.push_back(arc_of_edge[edge_index[be]]);
    }
  }
  e.faces = trace_faces(g, e.rotation);
  if (outer_edge) {
    auto candidates = faces_containing(e, *outer_edge);
    if (candidates.empty()) {
      throw std::invalid_argument("planar_embed: outer edge not in graph");
    }
    e.outer_face = candidates.front();
  }
  return e;
}

std::vector<int> faces_containing(const Embedding& e, ArcId arc) {
  std::vector<int> out;
  for (std::size_t f = 0; f < e.faces.size(); ++f) {
    for (const Step& step : e.faces[f].steps) {
      if (step.arc == arc) {
        out.push_back(static_cast<int>(f));
        break;
      }
    }
  }
  return out;
}

std::optional<std::string> check_embedding(const LabeledGraph& g,
                                           const Embedding& e) {
  for (VertexId v : g.vertices()) {
    auto it = e.rotation.find(v);
    std::vector<ArcId> expected(g.incident(v).begin(), g.incident(v).end());
    std::vector<ArcId> actual;
    if (it != e.rotation.end()) actual = it->second;
    std::sort(actual.begin(), actual.end());
    if (actual != expected) {
      return "rotation at " + g.name(v) + " does not list its arcs once each";
    }
  }
  if (e.rotation.size() != g.vertex_count()) {
    return std::string("rotation mentions a vertex outside the graph");
  }
  std::set<std::pair<ArcId, Direction>> sides;
  for (const Walk& f : e.faces) {
    if (!is_valid_walk(g, f) || (!f.steps.empty() && walk_end(g, f) != f.start)) {
      return std::string("a face boundary is not a closed walk");
    }
    for (const Step& step : f.steps) {
      if (!sides.insert({step.arc, step.direction}).second) {
        return std::string("an arc side lies on two faces");
      }
    }
  }
  if (sides.size() != 2 * g.arc_count()) {
    return std::string("faces do not cover every arc side");
  }
  // Faces must be the orbits of the rotation, up to starting point.
  auto canonical = [](std::vector<Walk> faces) {
    std::vector<std::vector<std::pair<ArcId, int>>> out;
    for (const Walk& f : faces) {
      std::vector<std::pair<ArcId, int>> seq;
      for (const Step& st : f.steps) {
        seq.emplace_back(st.arc, static_cast<int>(st.direction));
      }
      if (!seq.empty()) {
        std::rotate(seq.begin(), std::min_element(seq.begin(), seq.end()),
                    seq.end());
      }
      out.push_back(std::move(seq));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  if (canonical(e.faces) != canonical(trace_faces(g, e.rotation))) {
    return std::string("faces disagree with the rotation system");
  }
  const long euler = static_cast<long>(g.vertex_count()) -
                     static_cast<long>(g.arc_count()) +
                     static_cast<long>(e.faces.size());
  if (euler != 2) {
    return "Euler characteristic is " + std::to_string(euler);
  }
  if (e.outer_face < 0 || e.outer_face >= static_cast<int>(e.faces.size())) {
    return std::string("outer face index out of range");
  }
  return std::nullopt;
}

GroupElement face_label(const LabeledGraph& g, const Embedding& e, int face) {
  return walk_label(g, e.faces.at(face));
}

namespace {

// Labels of the s-t paths s -> v -> t obtained by leaving s along an arc and
// following the spanning tree of G - s rooted at t.  nullopt when G - s is
// disconnected or unbalanced.
std::optional<std::vector<GroupElement>> terminal_fan_labels(
    const LabeledGraph& g, VertexId s, VertexId t) {
  const VertexId gone[] = {s};
  LabeledGraph h = g.without_vertices(gone);
  if (!is_connected(h) || !is_balanced(h).balanced) return std::nullopt;
  const VertexId root[] = {t};
  SpanningForest forest = spanning_forest(h, root);
  const GroupSpec& spec = g.group();
  std::vector<GroupElement> out;
  for (ArcId id : g.incident(s)) {
    VertexId v = g.other_end(id, s);
    out.push_back(mul(spec, forest.potential[v], arc_traverse_label(g, id, v)));
  }
  return out;
}

bool fan_in(const std::optional<std::vector<GroupElement>>& labels,
            const GroupElement& alpha, const GroupElement& beta) {
  if (!labels) return false;
  return std::all_of(labels->begin(), labels->end(),
                     [&](const GroupElement& l) {
                       return l == alpha || l == beta;
                     });
}

}  // namespace

bool check_caseA(const LabeledGraph& g, VertexId s, VertexId t,
                 const GroupElement& alpha, const GroupElement& beta) {
  if (is_balanced(g).balanced) return false;
  if (fan_in(terminal_fan_labels(g, s, t), alpha, beta)) return true;
  // At t, read the fan from the reversed graph's point of view: paths t -> s
  // there are inverses of s -> t paths here.
  const GroupSpec& spec = g.group();
  auto at_t = terminal_fan_labels(g, t, s);
  if (!at_t) return false;
  for (GroupElement& l : *at_t) l = inv(spec, l);
  return fan_in(at_t, alpha, beta);
}

namespace {

struct ParallelPair {
  ArcId first;
  ArcId second;
};

// The two s-t sides of the outer face, provided it is a cycle through the
// s-t arc `st`.
std::optional<std::pair<GroupElement, GroupElement>> outer_sides(
    const LabeledGraph& g, const Walk& face, VertexId s, VertexId t,
    ArcId st) {
  std::vector<VertexId> seq = walk_vertices(g, face);
  seq.pop_back();
  std::vector<VertexId> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::nullopt;
  }
  auto it = std::find_if(face.steps.begin(), face.steps.end(),
                         [&](const Step& st_) { return st_.arc == st; });
  if (it == face.steps.end()) return std::nullopt;
  const std::size_t i = static_cast<std::size_t>(it - face.steps.begin());
  const std::size_t len = face.steps.size();
  // The rest of the boundary, from the end of the s-t arc back to its start.
  Walk rest{step_target(g, *it), {}};
  for (std::size_t k = 1; k < len; ++k) {
    rest.steps.push_back(face.steps[(i + k) % len]);
  }
  if (rest.start == t) rest = reverse_walk(g, rest);
  if (rest.start != s) return std::nullopt;
  return std::pair{arc_traverse_label(g, st, t), walk_label(g, rest)};
}

bool satisfies_caseC(const LabeledGraph& g, const Embedding& e, VertexId s,
                     VertexId t, ArcId st, const GroupElement& alpha,
                     const GroupElement& beta) {
  const GroupSpec& spec = g.group();
  if (is_identity(spec, face_label(g, e, e.outer_face))) return false;
  auto sides = outer_sides(g, e.faces[e.outer_face], s, t, st);
  if (!sides) return false;
  const auto& [a, b] = *sides;
  if (!((a == alpha && b == beta) || (a == beta && b == alpha))) return false;
  int unbalanced_inner = 0;
  for (int f = 0; f < static_cast<int>(e.faces.size()); ++f) {
    if (f != e.outer_face && !is_identity(spec, face_label(g, e, f))) {
      ++unbalanced_inner;
    }
  }
  return unbalanced_inner == 1;
}

// Rotation systems of g obtained by placing `pair.second` next to
// `pair.first` on either side at each end, given a rotation system of g
// without `pair.second`.  Only those that trace a plane embedding are kept.
std::vector<Embedding> digon_variants(const LabeledGraph& g,
                                      const Embedding& base,
                                      const ParallelPair& pair) {
  const Arc& a = g.arc(pair.first);
  std::vector<Embedding> out;
  std::set<std::vector<std::vector<ArcId>>> seen;
  for (int at_tail = 0; at_tail < 2; ++at_tail) {
    for (int at_head = 0; at_head < 2; ++at_head) {
      Embedding e;
      e.rotation = base.rotation;
      for (auto [v, after] : {std::pair{a.tail, at_tail}, std::pair{a.head, at_head}}) {
        auto& order = e.rotation[v];
        auto it = std::find(order.begin(), order.end(), pair.first);
        order.insert(after ? it + 1 : it, pair.second);
      }
      e.faces = trace_faces(g, e.rotation);
      if (check_embedding(g, e)) continue;
      std::vector<std::vector<ArcId>> key;
      for (const Walk& f : e.faces) {
        std::vector<ArcId> arcs;
        for (const Step& st : f.steps) arcs.push_back(st.arc);
        std::sort(arcs.begin(), arcs.end());
        key.push_back(std::move(arcs));
      }
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

D0Result check_caseC(const LabeledGraph& g, VertexId s, VertexId t,
                     const GroupElement& alpha, const GroupElement& beta,
                     const EmbeddingObserver& observer) {
  const GroupSpec& spec = g.group();
  if (mul(spec, alpha, inv(spec, beta)) == mul(spec, beta, inv(spec, alpha))) {
    throw std::invalid_argument("check_caseC: alpha*beta^-1 == beta*alpha^-1");
  }
  if (g.vertex_count() <= 6) {
    throw std::invalid_argument("check_caseC: at most 6 vertices");
  }
  if (!is_triconnected(g)) {
    throw std::invalid_argument("check_caseC: graph is not 3-connected");
  }

  LabeledGraph h = g;
  std::vector<ArcId> st_arcs;
  for (ArcId id : g.incident(s)) {
    if (g.other_end(id, s) == t) st_arcs.push_back(id);
  }
  if (st_arcs.empty()) {
    throw std::invalid_argument("check_caseC: s and t are not adjacent");
  }
  for (ArcId id : st_arcs) {
    GroupElement l = arc_traverse_label(g, id, t);
    if (l != alpha && l != beta) {
      return {D0Verdict::kThreeLabelsDetected,
              "an s-t arc has a label other than alpha and beta"};
    }
  }
  if (st_arcs.size() > 2) {
    return {D0Verdict::kThreeLabelsDetected, "more than two s-t arcs"};
  }
  if (st_arcs.size() == 2) {
    LabeledGraph rest = g.without_arcs(st_arcs);
    auto p = find_path(rest, s, t);
    if (!p) {
      return {D0Verdict::kNotInD0, "no s-t path avoids the s-t arcs"};
    }
    GroupElement gamma = walk_label(rest, *p);
    if (gamma != alpha && gamma != beta) {
      return {D0Verdict::kThreeLabelsDetected,
              "an s-t path avoiding the s-t arcs has a third label"};
    }
    ArcId drop = arc_traverse_label(g, st_arcs[0], t) == gamma ? st_arcs[0]
                                                               : st_arcs[1];
    const ArcId dropped[] = {drop};
    h = g.without_arcs(dropped);
    std::erase(st_arcs, drop);
  }
  const ArcId st = st_arcs.front();

  std::map<std::pair<VertexId, VertexId>, std::vector<ArcId>> by_pair;
  for (const Arc& a : h.arcs()) by_pair[ends(a)].push_back(a.id);
  std::vector<ParallelPair> pairs;
  for (const auto& [key, ids] : by_pair) {
    for (std::size_t i = 1; i < ids.size(); ++i) {
      pairs.push_back({ids[0], ids[i]});
    }
  }
  if (pairs.size() >= 2) {
    return {D0Verdict::kNotInD0, "two parallel pairs give two unbalanced faces"};
  }

  std::vector<Embedding> face_sets;
  if (pairs.empty()) {
    auto e = planar_embed(h);
    if (!e) return {D0Verdict::kNotInD0, "graph is not planar"};
    face_sets.push_back(std::move(*e));
  } else {
    const ArcId second[] = {pairs[0].second};
    LabeledGraph simple = h.without_arcs(second);
    auto base = planar_embed(simple);
    if (!base) return {D0Verdict::kNotInD0, "graph is not planar"};
    if (observer) observer(simple, *base);
    face_sets = digon_variants(h, *base, pairs[0]);
  }

  for (Embedding& e : face_sets) {
    for (int outer : faces_containing(e, st)) {
      e.outer_face = outer;
      if (observer) observer(h, e);
      if (satisfies_caseC(h, e, s, t, st, alpha, beta)) {
        return {D0Verdict::kInD0, "case C"};
      }
    }
  }
  return {D0Verdict::kNotInD0, "no embedding meets the face conditions"};
}

D0Result check_D0(const LabeledGraph& g, VertexId s, VertexId t,
                  const GroupElement& alpha, const GroupElement& beta,
                  const EmbeddingObserver& observer) {
  const GroupSpec& spec = g.group();
  if (alpha == beta ||
      mul(spec, alpha, inv(spec, beta)) == mul(spec, beta, inv(spec, alpha))) {
    return {D0Verdict::kNotInD0, "labels do not satisfy ab^-1 != ba^-1"};
  }
  if (check_caseA(g, s, t, alpha, beta)) return {D0Verdict::kInD0, "case A"};
  if (g.vertex_count() <= 6) {
    return {D0Verdict::kNotInD0, "at most 6 vertices"};
  }
  if (!is_triconnected(g)) {
    return {D0Verdict::kNotInD0, "graph is not 3-connected"};
  }
  bool adjacent = std::any_of(
      g.incident(s).begin(), g.incident(s).end(),
      [&](ArcId id) { return g.other_end(id, s) == t; });
  if (!adjacent) return {D0Verdict::kNotInD0, "s and t are not adjacent"};
  return check_caseC(g, s, t, alpha, beta, observer);
}

}  // namespace glp
