#include "glp/solve.h"

#include <algorithm>
#include <map>

#include "glp/connectivity.h"
#include "glp/contraction.h"
#include "glp/normalize.h"

namespace glp {
namespace {

bool has_three_parallel(const LabeledGraph& g) {
  std::map<std::pair<VertexId, VertexId>, std::vector<GroupElement>> by_pair;
  for (const Arc& a : g.arcs()) {
    auto key = std::minmax(a.tail, a.head);
    auto& labels = by_pair[key];
    GroupElement l = arc_traverse_label(g, a.id, key.second);
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) {
      labels.push_back(std::move(l));
      if (labels.size() >= 3) return true;
    }
  }
  return false;
}

bool adjacent(const LabeledGraph& g, VertexId u, VertexId v) {
  return std::any_of(g.incident(u).begin(), g.incident(u).end(),
                     [&](ArcId id) { return g.other_end(id, u) == v; });
}

const LabelSummary kThree{LabelCount::kThreeOrMore, {}};

class Classifier {
 public:
  explicit Classifier(const SolveHooks& hooks) : hooks_(hooks) {}

  // Like test_two_labels, without witnesses for three or more labels.
  LabelSummary classify(const LabeledGraph& g, VertexId s, VertexId t) {
    if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) {
      throw std::invalid_argument("classify: invalid terminals");
    }
    if (!find_path(g, s, t)) return decide("empty", {LabelCount::kZero, {}});

    // Step 0.
    LabeledGraph d = normalize_to_D(g, s, t);
    if (has_three_parallel(d)) return decide("parallel", kThree);

    // Step 1.
    BalanceReport report = is_balanced(d);
    if (report.balanced) {
      Path p = *find_path(d, s, t);
      GroupElement label = walk_label(d, p);
      return decide("balanced", {LabelCount::kOne, {{std::move(label), p}}});
    }
    auto [p, q] = two_paths_from_cycle(d, s, t, *report.witness);
    const GroupSpec& spec = g.group();
    const GroupElement alpha = walk_label(d, p);
    const GroupElement beta = walk_label(d, q);
    if (alpha == beta) {
      throw std::logic_error("paths around an unbalanced cycle share a label");
    }
    const LabelSummary two{LabelCount::kTwo, {{alpha, p}, {beta, q}}};

    // Step 2.
    if (mul(spec, alpha, inv(spec, beta)) == mul(spec, beta, inv(spec, alpha))) {
      return decide("commuting",
                    commuting_two_label_test(d, s, t, alpha, beta) ? two : kThree);
    }
    LabeledGraph h = d;
    if (!adjacent(h, s, t)) h.add_arc(s, t, alpha, /*is_virtual=*/true);

    // Step 3.
    while (h.vertex_count() >= 4 && !is_triconnected(h)) {
      auto cut = find_2cut(h);
      if (!cut) break;
      std::vector<VertexId> x;
      for (auto& comp : components(h, *cut)) {
        if (!std::binary_search(comp.begin(), comp.end(), s) &&
            !std::binary_search(comp.begin(), comp.end(), t)) {
          x = std::move(comp);
          break;
        }
      }
      if (x.empty()) throw std::logic_error("2-cut separates s from t");
      LabeledGraph piece = boundary_subgraph(h, x);
      std::vector<VertexId> boundary = neighborhood(h, x);
      LabelSummary inner = classify(piece, boundary[0], boundary[1]);
      if (inner.count == LabelCount::kThreeOrMore) return decide("split", kThree);
      std::vector<LabelWitness> labels;
      for (const LabeledPath& w : inner.witnesses) {
        labels.push_back({w.label, w.path});
      }
      Contraction c = two_contract(h, s, t, x, labels);
      if (c.graph.vertex_count() + piece.vertex_count() != h.vertex_count() + 2 ||
          c.graph.arc_count() + piece.arc_count() > h.arc_count() + 2) {
        throw std::logic_error("2-contraction bookkeeping mismatch");
      }
      if (hooks_.on_split) hooks_.on_split(h, c.graph, piece);
      h = std::move(c.graph);
      if (has_three_parallel(h)) return decide("parallel", kThree);
    }

    // Step 4.
    while (auto x = find_3contractible(h, s, t)) {
      h = three_contract(h, s, t, *x).graph;
      if (has_three_parallel(h)) return decide("parallel", kThree);
    }

    // Step 5.
    if (h.vertex_count() <= 6) {
      std::vector<GroupElement> seen{alpha, beta};
      for_each_simple_path(h, s, t, [&](const Path& path) {
        GroupElement l = walk_label(h, path);
        if (std::find(seen.begin(), seen.end(), l) == seen.end()) {
          seen.push_back(std::move(l));
        }
        return seen.size() < 3;
      });
      return decide("enumerate", seen.size() >= 3 ? kThree : two);
    }
    D0Result verdict = check_D0(h, s, t, alpha, beta, hooks_.on_embedding);
    if (verdict.verdict != D0Verdict::kInD0) return decide("planar-reject", kThree);
    return decide(verdict.reason == "case A" ? "planar-A" : "planar-C", two);
  }

 private:
  LabelSummary decide(std::string_view step, LabelSummary result) {
    if (hooks_.on_decision) hooks_.on_decision(step);
    return result;
  }

  const SolveHooks& hooks_;
};

Path prepend(const LabeledGraph& g, VertexId s, ArcId id, const Path& rest) {
  Path out{s, {{id, g.arc(id).tail == s ? Direction::kForward
                                         : Direction::kBackward}}};
  out.steps.insert(out.steps.end(), rest.steps.begin(), rest.steps.end());
  return out;
}

std::vector<LabeledPath> three_distinct(const std::vector<LabeledPath>& pool) {
  std::vector<LabeledPath> out;
  for (const LabeledPath& lp : pool) {
    bool fresh = std::none_of(out.begin(), out.end(), [&](const LabeledPath& o) {
      return o.label == lp.label;
    });
    if (fresh) out.push_back(lp);
    if (out.size() == 3) return out;
  }
  throw std::logic_error("fewer than three distinct s-t path labels");
}

}  // namespace

std::vector<LabeledPath> find_three_paths(const LabeledGraph& g, VertexId s,
                                          VertexId t, const SolveHooks& hooks) {
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) {
    throw std::invalid_argument("find_three_paths: invalid terminals");
  }
  const GroupSpec& spec = g.group();
  std::vector<LabeledPath> pool;
  std::vector<VertexId> neighbors;
  for (ArcId id : g.incident(s)) {
    VertexId v = g.other_end(id, s);
    if (v == t) {
      pool.push_back({arc_traverse_label(g, id, t), prepend(g, s, id, {t, {}})});
    } else {
      neighbors.push_back(v);
    }
  }
  std::sort(neighbors.begin(), neighbors.end());
  neighbors.erase(std::unique(neighbors.begin(), neighbors.end()),
                  neighbors.end());

  SolveHooks quiet = hooks;
  quiet.on_decision = nullptr;
  Classifier classifier(quiet);
  const VertexId gone[] = {s};
  LabeledGraph rest = g.without_vertices(gone);
  for (VertexId v : neighbors) {
    LabelSummary sub = classifier.classify(rest, v, t);
    std::vector<ArcId> arcs;
    for (ArcId id : g.incident(s)) {
      if (g.other_end(id, s) == v) arcs.push_back(id);
    }
    if (sub.count == LabelCount::kThreeOrMore) {
      std::vector<LabeledPath> out;
      for (LabeledPath& lp : find_three_paths(rest, v, t, hooks)) {
        out.push_back(
            {mul(spec, lp.label, arc_traverse_label(g, arcs.front(), v)),
             prepend(g, s, arcs.front(), lp.path)});
      }
      return out;
    }
    for (ArcId id : arcs) {
      for (const LabeledPath& lp : sub.witnesses) {
        pool.push_back({mul(spec, lp.label, arc_traverse_label(g, id, v)),
                        prepend(g, s, id, lp.path)});
      }
    }
  }
  return three_distinct(pool);
}

LabelSummary test_two_labels(const LabeledGraph& g, VertexId s, VertexId t,
                             const SolveHooks& hooks) {
  LabelSummary out = Classifier(hooks).classify(g, s, t);
  if (out.count == LabelCount::kThreeOrMore) {
    out.witnesses = find_three_paths(g, s, t, hooks);
  }
  return out;
}

std::optional<LabeledPath> forbidden_two_path(const LabeledGraph& g, VertexId s,
                                              VertexId t,
                                              const GroupElement& alpha,
                                              const GroupElement& beta,
                                              const SolveHooks& hooks) {
  if (alpha == beta) {
    throw std::invalid_argument("forbidden labels must be distinct");
  }
  for (LabeledPath& lp : test_two_labels(g, s, t, hooks).witnesses) {
    if (lp.label != alpha && lp.label != beta) return std::move(lp);
  }
  return std::nullopt;
}

LabelSummary z3_labels(const LabeledGraph& g, VertexId s, VertexId t,
                       const SolveHooks& hooks) {
  if (!(g.group() == GroupSpec::cyclic(3))) {
    throw GroupMismatch("z3_labels requires the group cyclic 3");
  }
  LabelSummary out = test_two_labels(g, s, t, hooks);
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const LabeledPath& a, const LabeledPath& b) {
              return a.label < b.label;
            });
  return out;
}

}  // namespace glp
