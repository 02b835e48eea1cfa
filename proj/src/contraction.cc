#include "glp/contraction.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "glp/connectivity.h"
#include "glp/normalize.h"

namespace glp {
namespace {

std::vector<bool> membership(const LabeledGraph& g,
                             std::span<const VertexId> x) {
  std::vector<bool> in(g.id_bound(), false);
  for (VertexId v : x) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("vertex set is not contained in the graph");
    }
    in[v] = true;
  }
  return in;
}

std::vector<VertexId> sorted_unique(std::span<const VertexId> x) {
  std::vector<VertexId> out(x.begin(), x.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool avoids_terminals(std::span<const VertexId> x, VertexId s, VertexId t) {
  return std::find(x.begin(), x.end(), s) == x.end() &&
         std::find(x.begin(), x.end(), t) == x.end();
}

// An arc between u and v that reads `label` when traversed towards v.
std::optional<ArcId> equivalent_arc(const LabeledGraph& g, VertexId u,
                                    VertexId v, const GroupElement& label) {
  for (ArcId id : g.incident(u)) {
    if (g.other_end(id, u) == v && arc_traverse_label(g, id, v) == label) {
      return id;
    }
  }
  return std::nullopt;
}

Step flip(const Step& step) {
  return {step.arc, step.direction == Direction::kForward
                        ? Direction::kBackward
                        : Direction::kForward};
}

}  // namespace

std::vector<VertexId> neighborhood(const LabeledGraph& g,
                                   std::span<const VertexId> x) {
  std::vector<bool> in = membership(g, x);
  std::vector<VertexId> out;
  for (VertexId v : x) {
    for (ArcId id : g.incident(v)) {
      VertexId w = g.other_end(id, v);
      if (!in[w]) out.push_back(w);
    }
  }
  return sorted_unique(out);
}

LabeledGraph boundary_subgraph(const LabeledGraph& g,
                               std::span<const VertexId> x) {
  std::vector<bool> in = membership(g, x);
  std::vector<VertexId> keep(x.begin(), x.end());
  for (VertexId v : neighborhood(g, x)) keep.push_back(v);
  LabeledGraph sub = g.induced(keep);
  std::vector<ArcId> drop;
  for (const Arc& a : sub.arcs()) {
    if (!in[a.tail] && !in[a.head]) drop.push_back(a.id);
  }
  return sub.without_arcs(drop);
}

bool is_2contractible(const LabeledGraph& g, VertexId s, VertexId t,
                      std::span<const VertexId> x) {
  if (x.empty() || !avoids_terminals(x, s, t)) return false;
  if (neighborhood(g, x).size() != 2) return false;
  LabeledGraph piece = boundary_subgraph(g, x);
  return is_connected(piece) && !(piece == g);
}

bool is_3contractible(const LabeledGraph& g, VertexId s, VertexId t,
                      std::span<const VertexId> x) {
  if (x.empty() || !avoids_terminals(x, s, t)) return false;
  if (neighborhood(g, x).size() != 3) return false;
  if (!is_connected(g.induced(x))) return false;
  return is_balanced(boundary_subgraph(g, x)).balanced;
}

Contraction two_contract(const LabeledGraph& g, VertexId s, VertexId t,
                         std::span<const VertexId> x,
                         std::span<const LabelWitness> labels) {
  if (!is_2contractible(g, s, t, x)) {
    throw std::invalid_argument("vertex set is not 2-contractible");
  }
  ContractionRecord record;
  record.kind = ContractionKind::kTwo;
  record.removed = sorted_unique(x);
  record.boundary = neighborhood(g, x);
  record.piece = boundary_subgraph(g, x);
  const VertexId from = record.boundary[0];
  const VertexId to = record.boundary[1];
  LabeledGraph out = g.without_vertices(record.removed);
  for (const LabelWitness& lw : labels) {
    if (!validate_path(record.piece, lw.path, from, to) ||
        walk_label(record.piece, lw.path) != lw.label) {
      throw std::invalid_argument("label witness is not a matching path");
    }
    if (equivalent_arc(out, from, to, lw.label)) continue;
    ArcId id = out.add_arc(from, to, lw.label);
    record.added.push_back({id, from, to, lw.label, lw.path});
  }
  return {std::move(out), std::move(record)};
}

Contraction two_contract(const LabeledGraph& g, VertexId s, VertexId t,
                         std::span<const VertexId> x) {
  if (!is_2contractible(g, s, t, x)) {
    throw std::invalid_argument("vertex set is not 2-contractible");
  }
  std::vector<VertexId> boundary = neighborhood(g, x);
  LabeledGraph piece = boundary_subgraph(g, x);
  std::vector<LabelWitness> labels;
  for_each_simple_path(piece, boundary[0], boundary[1], [&](const Path& p) {
    GroupElement label = walk_label(piece, p);
    bool known = std::any_of(labels.begin(), labels.end(),
                             [&](const LabelWitness& lw) {
                               return lw.label == label;
                             });
    if (!known) labels.push_back({std::move(label), p});
    return true;
  });
  return two_contract(g, s, t, x, labels);
}

Contraction three_contract(const LabeledGraph& g, VertexId s, VertexId t,
                           std::span<const VertexId> x) {
  if (!is_3contractible(g, s, t, x)) {
    throw std::invalid_argument("vertex set is not 3-contractible");
  }
  ContractionRecord record;
  record.kind = ContractionKind::kThree;
  record.removed = sorted_unique(x);
  record.boundary = neighborhood(g, x);
  record.piece = boundary_subgraph(g, x);
  LabeledGraph out = g.without_vertices(record.removed);
  const auto& b = record.boundary;
  const std::array<std::array<int, 3>, 3> pairs{
      {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [i, j, k] : pairs) {
    const VertexId blocked[] = {b[k]};
    // G[X] is connected, so a path avoiding the third boundary vertex exists.
    auto witness = find_path(record.piece, b[i], b[j], blocked);
    if (!witness) throw std::logic_error("boundary pair not joined through X");
    GroupElement label = walk_label(record.piece, *witness);
    if (auto existing = equivalent_arc(out, b[i], b[j], label)) {
      const Arc& a = out.arc(*existing);
      record.triangle.push_back({a.id, a.tail, a.head});
      continue;
    }
    ArcId id = out.add_arc(b[i], b[j], label);
    record.triangle.push_back({id, b[i], b[j]});
    record.added.push_back({id, b[i], b[j], label, std::move(*witness)});
  }
  return {std::move(out), std::move(record)};
}

std::optional<std::vector<VertexId>> find_3contractible(const LabeledGraph& g,
                                                        VertexId s,
                                                        VertexId t) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        const VertexId triple[] = {vs[i], vs[j], vs[k]};
        for (const auto& comp : components(g, triple)) {
          if (!avoids_terminals(comp, s, t)) continue;
          if (neighborhood(g, comp) != std::vector<VertexId>(triple, triple + 3)) {
            continue;
          }
          if (is_balanced(boundary_subgraph(g, comp)).balanced) return comp;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Replaces two consecutive triangle steps x -> y -> z by the triangle arc
// joining x and z.
Path merge_triangle_steps(const ContractionRecord& record, const Path& p) {
  auto triangle_index = [&](ArcId id) {
    for (std::size_t i = 0; i < record.triangle.size(); ++i) {
      if (record.triangle[i].arc == id) return static_cast<int>(i);
    }
    return -1;
  };
  auto source = [&](const TriangleArc& a, const Step& st) {
    return st.direction == Direction::kForward ? a.tail : a.head;
  };
  auto target = [&](const TriangleArc& a, const Step& st) {
    return st.direction == Direction::kForward ? a.head : a.tail;
  };
  Path out{p.start, {}};
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    int first = triangle_index(p.steps[i].arc);
    int second =
        i + 1 < p.steps.size() ? triangle_index(p.steps[i + 1].arc) : -1;
    if (first < 0 || second < 0) {
      out.steps.push_back(p.steps[i]);
      continue;
    }
    VertexId from = source(record.triangle[first], p.steps[i]);
    VertexId to = target(record.triangle[second], p.steps[i + 1]);
    const TriangleArc& third = record.triangle[3 - first - second];
    out.steps.push_back({third.arc, third.tail == from && third.head == to
                                        ? Direction::kForward
                                        : Direction::kBackward});
    ++i;
  }
  return out;
}

}  // namespace

Path expand_path(const LabeledGraph& original,
                 std::span<const ContractionRecord> records, const Path& p) {
  Path current = p;
  for (auto rec = records.rbegin(); rec != records.rend(); ++rec) {
    if (rec->kind == ContractionKind::kThree) {
      current = merge_triangle_steps(*rec, current);
    }
    Path next{current.start, {}};
    for (const Step& step : current.steps) {
      auto added = std::find_if(
          rec->added.begin(), rec->added.end(),
          [&](const AddedArc& a) { return a.arc == step.arc; });
      if (added == rec->added.end()) {
        next.steps.push_back(step);
        continue;
      }
      if (step.direction == Direction::kForward) {
        next.steps.insert(next.steps.end(), added->witness.steps.begin(),
                          added->witness.steps.end());
      } else {
        for (auto it = added->witness.steps.rbegin();
             it != added->witness.steps.rend(); ++it) {
          next.steps.push_back(flip(*it));
        }
      }
    }
    current = std::move(next);
  }
  std::vector<VertexId> seq;
  try {
    seq = walk_vertices(original, current);
  } catch (const InvalidWalk& e) {
    throw std::logic_error(std::string("expanded path is invalid: ") +
                           e.what());
  }
  if (!validate_path(original, current, seq.front(), seq.back())) {
    throw std::logic_error("expanded path repeats a vertex");
  }
  return current;
}

}  // namespace glp
