#include "glp/oracle.h"

#include <algorithm>
#include <map>
#include <tuple>

namespace glp::oracle {
namespace {

struct Half {
  VertexId to;
  ArcId arc;
  Direction dir;
  GroupElement label;  // label contributed when traversed this way
};

// Adjacency lists sorted by neighbour, then arc id.
std::map<VertexId, std::vector<Half>> adjacency(const LabeledGraph& g) {
  const GroupSpec& spec = g.group();
  std::map<VertexId, std::vector<Half>> adj;
  for (VertexId v : g.vertices()) adj[v];
  for (const Arc& a : g.arcs()) {
    adj[a.tail].push_back({a.head, a.id, Direction::kForward, a.label});
    adj[a.head].push_back({a.tail, a.id, Direction::kBackward, inv(spec, a.label)});
  }
  for (auto& [v, list] : adj) {
    std::sort(list.begin(), list.end(), [](const Half& x, const Half& y) {
      return std::tie(x.to, x.arc) < std::tie(y.to, y.arc);
    });
  }
  return adj;
}

class PathSearch {
 public:
  PathSearch(const LabeledGraph& g, VertexId t,
             const std::function<bool(const Path&, const GroupElement&)>& visit)
      : spec_(g.group()),
        adj_(adjacency(g)),
        t_(t),
        visit_(visit),
        on_path_(g.id_bound(), false) {}

  void run(VertexId s) {
    path_ = Path{s, {}};
    on_path_[s] = true;
    dfs(s, identity(spec_));
  }

 private:
  bool dfs(VertexId at, const GroupElement& label) {
    if (at == t_) return visit_(path_, label);
    for (const Half& h : adj_.at(at)) {
      if (on_path_[h.to]) continue;
      on_path_[h.to] = true;
      path_.steps.push_back({h.arc, h.dir});
      bool go_on = dfs(h.to, mul(spec_, h.label, label));
      path_.steps.pop_back();
      on_path_[h.to] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const GroupSpec& spec_;
  std::map<VertexId, std::vector<Half>> adj_;
  VertexId t_;
  const std::function<bool(const Path&, const GroupElement&)>& visit_;
  std::vector<bool> on_path_;
  Path path_;
};

void search(const LabeledGraph& g, VertexId s, VertexId t,
            const std::function<bool(const Path&, const GroupElement&)>& visit) {
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) {
    throw std::invalid_argument("oracle: invalid terminals");
  }
  PathSearch(g, t, visit).run(s);
}

}  // namespace

void enumerate_st_paths(const LabeledGraph& g, VertexId s, VertexId t,
                        const std::function<bool(const Path&)>& visit) {
  search(g, s, t, [&](const Path& p, const GroupElement&) { return visit(p); });
}

std::size_t count_st_paths(const LabeledGraph& g, VertexId s, VertexId t) {
  std::size_t n = 0;
  enumerate_st_paths(g, s, t, [&](const Path&) {
    ++n;
    return true;
  });
  return n;
}

LabelSet label_set_bruteforce(const LabeledGraph& g, VertexId s, VertexId t,
                              std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  LabelSet out;
  search(g, s, t, [&](const Path& p, const GroupElement& label) {
    if (std::find(out.labels.begin(), out.labels.end(), label) ==
        out.labels.end()) {
      out.labels.push_back(label);
      out.witnesses.push_back(p);
      if (out.labels.size() > cap) {
        out.overflow = true;
        return false;
      }
    }
    return true;
  });
  return out;
}

void enumerate_cycles(const LabeledGraph& g,
                      const std::function<bool(const Walk&)>& visit) {
  auto adj = adjacency(g);
  std::vector<bool> on(g.id_bound(), false);
  bool stop = false;
  for (VertexId root : g.vertices()) {
    Walk w{root, {}};
    on[root] = true;
    std::function<void(VertexId)> dfs = [&](VertexId at) {
      for (const Half& h : adj.at(at)) {
        if (stop) return;
        if (h.to == root) {
          if (w.steps.empty() || w.steps.front().arc >= h.arc) continue;
          w.steps.push_back({h.arc, h.dir});
          if (!visit(w)) stop = true;
          w.steps.pop_back();
          continue;
        }
        if (h.to < root || on[h.to]) continue;
        on[h.to] = true;
        w.steps.push_back({h.arc, h.dir});
        dfs(h.to);
        w.steps.pop_back();
        on[h.to] = false;
      }
    };
    dfs(root);
    on[root] = false;
    if (stop) return;
  }
}

namespace {

GroupElement cycle_label(const LabeledGraph& g, const Walk& w) {
  const GroupSpec& spec = g.group();
  GroupElement label = identity(spec);
  for (const Step& st : w.steps) {
    const Arc& a = g.arc(st.arc);
    label = mul(spec,
                st.direction == Direction::kForward ? a.label : inv(spec, a.label),
                label);
  }
  return label;
}

}  // namespace

bool all_cycles_balanced(const LabeledGraph& g) {
  bool balanced = true;
  enumerate_cycles(g, [&](const Walk& w) {
    balanced = is_identity(g.group(), cycle_label(g, w));
    return balanced;
  });
  return balanced;
}

bool self_inverse_unbalanced_cycle_exists(const LabeledGraph& g) {
  const GroupSpec& spec = g.group();
  bool found = false;
  enumerate_cycles(g, [&](const Walk& w) {
    GroupElement label = cycle_label(g, w);
    found = !is_identity(spec, label) && is_identity(spec, mul(spec, label, label));
    return !found;
  });
  return found;
}

std::optional<std::vector<Path>> disjoint_paths_bruteforce(
    const LabeledGraph& g,
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  auto adj = adjacency(g);
  std::vector<bool> used(g.id_bound(), false);
  for (const auto& [a, b] : pairs) {
    if (!g.has_vertex(a) || !g.has_vertex(b)) {
      throw std::invalid_argument("oracle: terminal not in graph");
    }
    if (used[a] || used[b] || a == b) {
      throw std::invalid_argument("oracle: terminals must be distinct");
    }
    used[a] = used[b] = true;
  }
  std::vector<Path> chosen;
  // Terminals of later pairs stay reserved while earlier pairs are routed.
  std::function<bool(std::size_t)> route = [&](std::size_t i) -> bool {
    if (i == pairs.size()) return true;
    const auto [from, to] = pairs[i];
    Path p{from, {}};
    std::function<bool(VertexId)> dfs = [&](VertexId at) -> bool {
      if (at == to) {
        chosen.push_back(p);
        if (route(i + 1)) return true;
        chosen.pop_back();
        return false;
      }
      for (const Half& h : adj.at(at)) {
        if (used[h.to] && h.to != to) continue;
        bool was = used[h.to];
        used[h.to] = true;
        p.steps.push_back({h.arc, h.dir});
        if (dfs(h.to)) return true;
        p.steps.pop_back();
        used[h.to] = was;
      }
      return false;
    };
    return dfs(from);
  };
  if (!route(0)) return std::nullopt;
  return chosen;
}

}  // namespace glp::oracle
