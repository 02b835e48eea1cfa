#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include "glp/instance_io.h"
#include "glp/normalize.h"
#include "glp/oracle.h"
#include "glp/random_instance.h"
#include "glp/reduce.h"
#include "glp/solve.h"

namespace glp::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VertexId lookup(const LabeledGraph& g, const std::string& name) {
  auto v = g.find_vertex(name);
  if (!v || !g.has_vertex(*v)) throw UsageError("unknown vertex '" + name + "'");
  return *v;
}

json path_json(const LabeledGraph& g, const Walk& w) {
  json vertices = json::array();
  for (VertexId v : walk_vertices(g, w)) vertices.push_back(g.name(v));
  json arcs = json::array();
  for (const Step& st : w.steps) arcs.push_back(st.arc);
  return {{"vertices", vertices}, {"arcs", arcs}};
}

json labeled_json(const LabeledGraph& g, const GroupElement& label,
                  const Walk& w) {
  json j = {{"label", format_element(g.group(), label)}};
  j.update(path_json(g, w));
  return j;
}

// Splits "L1,L2" at commas outside parentheses, so "(1,2),(2,3)" has two
// parts.
std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

GroupSpec gen_group(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ':' || c == ' ') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  try {
    return parse_group_spec(tokens);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --group: ") + e.what());
  }
}

const char* count_name(LabelCount c) {
  switch (c) {
    case LabelCount::kZero: return "zero";
    case LabelCount::kOne: return "one";
    case LabelCount::kTwo: return "two";
    case LabelCount::kThreeOrMore: return "three_or_more";
  }
  return "";
}

struct Options {
  bool json = false;
  std::string file;
  std::vector<std::string> names;
  std::string forbid;
  std::size_t cap = 3;
  std::uint64_t seed = 0;
  int vertices = 6;
  int edges = 10;
  std::string group = "cyclic:3";
  double identity_bias = 0.3;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int labels() {
    auto [g, s, t] = load_st();
    const bool z3 = g.group() == GroupSpec::cyclic(3);
    LabelSummary sum = z3 ? z3_labels(g, s, t) : test_two_labels(g, s, t);
    if (opt_.json) {
      json w = json::array();
      json labels = json::array();
      for (const LabeledPath& lp : sum.witnesses) {
        labels.push_back(format_element(g.group(), lp.label));
        w.push_back(labeled_json(g, lp.label, lp.path));
      }
      emit({{"command", "labels"},
            {"count", count_name(sum.count)},
            {"complete", sum.count != LabelCount::kThreeOrMore || z3},
            {"labels", labels},
            {"witnesses", w}});
      return 0;
    }
    static const char* const heads[] = {"no s-t path", "one label", "two labels",
                                        "at least three labels"};
    std::string head = heads[static_cast<int>(sum.count)];
    if (z3 && sum.count == LabelCount::kThreeOrMore) head = "three labels";
    out_ << head;
    for (std::size_t i = 0; i < sum.witnesses.size(); ++i) {
      out_ << (i == 0 ? ": " : ", ")
           << format_element(g.group(), sum.witnesses[i].label);
    }
    out_ << "\n";
    print_witnesses(g, sum.witnesses);
    return 0;
  }

  int avoid() {
    auto [g, s, t] = load_st();
    auto parts = split_labels(opt_.forbid);
    if (parts.size() != 2) throw UsageError("--forbid expects two labels");
    GroupElement a = parse_label(g, parts[0]);
    GroupElement b = parse_label(g, parts[1]);
    if (a == b) throw UsageError("forbidden labels must differ");
    auto found = forbidden_two_path(g, s, t, a, b);
    if (opt_.json) {
      json j = {{"command", "avoid"}, {"result", found ? "path" : "contained"}};
      if (found) j["path"] = labeled_json(g, found->label, found->path);
      emit(j);
    } else if (found) {
      out_ << "path with label " << format_element(g.group(), found->label)
           << ": " << format_walk(g, found->path) << "\n";
    } else {
      out_ << "contained\n";
    }
    return found ? 0 : 1;
  }

  int three() {
    auto [g, s, t] = load_st();
    LabelSummary sum = test_two_labels(g, s, t);
    const bool ok = sum.count == LabelCount::kThreeOrMore;
    if (opt_.json) {
      json paths = json::array();
      if (ok) {
        for (const LabeledPath& lp : sum.witnesses) {
          paths.push_back(labeled_json(g, lp.label, lp.path));
        }
      }
      emit({{"command", "three"}, {"found", ok}, {"paths", paths}});
    } else if (ok) {
      out_ << "three paths with distinct labels\n";
      print_witnesses(g, sum.witnesses);
    } else {
      out_ << "fewer than three labels\n";
    }
    return ok ? 0 : 1;
  }

  int balanced() {
    LabeledGraph g = load();
    BalanceReport r = is_balanced(g);
    if (opt_.json) {
      json j = {{"command", "balanced"}, {"balanced", r.balanced}};
      if (r.witness) {
        j["witness"] = labeled_json(g, walk_label(g, *r.witness), *r.witness);
      }
      emit(j);
    } else if (r.balanced) {
      out_ << "balanced\n";
    } else {
      out_ << "unbalanced; witness cycle: " << format_walk(g, *r.witness) << "\n";
    }
    return 0;
  }

  int disjoint(bool use_oracle) {
    LabeledGraph g = load();
    if (opt_.names.size() != 4) throw UsageError("expected s1 t1 s2 t2");
    std::vector<VertexId> v;
    for (const auto& n : opt_.names) v.push_back(lookup(g, n));
    std::optional<std::pair<Path, Path>> found;
    try {
      if (use_oracle) {
        if (auto ps = oracle::disjoint_paths_bruteforce(g, {{v[0], v[1]}, {v[2], v[3]}})) {
          found = std::pair{(*ps)[0], (*ps)[1]};
        }
      } else {
        found = solve_2disjoint(g, v[0], v[1], v[2], v[3]);
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (opt_.json) {
      json paths = json::array();
      if (found) {
        paths.push_back(path_json(g, found->first));
        paths.push_back(path_json(g, found->second));
      }
      emit({{"command", use_oracle ? "oracle-disjoint" : "disjoint2"},
            {"feasible", found.has_value()},
            {"paths", paths}});
    } else if (found) {
      out_ << "disjoint paths\n  " << format_walk(g, found->first) << "\n  "
           << format_walk(g, found->second) << "\n";
    } else {
      out_ << "infeasible\n";
    }
    return found ? 0 : 1;
  }

  int oracle_labels() {
    auto [g, s, t] = load_st();
    if (opt_.cap < 1) throw UsageError("--cap must be positive");
    oracle::LabelSet set = oracle::label_set_bruteforce(g, s, t, opt_.cap);
    std::vector<LabeledPath> w;
    for (std::size_t i = 0; i < set.labels.size(); ++i) {
      w.push_back({set.labels[i], set.witnesses[i]});
    }
    if (opt_.json) {
      json labels = json::array();
      json ws = json::array();
      for (const LabeledPath& lp : w) {
        labels.push_back(format_element(g.group(), lp.label));
        ws.push_back(labeled_json(g, lp.label, lp.path));
      }
      emit({{"command", "oracle-labels"},
            {"overflow", set.overflow},
            {"labels", labels},
            {"witnesses", ws}});
      return 0;
    }
    out_ << (set.overflow ? "more than " + std::to_string(opt_.cap) + " labels"
                          : std::to_string(w.size()) + " label(s)");
    for (std::size_t i = 0; i < w.size(); ++i) {
      out_ << (i == 0 ? ": " : ", ") << format_element(g.group(), w[i].label);
    }
    out_ << "\n";
    print_witnesses(g, w);
    return 0;
  }

  int gen() {
    if (opt_.vertices < 2) throw UsageError("--vertices must be at least 2");
    if (opt_.edges < 0) throw UsageError("--edges must be non-negative");
    Rng rng(opt_.seed);
    LabeledGraph g = random_graph(rng, opt_.vertices, opt_.edges,
                                  gen_group(opt_.group), opt_.identity_bias);
    std::string text = serialize_instance(g);
    if (opt_.json) {
      emit({{"command", "gen"}, {"instance", text}});
    } else {
      out_ << text;
    }
    return 0;
  }

 private:
  LabeledGraph load() { return read_instance(opt_.file).graph; }

  std::tuple<LabeledGraph, VertexId, VertexId> load_st() {
    LabeledGraph g = load();
    if (opt_.names.size() != 2) throw UsageError("expected s and t");
    VertexId s = lookup(g, opt_.names[0]);
    VertexId t = lookup(g, opt_.names[1]);
    if (s == t) throw UsageError("s and t must differ");
    return {std::move(g), s, t};
  }

  GroupElement parse_label(const LabeledGraph& g, const std::string& text) {
    try {
      return parse_element(g.group(), text);
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad label '" + text + "': " + e.what());
    }
  }

  void print_witnesses(const LabeledGraph& g, const std::vector<LabeledPath>& w) {
    for (const LabeledPath& lp : w) {
      out_ << "  " << format_element(g.group(), lp.label) << ": "
           << format_walk(g, lp.path) << "\n";
    }
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Labels of s-t paths in group-labeled graphs"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Structured output");

  auto with_st = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "Instance file")->required();
    sub->add_option("s", opt.names, "Terminals s and t")->required()->expected(2);
    sub->add_flag("--json", opt.json, "Structured output");
    return sub;
  };
  auto* labels = with_st("labels", "Classify the s-t path labels (full set over cyclic 3)");
  auto* avoid = with_st("avoid", "Find an s-t path avoiding two labels");
  avoid->add_option("--forbid", opt.forbid, "Two labels, comma separated")->required();
  auto* three = with_st("three", "Find three s-t paths with distinct labels");
  auto* oracle_labels = with_st("oracle-labels", "Brute-force label set");
  oracle_labels->add_option("--cap", opt.cap, "Stop after this many labels");

  auto* balanced = app.add_subcommand("balanced", "Test whether every cycle is balanced");
  balanced->add_option("file", opt.file, "Instance file")->required();
  balanced->add_flag("--json", opt.json, "Structured output");

  auto with_pairs = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "Instance file")->required();
    sub->add_option("terminals", opt.names, "s1 t1 s2 t2")->required()->expected(4);
    sub->add_flag("--json", opt.json, "Structured output");
    return sub;
  };
  auto* disjoint2 = with_pairs("disjoint2", "Two vertex-disjoint paths");
  auto* oracle_disjoint = with_pairs("oracle-disjoint", "Two disjoint paths by brute force");

  auto* gen = app.add_subcommand("gen", "Emit a random instance");
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--vertices", opt.vertices, "Number of vertices");
  gen->add_option("--edges", opt.edges, "Number of arcs");
  gen->add_option("--group", opt.group, "Group, e.g. cyclic:3, symmetric:4, free:a:b");
  gen->add_option("--identity-bias", opt.identity_bias, "Probability of identity labels");
  gen->add_flag("--json", opt.json, "Structured output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Runner runner(opt, out);
  try {
    if (*labels) return runner.labels();
    if (*avoid) return runner.avoid();
    if (*three) return runner.three();
    if (*oracle_labels) return runner.oracle_labels();
    if (*balanced) return runner.balanced();
    if (*disjoint2) return runner.disjoint(false);
    if (*oracle_disjoint) return runner.disjoint(true);
    if (*gen) return runner.gen();
  } catch (const ParseError& e) {
    err << opt.file << ": " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace glp::cli
