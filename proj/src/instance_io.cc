#include "glp/instance_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace glp {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') {
        ++j;
      }
      line.tokens.push_back(
          {std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

bool valid_name(const std::string& name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    const Token& at = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
    throw ParseError(line.number, at.column,
                     "'" + line.tokens[0].text + "' expects " +
                         std::to_string(n - 1) + " argument(s)");
  }
}

const std::string& name_at(const Line& line, std::size_t i) {
  const Token& tok = line.tokens[i];
  if (!valid_name(tok.text)) {
    throw ParseError(line.number, tok.column,
                     "invalid vertex name '" + tok.text + "'");
  }
  return tok.text;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  std::optional<GroupSpec> spec;
  std::set<std::string> names;
  std::vector<std::string> warnings;
  std::set<std::string> declared;

  // First pass: group and vertex names.
  for (const Line& line : lines) {
    const std::string& keyword = line.tokens[0].text;
    if (keyword == "group") {
      if (spec) {
        throw ParseError(line.number, 1, "group declared twice");
      }
      std::vector<std::string> params;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        params.push_back(line.tokens[i].text);
      }
      try {
        spec = parse_group_spec(params);
      } catch (const std::invalid_argument& e) {
        int column = line.tokens.size() > 1 ? line.tokens[1].column : 1;
        throw ParseError(line.number, column, e.what());
      }
    } else if (keyword == "vertex") {
      expect_arity(line, 2);
      const std::string& name = name_at(line, 1);
      if (!declared.insert(name).second) {
        warnings.push_back("line " + std::to_string(line.number) +
                           ": vertex '" + name + "' declared twice");
      }
      names.insert(name);
    } else if (keyword == "arc" || keyword == "edge") {
      expect_arity(line, keyword == "arc" ? 4 : 3);
      const std::string& tail = name_at(line, 1);
      const std::string& head = name_at(line, 2);
      if (tail == head) {
        throw ParseError(line.number, line.tokens[2].column,
                         "loop at vertex '" + tail + "'");
      }
      names.insert(tail);
      names.insert(head);
    } else {
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown keyword '" + keyword + "'");
    }
  }

  // Second pass: arcs, now that every vertex has its id.
  const bool unlabeled = !spec;
  LabeledGraph g(spec.value_or(GroupSpec::cyclic(1)));
  for (const std::string& name : names) g.add_vertex(name);
  for (const Line& line : lines) {
    const std::string& keyword = line.tokens[0].text;
    if (keyword == "edge") {
      g.add_arc(line.tokens[1].text, line.tokens[2].text, identity(g.group()));
    } else if (keyword == "arc") {
      const Token& label = line.tokens[3];
      if (unlabeled) {
        throw ParseError(line.number, label.column,
                         "labeled arc without a group declaration");
      }
      GroupElement value;
      try {
        value = parse_element(g.group(), label.text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, label.column,
                         "bad label '" + label.text + "': " + e.what());
      }
      g.add_arc(line.tokens[1].text, line.tokens[2].text, std::move(value));
    }
  }
  return {std::move(g), std::move(warnings)};
}

ParsedInstance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const LabeledGraph& g) {
  std::ostringstream out;
  out << "group " << g.group().to_string() << "\n";
  for (VertexId v : g.vertices()) out << "vertex " << g.name(v) << "\n";
  for (const Arc& a : g.arcs()) {
    out << "arc " << g.name(a.tail) << " " << g.name(a.head) << " "
        << format_element(g.group(), a.label) << "\n";
  }
  return out.str();
}

}  // namespace glp
