// Text format for labeled graphs.
//
//   # comment
//   group cyclic 3            (or: integer | symmetric N | free a b ...)
//   vertex s                  (optional; vertices are also declared by arcs)
//   arc s u 1                 (tail, head, label)
//   edge u t                  (arc labeled with the identity)
//
// Vertex names match [A-Za-z0-9_]+.  Vertex ids follow the lexicographic
// order of names and arc ids follow file order.  A file without a group line
// may only contain edges and describes a graph over the trivial group.

#ifndef GLP_INSTANCE_IO_H_
#define GLP_INSTANCE_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "glp/labeled_graph.h"

namespace glp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedInstance {
  LabeledGraph graph;
  std::vector<std::string> warnings;
};

ParsedInstance parse_instance(std::string_view text);
ParsedInstance read_instance(const std::string& path);

std::string serialize_instance(const LabeledGraph& g);

}  // namespace glp

#endif  // GLP_INSTANCE_IO_H_
