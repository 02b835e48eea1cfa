// Command-line front end.  Exit codes: 0 answered, 1 infeasible or contained,
// 2 usage or input errors.

#ifndef GLP_TOOLS_CLI_H_
#define GLP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace glp::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace glp::cli

#endif  // GLP_TOOLS_CLI_H_
