#ifndef SVLAB_CLI_HPP
#define SVLAB_CLI_HPP

#include <string>
#include <vector>

namespace svlab {

/**
 * Run the command line tool.  `args` excludes the program name.  Returns
 * the process exit code: 0 success, 1 usage/config/parse/IO errors,
 * 2 precondition or quadrature failures, 3 internal-guarantee violations
 * and reports with defects (negative slope margin, failed claim ledger,
 * inconsistent uniqueness outcome).
 */
int run_cli(const std::vector<std::string>& args);

} // namespace svlab

#endif
