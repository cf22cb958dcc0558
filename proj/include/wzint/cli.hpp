#ifndef WZINT_CLI_HPP
#define WZINT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wzint::cli {

// Runs one command line (without argv[0]). Exit codes:
//   0  success; for check/verify, all cells equal / all certificates valid
//   1  a value mismatch or an invalid certificate
//   2  usage or domain errors (bad flags, out-of-range values, exceeded
//      term budget, the rejected (k, m) = (1, 0) request)
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace wzint::cli

#endif
