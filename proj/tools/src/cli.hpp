#ifndef SPINFER_TOOLS_CLI_HPP
#define SPINFER_TOOLS_CLI_HPP

#include <string>
#include <vector>

namespace spinfer::cli {

/// Entry point behind main(); returns the process exit code.
/// 0 = success, 1 = input/parse error, 2 = configuration error.
int run(int argc, char** argv);

/// "start:end:step" grid syntax (a bare number is a singleton grid).
std::vector<double> parse_grid(const std::string& text);

/// "fnv1a64:<16 hex digits>" fingerprint of a file's bytes.
std::string file_digest(const std::string& path);

}  // namespace spinfer::cli

#endif  // SPINFER_TOOLS_CLI_HPP
