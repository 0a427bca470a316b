#pragma once

#include <string>
#include <vector>

namespace sset {

/// Batch command-line tool. Exit codes: 0 every check holds, 1 at least one
/// fails, 2 only inconclusive results, 64 usage error, 65 parse/data error.
int cli_run(const std::vector<std::string>& args);
int cli_main(int argc, char** argv);

}  // namespace sset
