#ifndef FLOORQ_CLI_HPP
#define FLOORQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

// Subcommand front end. Exit codes are a stable contract:
//   0 success, 1 verification failure, 2 usage or runtime-guard error.

namespace floorq {

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace floorq

#endif
