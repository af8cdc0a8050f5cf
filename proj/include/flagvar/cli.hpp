#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagvar {

/// Run one command. Exit status: 0 success, 1 verification failure,
/// 2 usage error, 3 enumeration guard overflow.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagvar
