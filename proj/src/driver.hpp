// Command driver behind both the shared-library entry point and the CLI.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 input
// error, 3 numerical failure.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fukalg {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fukalg
