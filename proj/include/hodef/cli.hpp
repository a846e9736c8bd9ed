#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hodef {

// Full command-line driver, factored out of main for testing. args excludes
// the program name. Exit codes: 0 success or agreement, 1 usage or input
// error, 2 forbidden semantic disagreement or failed property run, 3 resource
// cap hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hodef
