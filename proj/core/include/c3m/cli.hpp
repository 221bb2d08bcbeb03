#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c3m {

// Command line driver.  Exit codes: 0 success, 1 usage or syntax error,
// 2 domain error (input parsed but mathematically unsupported).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace c3m
