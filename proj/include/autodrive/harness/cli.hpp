#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace autodrive::harness {

// Subcommands: gen-maps, train-q, eval-q, train-neat, eval-genome, plot,
// compare. Returns 0 on success, 2 on a usage error, 1 on any other failure.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autodrive::harness
