#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "idforest/graph.hpp"

namespace idforest::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// "-" reads `in`; an existing path is read from disk; anything else is taken
/// as inline graph6. Text starting with a digit is parsed as an edge list.
Graph read_graph(const std::string& source, std::istream& in);

}  // namespace idforest::cli
