#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "egp/graph.hpp"

namespace egp::cli {

/// Exit codes: 0 ok, 1 verification failure or mismatch, 2 usage or input error,
/// 3 a size cap was exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// file:<path> | catalog:<name>[:<vertex>|:completed] | family:<description>.
/// A bare argument is tried as a file, then as a catalog name.
OrientedGraph resolve_graph(const std::string& spec, std::string* id = nullptr);

}  // namespace egp::cli
