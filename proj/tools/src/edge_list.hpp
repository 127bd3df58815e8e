#pragma once

#include <iosfwd>
#include <string>

#include "trd/graph.hpp"

namespace trd::cli {

/// "n m" header, then m lines "u v". Blank lines and '#' comments are
/// skipped. Throws MalformedEdgeList.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace trd::cli
