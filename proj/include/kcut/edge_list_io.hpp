#pragma once

#include <iosfwd>
#include <string>

#include "kcut/graph.hpp"

namespace kcut {

// Format:
//   # comment
//   p <n> <m> <weighted|multi>
//   u v w          (m lines, 0-based endpoints)
// Errors name the offending line.
MultiGraph read_edge_list(std::istream& in);
MultiGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const MultiGraph& g);
std::string to_edge_list(const MultiGraph& g);

}  // namespace kcut
