#pragma once

#include <iosfwd>
#include <string>

#include "brickforge/multigraph.hpp"

namespace brickforge {

// Text graph format: first non-comment line `n m`, then m lines `u v` with
// 0-based endpoints; duplicate lines create parallel edges; `#` starts a
// comment. Writing renumbers vertices to 0..n-1 in ascending label order.
Multigraph read_graph_text(std::istream& in);           // ParseError
Multigraph read_graph_string(const std::string& text);  // ParseError
Multigraph read_graph_file(const std::string& path);    // ParseError
std::string graph_to_text(const Multigraph& g);
void write_graph_file(const Multigraph& g, const std::string& path);

}  // namespace brickforge
