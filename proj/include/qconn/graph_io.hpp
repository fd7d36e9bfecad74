#pragma once

#include <string>
#include <variant>

#include "qconn/graph.hpp"

namespace qconn {

using GraphFile = std::variant<MatrixGraph, ListGraph>;

// Text format, newline-terminated:
//   #model=matrix|list
//   #directed=0|1
//   n            (matrix)  or  n k   (list)
//   n rows: n characters 0/1 (matrix) or k space-separated indices (list)
// Writing then reading gives back the identical byte string.
std::string write_graph_text(const MatrixGraph& g);
std::string write_graph_text(const ListGraph& g);
std::string write_graph_text(const GraphFile& g);

// Throws std::runtime_error with a line diagnostic on malformed input.
GraphFile read_graph_text(const std::string& text);

void save_graph(const GraphFile& g, const std::string& path);
GraphFile load_graph(const std::string& path);

} // namespace qconn
