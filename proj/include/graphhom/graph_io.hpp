#ifndef GRAPHHOM_GRAPH_IO_HPP
#define GRAPHHOM_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "graphhom/labeled_graph.hpp"

namespace graphhom {

/// Text graph format:
///   N M K
///   M lines "u v"   (0-based endpoints; repeated lines = parallel edges)
///   K lines "l v"   (positive label l assigned to node v)
/// A "u u" line is a parse error: loops are outside the domain contract.
LabeledGraph read_graph(std::istream& in);
LabeledGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const LabeledGraph& g);
std::string graph_to_string(const LabeledGraph& g);

}  // namespace graphhom

#endif
