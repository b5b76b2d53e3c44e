#pragma once

#include <string>
#include <vector>

#include "opl/graph.hpp"

namespace opl {

enum class GraphFormat { graph6, edge_list };

/// Malformed input; offset is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

Graph parse_graph(const std::string& text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

/// One graph6 string per line; blank lines skipped.
std::vector<Graph> parse_graph6_stream(const std::string& text);
std::string write_graph6_stream(const std::vector<Graph>& graphs);

}  // namespace opl
