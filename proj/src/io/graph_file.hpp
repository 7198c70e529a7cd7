#pragma once

#include "graph/framed_graph.hpp"

#include <string>

namespace fukaya::io {

/// Reads a graph document:
///   {"name": ..., "vertices": [{"id": ..., "halfedges": [...]}, ...],
///    "edges": [[h, h'], ...], "framing": {h: offset, ...}}
/// Errors carry "line N: " prefixes. Vertex lists are rotated to start at
/// their least id with the framing compensated.
graph::GraphSpec parse_graph_spec(const std::string& text);
graph::FramedGraph parse_graph(const std::string& text);

/// Io error for unreadable files; parse errors are prefixed with the path.
graph::FramedGraph load_graph(const std::string& path);

/// Canonical JSON for a graph; zero offsets are left out.
std::string serialize_graph(const graph::FramedGraph& g);

}  // namespace fukaya::io
