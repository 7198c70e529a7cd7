#pragma once

#include "graph/framed_graph.hpp"
#include "io/report.hpp"

#include <cstdint>
#include <string>

namespace fukaya::io {

/// 64-bit FNV-1a, used to seed per-graph randomness from the graph name.
std::uint64_t fnv1a(const std::string& text);

/// Every check the corpus runs on one graph: the main comparison under the
/// given and two seeded random framings, the periodic comparison over Q,
/// each contractible edge, each single-vertex localization, gauge
/// invariance of winding numbers and the file round trip.
Report graph_suite(const graph::FramedGraph& g);

/// Runs graph_suite on every *.json file of `dir` in file-name order. Files
/// that fail to load become a failing "load" row.
Report corpus_verify(const std::string& dir, bool parallel);

}  // namespace fukaya::io
