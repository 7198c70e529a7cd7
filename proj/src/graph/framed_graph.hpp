#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fukaya::graph {

/// Plain description of a framed graph, as read from or written to a file.
struct GraphSpec {
  struct VertexSpec {
    std::string id;
    std::vector<std::string> halfedges;  // counterclockwise
  };
  std::string name;
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;  // (positive, negative)
  std::map<std::string, long long> framing;                // omitted entries are 0
  /// Edge ids in edge order; generated as e1, e2, ... when empty.
  std::vector<std::string> edge_ids;
};

/// Half-edge graph with counterclockwise vertex orders and framing offsets.
/// Half-edges, vertices and edges are addressed by dense indices.
class FramedGraph {
 public:
  FramedGraph() = default;

  /// Validates and indexes. Throws InvalidGraph on any violated invariant.
  static FramedGraph build(const GraphSpec& spec);
  GraphSpec to_spec() const;

  const std::string& name() const { return name_; }

  std::size_t halfedge_count() const { return he_id_.size(); }
  std::size_t vertex_count() const { return vertex_id_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& halfedge_id(int h) const { return he_id_[static_cast<std::size_t>(h)]; }
  const std::string& vertex_id(int v) const { return vertex_id_[static_cast<std::size_t>(v)]; }
  const std::string& edge_id(int e) const { return edge_id_[static_cast<std::size_t>(e)]; }

  std::optional<int> find_halfedge(const std::string& id) const;
  std::optional<int> find_vertex(const std::string& id) const;
  /// Accepts an edge id or the id of either of its half-edges.
  std::optional<int> find_edge(const std::string& id) const;

  int tau(int h) const { return tau_[static_cast<std::size_t>(h)]; }
  bool is_leg(int h) const { return tau(h) == h; }
  int vertex_of(int h) const { return vertex_of_[static_cast<std::size_t>(h)]; }
  int position(int h) const { return position_[static_cast<std::size_t>(h)]; }
  long long offset(int h) const { return offset_[static_cast<std::size_t>(h)]; }
  /// Index of the edge containing h, -1 for legs.
  int edge_of(int h) const { return edge_of_[static_cast<std::size_t>(h)]; }
  /// 0 for the positive half-edge of an edge (and for legs), 1 for the negative one.
  int side(int h) const;

  const std::vector<int>& halfedges_at(int v) const { return vertex_he_[static_cast<std::size_t>(v)]; }
  int valency(int v) const { return static_cast<int>(halfedges_at(v).size()); }
  const std::pair<int, int>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::vector<int> legs() const;
  bool is_loop(int e) const { return vertex_of(edge(e).first) == vertex_of(edge(e).second); }

  /// Connected component index per vertex, numbered by first vertex.
  std::vector<int> components() const;
  int component_count() const;

 private:
  std::string name_;
  std::vector<std::string> he_id_;
  std::vector<std::string> vertex_id_;
  std::vector<std::string> edge_id_;
  std::vector<int> tau_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
  std::vector<long long> offset_;
  std::vector<int> edge_of_;
  std::vector<std::vector<int>> vertex_he_;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::string, int> he_index_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
};

/// Rotates the order at vertex `v` to start at position r, adjusting offsets so
/// the framing is unchanged.
GraphSpec rotate_vertex(const GraphSpec& spec, std::size_t vertex, std::size_t r);

/// Gauge move at one vertex: rotation by r followed by `turns` full turns
/// (2 per turn on every offset there). Winding numbers are unchanged.
GraphSpec gauge_vertex(const GraphSpec& spec, std::size_t vertex, std::size_t r, long long turns);

/// Rotates every vertex list to start at its lexicographically least id.
GraphSpec normalize_rotations(const GraphSpec& spec);

/// Prepends `prefix` to every vertex, half-edge and edge id.
GraphSpec prefix_ids(const GraphSpec& spec, const std::string& prefix);

/// Disjoint union; the ids of `a` and `b` must not collide.
GraphSpec disjoint_union(const GraphSpec& a, const GraphSpec& b, const std::string& name);

}  // namespace fukaya::graph
