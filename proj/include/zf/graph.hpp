#pragma once

#include "zf/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zf {

using Edge = std::pair<Vertex, Vertex>;

enum class Role { Plain, Center, Spoke, Intermediate, Pendant };

std::string_view to_string(Role role) noexcept;
std::optional<Role> role_from_string(std::string_view name) noexcept;

enum class FamilyKind { Gear, Helm, Wheel, Path, Cycle };

std::string_view to_string(FamilyKind kind) noexcept;
std::optional<FamilyKind> family_from_string(std::string_view name) noexcept;

/// Provenance of a generated graph. `param` is r for gears, s for helms and
/// unused (0) otherwise; `m` is the spoke count, or n for wheel/path/cycle.
struct FamilyInfo {
  FamilyKind kind;
  std::size_t m;
  std::size_t param;

  friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

/// Immutable simple undirected graph with dense adjacency.
class Graph {
public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Role role(Vertex v) const;
  /// Human-readable label (v_3, p_{2,1}); defaults to the index.
  std::string label(Vertex v) const;
  const std::optional<FamilyInfo>& family() const noexcept { return family_; }

  /// Neighborhood bitmasks; only valid for graphs with at most 64 vertices.
  std::span<const std::uint64_t> neighbor_masks() const;

  /// Copy carrying role tags, labels and family provenance. Empty vectors
  /// leave the corresponding attribute at its default.
  Graph annotated(std::vector<Role> roles, std::vector<std::string> labels,
                  std::optional<FamilyInfo> family) const;

  friend Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::uint64_t> masks_;
  std::size_t edge_count_ = 0;
  std::vector<Role> roles_;
  std::vector<std::string> labels_;
  std::optional<FamilyInfo> family_;
};

/// Builds a graph; duplicate edges collapse, self-loops and out-of-range
/// endpoints throw (SelfLoop / InvalidEdge).
Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

inline Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::size_t degree(const Graph& g, Vertex v);

/// Throws EmptyGraph when the graph has no vertices.
std::size_t min_degree(const Graph& g);

/// True iff `vs` lists the vertices of an induced path in path order.
/// Throws DuplicateVertex / InvalidVertex on malformed input.
bool is_induced_path(const Graph& g, std::span<const Vertex> vs);

std::size_t count_degree_one(const Graph& g);

} // namespace zf
