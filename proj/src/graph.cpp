#include "zf/graph.hpp"

#include "zf/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace zf {

namespace {

constexpr std::array kRoleNames{
    std::pair{Role::Plain, std::string_view{"plain"}},
    std::pair{Role::Center, std::string_view{"center"}},
    std::pair{Role::Spoke, std::string_view{"spoke"}},
    std::pair{Role::Intermediate, std::string_view{"intermediate"}},
    std::pair{Role::Pendant, std::string_view{"pendant"}},
};

constexpr std::array kFamilyNames{
    std::pair{FamilyKind::Gear, std::string_view{"gear"}},
    std::pair{FamilyKind::Helm, std::string_view{"helm"}},
    std::pair{FamilyKind::Wheel, std::string_view{"wheel"}},
    std::pair{FamilyKind::Path, std::string_view{"path"}},
    std::pair{FamilyKind::Cycle, std::string_view{"cycle"}},
};

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range for graph on " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

} // namespace

std::string_view to_string(Role role) noexcept {
  for (auto [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "plain";
}

std::optional<Role> role_from_string(std::string_view name) noexcept {
  for (auto [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::string_view to_string(FamilyKind kind) noexcept {
  for (auto [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "gear";
}

std::optional<FamilyKind> family_from_string(std::string_view name) noexcept {
  for (auto [k, n] : kFamilyNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidEdge,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
  }
  std::size_t degree_sum = 0;
  for (const auto& nb : g.adjacency_) degree_sum += nb.count();
  g.edge_count_ = degree_sum / 2;
  if (n <= VertexSet::kWordBits) {
    g.masks_.reserve(n);
    for (const auto& nb : g.adjacency_) g.masks_.push_back(nb.to_mask());
  }
  return g;
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  return adjacency_[u].contains(v);
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).count(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Role Graph::role(Vertex v) const {
  check_vertex(*this, v);
  return roles_.empty() ? Role::Plain : roles_[v];
}

std::string Graph::label(Vertex v) const {
  check_vertex(*this, v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::span<const std::uint64_t> Graph::neighbor_masks() const {
  if (vertex_count() > VertexSet::kWordBits) {
    throw Error(ErrorCode::TooLarge, "bitmask view needs at most 64 vertices");
  }
  return masks_;
}

Graph Graph::annotated(std::vector<Role> roles, std::vector<std::string> labels,
                       std::optional<FamilyInfo> family) const {
  const std::size_t n = vertex_count();
  if ((!roles.empty() && roles.size() != n) || (!labels.empty() && labels.size() != n)) {
    throw Error(ErrorCode::InvalidParams, "annotation length does not match vertex count");
  }
  Graph g(*this);
  g.roles_ = std::move(roles);
  g.labels_ = std::move(labels);
  g.family_ = family;
  return g;
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "minimum degree of the empty graph");
  }
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> vs) {
  VertexSet seen(g.vertex_count());
  for (Vertex v : vs) {
    check_vertex(g, v);
    if (seen.contains(v)) {
      throw Error(ErrorCode::DuplicateVertex,
                  "vertex " + std::to_string(v) + " repeated in path");
    }
    seen.insert(v);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const bool edge = g.adjacent(vs[i], vs[j]);
      if (edge != (j == i + 1)) return false;
    }
  }
  return true;
}

std::size_t count_degree_one(const Graph& g) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) c += g.degree(v) == 1 ? 1 : 0;
  return c;
}

} // namespace zf
