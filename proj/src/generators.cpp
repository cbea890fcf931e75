#include "zf/generators.hpp"

#include "zf/error.hpp"

#include <string>
#include <vector>

namespace zf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParams, what);
}

std::string vlabel(std::size_t i) { return "v_" + std::to_string(i); }

} // namespace

Vertex gear_rim_index(GearParams p, std::size_t M) {
  require(p.m >= 3 && p.r >= 1, "gear requires m >= 3 and r >= 1");
  require(M >= 1, "rim references start at v_1");
  const std::size_t rim = p.m * (p.r + 1);
  return (M - 1) % rim + 1;
}

Vertex helm_spoke_index(HelmParams p, std::size_t M) {
  require(p.m >= 3 && p.s >= 1, "helm requires m >= 3 and s >= 1");
  require(M >= 1, "spoke references start at v_1");
  return (M - 1) % p.m + 1;
}

Vertex helm_pendant_index(HelmParams p, std::size_t i, std::size_t j) {
  const Vertex spoke = helm_spoke_index(p, i);
  require(j >= 1 && j <= p.s, "pendant index j must lie in [1, s]");
  return p.m + 1 + (spoke - 1) * p.s + (j - 1);
}

Graph gear(GearParams p) {
  require(p.m >= 3 && p.r >= 1, "gear requires m >= 3 and r >= 1");
  const std::size_t rim = p.m * (p.r + 1);
  const std::size_t n = rim + 1;
  std::vector<Edge> edges;
  edges.reserve(p.m * (p.r + 2));
  for (std::size_t i = 1; i < rim; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, rim);
  for (std::size_t k = 1; k <= p.m; ++k) edges.emplace_back(0, k * (p.r + 1));

  std::vector<Role> roles(n, Role::Intermediate);
  std::vector<std::string> labels(n);
  roles[0] = Role::Center;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = vlabel(i);
    if (i != 0 && i % (p.r + 1) == 0) roles[i] = Role::Spoke;
  }
  return from_edge_list(n, edges).annotated(std::move(roles), std::move(labels),
                                            FamilyInfo{FamilyKind::Gear, p.m, p.r});
}

Graph helm(HelmParams p) {
  require(p.m >= 3 && p.s >= 1, "helm requires m >= 3 and s >= 1");
  const std::size_t n = p.m * (1 + p.s) + 1;
  std::vector<Edge> edges;
  edges.reserve(p.m * (p.s + 2));
  for (std::size_t i = 1; i <= p.m; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % p.m + 1);
    for (std::size_t j = 1; j <= p.s; ++j) edges.emplace_back(i, helm_pendant_index(p, i, j));
  }

  std::vector<Role> roles(n, Role::Pendant);
  std::vector<std::string> labels(n);
  roles[0] = Role::Center;
  labels[0] = vlabel(0);
  for (std::size_t i = 1; i <= p.m; ++i) {
    roles[i] = Role::Spoke;
    labels[i] = vlabel(i);
    for (std::size_t j = 1; j <= p.s; ++j) {
      labels[helm_pendant_index(p, i, j)] =
          "p_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
  }
  return from_edge_list(n, edges).annotated(std::move(roles), std::move(labels),
                                            FamilyInfo{FamilyKind::Helm, p.m, p.s});
}

Graph wheel(std::size_t n) {
  require(n >= 3, "wheel requires a rim of at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % n + 1);
  }
  std::vector<Role> roles(n + 1, Role::Spoke);
  std::vector<std::string> labels(n + 1);
  roles[0] = Role::Center;
  for (std::size_t i = 0; i <= n; ++i) labels[i] = vlabel(i);
  return from_edge_list(n + 1, edges).annotated(std::move(roles), std::move(labels),
                                                FamilyInfo{FamilyKind::Wheel, n, 0});
}

Graph path(std::size_t n) {
  require(n >= 1, "path requires at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = vlabel(i + 1);
  return from_edge_list(n, edges).annotated({}, std::move(labels),
                                            FamilyInfo{FamilyKind::Path, n, 0});
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle requires at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = vlabel(i + 1);
  return from_edge_list(n, edges).annotated({}, std::move(labels),
                                            FamilyInfo{FamilyKind::Cycle, n, 0});
}

} // namespace zf
