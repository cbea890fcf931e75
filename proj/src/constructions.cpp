#include "zf/constructions.hpp"

#include "zf/error.hpp"

namespace zf {

namespace {

std::size_t rim_size(GearParams p) { return p.m * (p.r + 1); }

} // namespace

VertexSet gear_minimum_set(GearParams p) {
  const std::size_t rim = rim_size(p);
  if (p.m < 3 || p.r < 1) throw Error(ErrorCode::InvalidParams, "gear requires m >= 3, r >= 1");
  return VertexSet(rim + 1, {0, rim, 1});
}

std::vector<ForceStep> gear_passive_center_script(GearParams p) {
  const std::size_t rim = rim_size(p);
  std::vector<ForceStep> script;
  std::size_t left = 1;
  std::size_t right = rim;
  while (right - left > 1) {
    ForceStep step{{left, left + 1}};
    ++left;
    if (right - left > 1) {
      step.push_back({right, right - 1});
      --right;
    }
    script.push_back(std::move(step));
  }
  return script;
}

VertexSet gear_efficient_set(GearParams p) {
  if (p.m < 3 || p.r < 1) throw Error(ErrorCode::InvalidParams, "gear requires m >= 3, r >= 1");
  const std::size_t rim = rim_size(p);
  // Odd m with odd r > 1 seeds two adjacent intermediates next to v_1; every
  // other case seeds v_1 with the last spoke and its predecessor.
  if (p.m % 2 == 1 && p.r % 2 == 1 && p.r > 1) return VertexSet(rim + 1, {1, 2, rim - 1});
  return VertexSet(rim + 1, {1, rim, rim - 1});
}

VertexSet helm_efficient_set(std::size_t m) {
  if (m < 5) throw Error(ErrorCode::InvalidParams, "helm construction requires m >= 5");
  const HelmParams p{m, 1};
  VertexSet b(2 * m + 1);
  auto add = [&](std::size_t i) { b.insert(helm_pendant_index(p, i, 1)); };
  for (std::size_t i = 1; i <= 3; ++i) add(i);
  // Pairs p_{6+4j}, p_{7+4j}; their count depends on m mod 4.
  constexpr std::size_t kOffset[4] = {8, 5, 6, 7};
  const std::size_t pairs = (m - kOffset[m % 4]) / 4;
  for (std::size_t j = 0; j < pairs; ++j) {
    add(6 + 4 * j);
    add(7 + 4 * j);
  }
  if (m % 4 == 0) add(m - 3);
  if (m % 4 == 3) add(m - 1);
  return b;
}

VertexSet generalized_helm_efficient_set(HelmParams p) {
  if (p.m < 3 || p.s < 2) {
    throw Error(ErrorCode::InvalidParams, "generalized helm construction requires m >= 3, s >= 2");
  }
  VertexSet b(p.m * (p.s + 1) + 1, {0});
  for (std::size_t i = 1; i <= p.m; ++i) {
    for (std::size_t j = 1; j < p.s; ++j) b.insert(helm_pendant_index(p, i, j));
  }
  return b;
}

} // namespace zf
