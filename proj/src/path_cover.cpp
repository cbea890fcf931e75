#include "zf/error.hpp"
#include "zf/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

namespace zf {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kHardCap = 24;

struct InducedPath {
  Mask mask;
  std::vector<Vertex> order;
};

// Every induced path, once per vertex set, grouped by its lowest vertex.
std::vector<std::vector<InducedPath>> induced_paths_by_low_vertex(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = g.neighbor_masks();
  std::vector<InducedPath> all;
  std::vector<Vertex> order;

  // Extend at the tail only with vertices adjacent to the tail and to no
  // other path vertex, which keeps the path induced.
  auto extend = [&](auto&& self, Mask mask, Mask interior_nbrs) -> void {
    all.push_back({mask, order});
    const Vertex tail = order.back();
    Mask candidates = adj[tail] & ~mask & ~interior_nbrs;
    for (; candidates != 0; candidates &= candidates - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(candidates));
      order.push_back(v);
      self(self, mask | (Mask{1} << v), interior_nbrs | adj[tail]);
      order.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    order.assign(1, v);
    extend(extend, Mask{1} << v, 0);
  }

  std::sort(all.begin(), all.end(),
            [](const InducedPath& a, const InducedPath& b) { return a.mask < b.mask; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const InducedPath& a, const InducedPath& b) {
                          return a.mask == b.mask;
                        }),
            all.end());

  std::vector<std::vector<InducedPath>> grouped(n);
  for (auto& p : all) grouped[std::countr_zero(p.mask)].push_back(std::move(p));
  return grouped;
}

std::vector<std::vector<Vertex>> solve(const Graph& g, std::size_t ceiling, bool reconstruct) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "path cover of the empty graph");
  if (n > std::min(ceiling, kHardCap)) {
    throw Error(ErrorCode::TooLarge, "path cover search limited to " +
                                         std::to_string(std::min(ceiling, kHardCap)) +
                                         " vertices, graph has " + std::to_string(n));
  }
  const auto paths = induced_paths_by_low_vertex(g);
  const Mask full = (Mask{1} << n) - 1;
  constexpr auto kUnset = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> best(std::size_t{1} << n, kUnset);
  std::vector<std::uint32_t> choice(reconstruct ? best.size() : 0);
  best[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    const auto& candidates = paths[std::countr_zero(s)];
    for (std::uint32_t i = 0; i < candidates.size(); ++i) {
      const Mask p = candidates[i].mask;
      if ((p & ~s) != 0) continue;
      const std::uint8_t value = static_cast<std::uint8_t>(best[s ^ p] + 1);
      if (value < best[s]) {
        best[s] = value;
        if (reconstruct) choice[s] = i;
      }
    }
  }

  std::vector<std::vector<Vertex>> cover;
  if (!reconstruct) {
    cover.resize(best[full]);
    return cover;
  }
  for (Mask s = full; s != 0;) {
    const auto& p = paths[std::countr_zero(s)][choice[s]];
    cover.push_back(p.order);
    s ^= p.mask;
  }
  return cover;
}

} // namespace

std::size_t path_cover_number(const Graph& g, std::size_t ceiling) {
  return solve(g, ceiling, false).size();
}

std::vector<std::vector<Vertex>> minimum_path_cover(const Graph& g, std::size_t ceiling) {
  return solve(g, ceiling, true);
}

} // namespace zf
