#pragma once

#include "zf/graph.hpp"

#include <cstddef>

namespace zf {

/// Generalized gear Gr(m, r): m spokes, r intermediate vertices per rim arc.
struct GearParams {
  std::size_t m;
  std::size_t r;
};

/// Generalized helm H(m, s): m spokes, s pendants per spoke.
struct HelmParams {
  std::size_t m;
  std::size_t s;
};

// Index layouts.
//   gear: 0 = v_0 (center); 1..m(r+1) = v_1..v_{m(r+1)} in rim order; spokes
//         are the multiples of r+1.
//   helm: 0 = v_0; 1..m = spokes v_1..v_m; then p_{i,j} row-major from m+1.

Graph gear(GearParams p);
Graph helm(HelmParams p);
Graph wheel(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

/// Rim index of v_M in Gr(m, r) for any M >= 1, reading indices past
/// m(r+1) cyclically (v_{m(r+1)+1} is v_1).
Vertex gear_rim_index(GearParams p, std::size_t M);

/// Spoke index of v_M in H(m, s) for any M >= 1, cyclic past m.
Vertex helm_spoke_index(HelmParams p, std::size_t M);

/// Vertex index of pendant p_{i,j}, 1 <= i <= m, 1 <= j <= s. `i` wraps
/// cyclically like helm_spoke_index.
Vertex helm_pendant_index(HelmParams p, std::size_t i, std::size_t j);

} // namespace zf
