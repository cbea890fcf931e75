#pragma once

// Explicit zero forcing sets and relaxed chronologies that realize the
// closed-form values for gear and helm graphs. Vertex indices follow the
// layouts in generators.hpp.

#include "zf/forcing.hpp"
#include "zf/generators.hpp"

#include <vector>

namespace zf {

/// {v_0, v_{m(r+1)}, v_1}: a size-3 zero forcing set of Gr(m, r).
VertexSet gear_minimum_set(GearParams p);

/// Relaxed chronology for gear_minimum_set in which v_0 never forces: the
/// two rim chains advance toward each other one vertex per step.
std::vector<ForceStep> gear_passive_center_script(GearParams p);

/// Size-3 set whose propagating family finishes in pt(Gr(m, r)) steps.
VertexSet gear_efficient_set(GearParams p);

/// Pendant-only set of size ceil(m/2) for H_m, m >= 5, finishing in pt(H_m).
VertexSet helm_efficient_set(std::size_t m);

/// {v_0} plus p_{i,1..s-1} for every spoke; H(m, s) with s >= 2.
VertexSet generalized_helm_efficient_set(HelmParams p);

} // namespace zf
