#pragma once

#include "zf/graph.hpp"

#include <cstdint>
#include <vector>

namespace zf {

/// perm[v] is the image of vertex v.
using Permutation = std::vector<Vertex>;

bool is_automorphism(const Graph& g, const Permutation& perm);

/// The dihedral symmetry group of a family-generated graph (rotations and
/// reflections of the rim, carrying the center and pendants along), identity
/// included. Graphs without family provenance get the trivial group.
std::vector<Permutation> dihedral_automorphisms(const Graph& g);

std::uint64_t permute_mask(const Permutation& perm, std::uint64_t mask);

} // namespace zf
