#include "zf/symmetry.hpp"

#include "zf/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace zf {

namespace {

Permutation identity(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation p(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) p[v] = outer[inner[v]];
  return p;
}

// Rotation and reflection generators of the rim; everything else follows.
struct Generators {
  Permutation rotation;
  Permutation reflection;
  std::size_t rotation_order;
};

Generators family_generators(const Graph& g, const FamilyInfo& f) {
  const std::size_t n = g.vertex_count();
  Permutation rot = identity(n);
  Permutation ref = identity(n);
  switch (f.kind) {
  case FamilyKind::Gear: {
    // Rim 1..N, spokes at multiples of r+1; rotate by one spoke period.
    const std::size_t rim = f.m * (f.param + 1);
    for (std::size_t i = 1; i <= rim; ++i) {
      rot[i] = (i - 1 + f.param + 1) % rim + 1;
      ref[i] = i == rim ? rim : rim - i;
    }
    return {rot, ref, f.m};
  }
  case FamilyKind::Helm: {
    const std::size_t m = f.m;
    const std::size_t s = f.param;
    auto spoke_rot = [m](std::size_t i) { return i % m + 1; };
    auto spoke_ref = [m](std::size_t i) { return i == m ? m : m - i; };
    for (std::size_t i = 1; i <= m; ++i) {
      rot[i] = spoke_rot(i);
      ref[i] = spoke_ref(i);
      for (std::size_t j = 0; j < s; ++j) {
        const std::size_t p = m + 1 + (i - 1) * s + j;
        rot[p] = m + 1 + (spoke_rot(i) - 1) * s + j;
        ref[p] = m + 1 + (spoke_ref(i) - 1) * s + j;
      }
    }
    return {rot, ref, m};
  }
  case FamilyKind::Wheel: {
    const std::size_t m = f.m;
    for (std::size_t i = 1; i <= m; ++i) {
      rot[i] = i % m + 1;
      ref[i] = i == m ? m : m - i;
    }
    return {rot, ref, m};
  }
  case FamilyKind::Cycle: {
    for (std::size_t i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      ref[i] = (n - i) % n;
    }
    return {rot, ref, n};
  }
  case FamilyKind::Path:
    for (std::size_t i = 0; i < n; ++i) ref[i] = n - 1 - i;
    return {rot, ref, 1};
  }
  return {rot, ref, 1};
}

} // namespace

bool is_automorphism(const Graph& g, const Permutation& perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

std::vector<Permutation> dihedral_automorphisms(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (!g.family()) return {identity(n)};
  const Generators gens = family_generators(g, *g.family());
  if (!is_automorphism(g, gens.rotation) || !is_automorphism(g, gens.reflection)) {
    throw Error(ErrorCode::InvalidParams,
                "family provenance does not match the graph's adjacency");
  }
  std::vector<Permutation> group;
  Permutation r = identity(n);
  for (std::size_t k = 0; k < gens.rotation_order; ++k) {
    group.push_back(r);
    group.push_back(compose(r, gens.reflection));
    r = compose(gens.rotation, r);
  }
  // Small cases (path of one vertex, etc.) can repeat elements.
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  return group;
}

std::uint64_t permute_mask(const Permutation& perm, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (; mask != 0; mask &= mask - 1) {
    out |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(mask))];
  }
  return out;
}

} // namespace zf
