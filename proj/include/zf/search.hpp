#pragma once

#include "zf/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace zf {

enum class Symmetry {
  Off,
  /// Only examine the numerically smallest member of each dihedral orbit.
  On,
  /// Run both ways and throw if the answers differ.
  CrossCheck,
};

struct SearchOptions {
  /// Start at max(1, delta(G), ceil(#degree-1 vertices / 2)) and reject sets
  /// in which no vertex can force before running a closure. Off means start
  /// at cardinality 1 and close every candidate.
  bool pruning = true;
  /// Collect every minimum zero forcing set (and every efficient set)
  /// instead of the first in lexicographic order.
  bool all_witnesses = false;
  /// Exhaustively close every set of cardinality z-1 and report the tally.
  bool prove_minimality = false;
  /// For pt: stop at the first minimum ZFS; pt is then only an upper bound.
  bool pt_first_witness = false;
  Symmetry symmetry = Symmetry::Off;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Refuse (BudgetExceeded) when the candidate count up to the largest
  /// cardinality examined would exceed this. 0 is unlimited.
  std::uint64_t max_sets = 0;
};

struct MinimalityProof {
  std::size_t cardinality;
  std::uint64_t sets_examined;
  bool all_failed;
};

/// Witnesses are sorted vertex-index lists in lexicographic order.
struct SearchReport {
  std::size_t n = 0;
  std::size_t z = 0;
  std::vector<std::vector<Vertex>> zfs_witnesses;

  std::optional<std::size_t> pt;
  bool pt_is_upper_bound = false;
  std::vector<std::vector<Vertex>> pt_witnesses;
  /// pt(G, B) for each entry of zfs_witnesses, when pt was computed.
  std::vector<std::size_t> witness_pt;

  std::size_t lower_bound = 0;
  std::uint64_t sets_examined = 0;
  std::uint64_t closure_calls = 0;
  std::optional<MinimalityProof> minimality;
  Symmetry symmetry = Symmetry::Off;
  std::size_t symmetry_group_order = 1;
  double wall_time_ms = 0.0;
};

/// Z(G) by increasing-cardinality exhaustive search (z-part of the report).
SearchReport zero_forcing_number(const Graph& g, const SearchOptions& opts = {});

/// Z(G) and pt(G): pt is the minimum of pt(G, B) over every minimum ZFS.
SearchReport propagation_time(const Graph& g, const SearchOptions& opts = {});

/// Lower bound used when pruning: max(1, delta, ceil(#pendants / 2)).
std::size_t search_lower_bound(const Graph& g);

/// Default ceiling for path_cover_number.
inline constexpr std::size_t kPathCoverCeiling = 14;

/// p(G): fewest induced paths partitioning V(G). Throws TooLarge above
/// `ceiling` vertices (hard cap 24) and EmptyGraph on zero vertices.
std::size_t path_cover_number(const Graph& g, std::size_t ceiling = kPathCoverCeiling);

/// One minimum path cover, each part listed in path order.
std::vector<std::vector<Vertex>> minimum_path_cover(const Graph& g,
                                                    std::size_t ceiling = kPathCoverCeiling);

struct BoundChainReport {
  std::size_t min_degree;
  std::size_t path_cover;
  std::size_t z;
  std::size_t chain_count;
  bool chain_set_is_path_cover;
  bool holds;
};

/// Checks delta(G) <= Z(G), p(G) <= Z(G) and that the chain set of a
/// minimum ZFS has |B| >= p(G) chains forming a path cover.
BoundChainReport verify_bound_chain(const Graph& g, std::size_t ceiling = kPathCoverCeiling,
                                    unsigned workers = 1);

} // namespace zf
