#pragma once

#include "zf/graph.hpp"
#include "zf/vertex_set.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace zf {

/// source -> target under the color change rule.
struct Force {
  Vertex source;
  Vertex target;

  friend auto operator<=>(const Force&, const Force&) = default;
};

using ForceStep = std::vector<Force>;

/// A forcing process from an initial blue set: the force sets F(1..K) and the
/// expansion sequence E[0..K] with E[0] = initial and
/// E[k] = E[k-1] + targets(F(k)).
struct Chronology {
  VertexSet initial;
  std::vector<ForceStep> steps;
  std::vector<VertexSet> expansions;

  std::size_t completion_time() const noexcept { return steps.size(); }
  const VertexSet& final_blue() const { return expansions.back(); }
  /// True when the last expansion is every vertex.
  bool complete() const { return final_blue().is_full(); }
};

/// Vertex-disjoint forcing chains; each starts at an initial vertex.
struct ChainSet {
  std::vector<std::vector<Vertex>> chains;
};

/// Which source is credited when several blue vertices can force the same
/// white vertex. Expansions do not depend on this choice.
enum class TieBreak { LowestSource, HighestSource };

/// S(G, blue): every legal force against the current blue set, sorted by
/// (source, target).
std::vector<Force> valid_forces(const Graph& g, const VertexSet& blue);

/// Propagating family of forces: every forceable white vertex turns blue at
/// each time-step. Stops when no force remains; the result may be incomplete.
Chronology propagate(const Graph& g, const VertexSet& initial,
                     TieBreak tie_break = TieBreak::LowestSource);

/// Replays a relaxed chronology, validating every force against the
/// expansion before its step. Throws InvalidForceAtStep or
/// Error{DuplicateTarget}. The result may be incomplete; check complete().
Chronology run_relaxed(const Graph& g, const VertexSet& initial,
                       std::span<const ForceStep> script);

VertexSet closure(const Graph& g, const VertexSet& initial);

inline bool is_zero_forcing_set(const Graph& g, const VertexSet& b) {
  return closure(g, b).is_full();
}

/// pt(G, B); std::nullopt means B is not a zero forcing set.
std::optional<std::size_t> propagation_time_of_set(const Graph& g, const VertexSet& b);

/// Chains traced from each initial vertex, in increasing order of their head.
/// Throws Error{IncompleteChronology} when the chronology does not finish.
ChainSet chain_set(const Chronology& c);

/// Vertices performing no force (including passively terminal ones).
VertexSet terminus(const Chronology& c);

} // namespace zf
