#include "zf/forcing.hpp"

#include "zf/error.hpp"

#include <algorithm>
#include <string>

namespace zf {

namespace {

void check_initial(const Graph& g, const VertexSet& initial) {
  if (initial.universe() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidVertex,
                "initial set universe " + std::to_string(initial.universe()) +
                    " does not match graph on " + std::to_string(g.vertex_count()) +
                    " vertices");
  }
}

void require_complete(const Chronology& c) {
  if (c.expansions.empty() || !c.complete()) {
    throw Error(ErrorCode::IncompleteChronology,
                "chronology does not turn every vertex blue");
  }
}

// The single white neighbor of u, if there is exactly one.
std::optional<Vertex> sole_white_neighbor(const Graph& g, Vertex u, const VertexSet& blue) {
  std::optional<Vertex> found;
  bool several = false;
  g.neighbors(u).for_each([&](Vertex w) {
    if (blue.contains(w)) return;
    if (found) several = true;
    found = w;
  });
  if (several) return std::nullopt;
  return found;
}

} // namespace

std::vector<Force> valid_forces(const Graph& g, const VertexSet& blue) {
  check_initial(g, blue);
  std::vector<Force> out;
  blue.for_each([&](Vertex u) {
    if (auto w = sole_white_neighbor(g, u, blue)) out.push_back({u, *w});
  });
  return out;
}

Chronology propagate(const Graph& g, const VertexSet& initial, TieBreak tie_break) {
  check_initial(g, initial);
  Chronology c{initial, {}, {initial}};
  const std::size_t n = g.vertex_count();
  while (true) {
    const VertexSet& blue = c.expansions.back();
    // credited[v] holds the chosen source for white v, or n when unforced.
    std::vector<Vertex> credited(n, n);
    for (const Force& f : valid_forces(g, blue)) {
      Vertex& slot = credited[f.target];
      if (slot == n || (tie_break == TieBreak::HighestSource && f.source > slot)) {
        slot = f.source;
      }
    }
    ForceStep step;
    VertexSet next = blue;
    for (Vertex v = 0; v < n; ++v) {
      if (credited[v] != n) {
        step.push_back({credited[v], v});
        next.insert(v);
      }
    }
    if (step.empty()) break;
    std::sort(step.begin(), step.end());
    c.steps.push_back(std::move(step));
    c.expansions.push_back(std::move(next));
  }
  return c;
}

Chronology run_relaxed(const Graph& g, const VertexSet& initial,
                       std::span<const ForceStep> script) {
  check_initial(g, initial);
  const std::size_t n = g.vertex_count();
  Chronology c{initial, {}, {initial}};
  for (std::size_t k = 1; k <= script.size(); ++k) {
    const VertexSet& blue = c.expansions.back();
    VertexSet next = blue;
    VertexSet targets(n);
    for (const Force& f : script[k - 1]) {
      if (f.source >= n || f.target >= n) {
        throw InvalidForceAtStep(k, f.source, f.target, "vertex out of range");
      }
      if (targets.contains(f.target)) {
        throw Error(ErrorCode::DuplicateTarget,
                    "vertex " + std::to_string(f.target) + " forced twice at step " +
                        std::to_string(k));
      }
      if (!blue.contains(f.source)) {
        throw InvalidForceAtStep(k, f.source, f.target, "source is white");
      }
      if (blue.contains(f.target)) {
        throw InvalidForceAtStep(k, f.source, f.target, "target is already blue");
      }
      if (!g.adjacent(f.source, f.target)) {
        throw InvalidForceAtStep(k, f.source, f.target, "not adjacent");
      }
      if (sole_white_neighbor(g, f.source, blue) != f.target) {
        throw InvalidForceAtStep(k, f.source, f.target,
                                 "source has more than one white neighbor");
      }
      targets.insert(f.target);
      next.insert(f.target);
    }
    c.steps.push_back(script[k - 1]);
    c.expansions.push_back(std::move(next));
  }
  return c;
}

VertexSet closure(const Graph& g, const VertexSet& initial) {
  return propagate(g, initial).final_blue();
}

std::optional<std::size_t> propagation_time_of_set(const Graph& g, const VertexSet& b) {
  Chronology c = propagate(g, b);
  if (!c.complete()) return std::nullopt;
  return c.completion_time();
}

ChainSet chain_set(const Chronology& c) {
  require_complete(c);
  const std::size_t n = c.initial.universe();
  std::vector<Vertex> successor(n, n);
  for (const auto& step : c.steps) {
    for (const Force& f : step) successor[f.source] = f.target;
  }
  ChainSet out;
  c.initial.for_each([&](Vertex head) {
    std::vector<Vertex> chain{head};
    for (Vertex v = successor[head]; v != n; v = successor[v]) chain.push_back(v);
    out.chains.push_back(std::move(chain));
  });
  return out;
}

VertexSet terminus(const Chronology& c) {
  require_complete(c);
  VertexSet term = VertexSet::full(c.initial.universe());
  for (const auto& step : c.steps) {
    for (const Force& f : step) term.erase(f.source);
  }
  return term;
}

} // namespace zf
