#include "oracles.hpp"

#include "zf/constructions.hpp"
#include "zf/error.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace zf;

namespace {

oracle::Blue to_blue(const VertexSet& s) {
  oracle::Blue b(s.universe(), false);
  s.for_each([&](Vertex v) { b[v] = true; });
  return b;
}

VertexSet to_set(const oracle::Blue& b) {
  VertexSet s(b.size());
  for (Vertex v = 0; v < b.size(); ++v) {
    if (b[v]) s.insert(v);
  }
  return s;
}

template <class E>
void expect_throw(auto&& f, auto&& check) {
  bool thrown = false;
  try {
    f();
  } catch (const E& e) {
    thrown = true;
    check(e);
  }
  CHECK(thrown);
}

} // namespace

TEST_CASE("valid_forces") {
  const Graph p3 = path(3);
  CHECK(valid_forces(p3, VertexSet(3, {0})) == std::vector<Force>{{0, 1}});

  for (std::size_t m = 3; m <= 6; ++m) {
    for (std::size_t r = 1; r <= 3; ++r) {
      const Graph g = gear({m, r});
      CHECK(valid_forces(g, VertexSet(g.vertex_count(), {0, r + 1})).empty());
    }
  }

  const Graph h5 = helm({5, 1});
  VertexSet pendants(h5.vertex_count(), {6, 7, 8, 9, 10});
  const auto forces = valid_forces(h5, pendants);
  REQUIRE(forces.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(forces[i] == Force{6 + i, 1 + i});
}

TEST_CASE("propagate examples") {
  SUBCASE("path from an endpoint") {
    const Graph g = path(4);
    const Chronology c = propagate(g, VertexSet(4, {0}));
    CHECK(c.completion_time() == 3);
    CHECK(c.complete());
    CHECK(c.expansions.size() == 4);
  }
  SUBCASE("Gr(3,1) from v_1, v_6, v_5") {
    const Graph g = gear({3, 1});
    const Chronology c = propagate(g, VertexSet(7, {1, 6, 5}));
    CHECK(c.completion_time() == 2);
    CHECK(c.complete());
    REQUIRE(c.steps.size() == 2);
    CHECK(c.steps[0].size() == 3);
    CHECK(std::any_of(c.steps[0].begin(), c.steps[0].end(),
                      [](const Force& f) { return f.target == 0; }));
    CHECK(c.steps[1].size() == 1);
    CHECK(c.steps[1][0].target == 3);
  }
  SUBCASE("H_5 pendant construction") {
    const Graph g = helm({5, 1});
    const Chronology c = propagate(g, helm_efficient_set(5));
    CHECK(c.complete());
    CHECK(c.completion_time() == 4);
  }
  SUBCASE("stalls without error") {
    const Graph g = path(5);
    const Chronology c = propagate(g, VertexSet(5, {2}));
    CHECK_FALSE(c.complete());
    CHECK(c.completion_time() == 0);
  }
}

TEST_CASE("expansion invariants of propagate") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rg = oracle::random_graph(rng, 1, 12);
    const Graph g = from_edge_list(rg.n, rg.edges);
    const auto pick = oracle::random_subset(rng, rg.n, 0.4);
    const VertexSet b(rg.n, std::span<const Vertex>(pick));
    const Chronology c = propagate(g, b);
    REQUIRE(c.expansions.size() == c.steps.size() + 1);
    CHECK(c.expansions[0] == b);
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
      VertexSet next = c.expansions[k];
      std::vector<Vertex> targets;
      for (const Force& f : c.steps[k]) {
        CHECK(g.adjacent(f.source, f.target));
        CHECK(c.expansions[k].contains(f.source));
        // target is the source's only white neighbour before the step
        CHECK((g.neighbors(f.source) - c.expansions[k]) == VertexSet(rg.n, {f.target}));
        targets.push_back(f.target);
        next.insert(f.target);
      }
      std::sort(targets.begin(), targets.end());
      CHECK(std::adjacent_find(targets.begin(), targets.end()) == targets.end());
      CHECK(next == c.expansions[k + 1]);
    }
    CHECK(valid_forces(g, c.final_blue()).empty());
  }
}

TEST_CASE("run_relaxed") {
  SUBCASE("passive center script on Gr(m,r)") {
    for (std::size_t m = 3; m <= 6; ++m) {
      for (std::size_t r = 1; r <= 3; ++r) {
        const GearParams p{m, r};
        const Graph g = gear(p);
        const VertexSet b(g.vertex_count(), {0, m * (r + 1), 1});
        CHECK(gear_minimum_set(p) == b);
        const auto script = gear_passive_center_script(p);
        const Chronology c = run_relaxed(g, b, script);
        CHECK(c.complete());
        for (const auto& step : c.steps) {
          for (const Force& f : step) CHECK(f.source != 0);
        }
      }
    }
  }
  SUBCASE("empty script on a full set") {
    const Graph g = cycle(5);
    const Chronology c = run_relaxed(g, VertexSet::full(5), {});
    CHECK(c.complete());
    CHECK(c.completion_time() == 0);
  }
  SUBCASE("source with two white neighbours") {
    const Graph g = path(3);
    const std::vector<ForceStep> script{{{1, 2}}};
    expect_throw<InvalidForceAtStep>([&] { run_relaxed(g, VertexSet(3, {1}), script); },
                                     [](const InvalidForceAtStep& e) {
                                       CHECK(e.step() == 1);
                                       CHECK(e.source() == 1);
                                       CHECK(e.target() == 2);
                                       CHECK(e.code() == ErrorCode::InvalidForceAtStep);
                                     });
  }
  SUBCASE("rule violations carry the step") {
    const Graph g = path(4);
    const VertexSet b(4, {0});
    auto step_of = [&](std::vector<ForceStep> script) -> std::size_t {
      try {
        run_relaxed(g, b, script);
      } catch (const InvalidForceAtStep& e) {
        return e.step();
      }
      return 0;
    };
    CHECK(step_of({{{0, 1}}, {{2, 3}}}) == 2);  // source still white
    CHECK(step_of({{{0, 1}}, {{0, 1}}}) == 2);  // target already blue
    CHECK(step_of({{{0, 1}}, {{1, 3}}}) == 2);  // not adjacent
    CHECK(step_of({{{0, 9}}}) == 1);            // out of range
  }
  SUBCASE("duplicate target within a step") {
    const Graph g = path(3);
    const std::vector<ForceStep> script{{{0, 1}, {2, 1}}};
    expect_throw<Error>([&] { run_relaxed(g, VertexSet(3, {0, 2}), script); },
                        [](const Error& e) { CHECK(e.code() == ErrorCode::DuplicateTarget); });
  }
  SUBCASE("partial scripts may leave vertices white") {
    const Graph g = path(4);
    const std::vector<ForceStep> script{{{0, 1}}};
    const Chronology c = run_relaxed(g, VertexSet(4, {0}), script);
    CHECK_FALSE(c.complete());
    CHECK_THROWS_AS(chain_set(c), Error);
  }
}

TEST_CASE("closure examples") {
  const Graph h5 = helm({5, 1});
  CHECK(closure(h5, VertexSet::full(11)).is_full());

  for (std::size_t m = 3; m <= 6; ++m) {
    for (std::size_t r = 2; r <= 4; ++r) {
      // v_i, v_{i+1} both intermediate, strictly between spokes r+1 and 2(r+1).
      const Graph g = gear({m, r});
      const std::size_t lo = r + 1;
      const std::size_t hi = 2 * (r + 1);
      for (std::size_t i = lo + 1; i + 1 < hi; ++i) {
        const VertexSet c = closure(g, VertexSet(g.vertex_count(), {i, i + 1}));
        VertexSet expected(g.vertex_count());
        for (Vertex v = lo; v <= hi; ++v) expected.insert(v);
        CHECK(c == expected);
        CHECK_FALSE(c.contains(0));
      }
    }
  }

  // H_6: find a failing pendant triple with the oracle, then ask the engine.
  const Graph h6 = helm({6, 1});
  const auto a = oracle::matrix(h6);
  std::optional<std::vector<Vertex>> failing;
  for (Vertex x = 7; x <= 12 && !failing; ++x) {
    for (Vertex y = x + 1; y <= 12 && !failing; ++y) {
      for (Vertex z = y + 1; z <= 12 && !failing; ++z) {
        oracle::Blue b(13, false);
        b[x] = b[y] = b[z] = true;
        if (!oracle::all_blue(oracle::closure(a, b))) failing = std::vector<Vertex>{x, y, z};
      }
    }
  }
  REQUIRE(failing);
  const VertexSet c = closure(h6, VertexSet(13, std::span<const Vertex>(*failing)));
  CHECK_FALSE(c.is_full());
  CHECK(c == to_set(oracle::closure(a, to_blue(VertexSet(13, std::span<const Vertex>(*failing))))));
}

TEST_CASE("propagation_time_of_set examples") {
  for (std::size_t m = 3; m <= 6; ++m) {
    for (std::size_t s = 2; s <= 4; ++s) {
      const HelmParams p{m, s};
      const Graph g = helm(p);
      VertexSet b(g.vertex_count(), {0});
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j < s; ++j) b.insert(helm_pendant_index(p, i, j));
      }
      CHECK(b == generalized_helm_efficient_set(p));
      CHECK(propagation_time_of_set(g, b) == 2);
    }
  }
  CHECK_FALSE(propagation_time_of_set(path(5), VertexSet(5, {2})).has_value());
  CHECK(propagation_time_of_set(gear({4, 1}), VertexSet(9, {1, 8, 7})) == 2);
  CHECK(propagation_time_of_set(cycle(6), VertexSet::full(6)) == 0);
}

TEST_CASE("chain sets and terminus") {
  SUBCASE("Gr(3,1) passive center") {
    const GearParams p{3, 1};
    const Graph g = gear(p);
    const VertexSet b = gear_minimum_set(p);
    const Chronology c = run_relaxed(g, b, gear_passive_center_script(p));
    const ChainSet chains = chain_set(c);
    CHECK(chains.chains.size() == 3);
    CHECK(std::count(chains.chains.begin(), chains.chains.end(), std::vector<Vertex>{0}) == 1);
    const VertexSet t = terminus(c);
    CHECK(t.contains(0));
    CHECK(t.count() == b.count());
    CHECK(closure(g, t).is_full());
  }
  SUBCASE("H_6 minimum sets have two pendants per chain") {
    const Graph g = helm({6, 1});
    SearchOptions opts;
    opts.all_witnesses = true;
    opts.workers = 1;
    const auto report = zero_forcing_number(g, opts);
    REQUIRE(report.z == 3);
    REQUIRE_FALSE(report.zfs_witnesses.empty());
    for (const auto& w : report.zfs_witnesses) {
      const ChainSet chains = chain_set(propagate(g, VertexSet(13, std::span<const Vertex>(w))));
      for (const auto& chain : chains.chains) {
        CHECK(std::count_if(chain.begin(), chain.end(),
                            [&](Vertex v) { return g.role(v) == Role::Pendant; }) == 2);
      }
    }
  }
  SUBCASE("single vertex") {
    const Graph g = path(1);
    const Chronology c = propagate(g, VertexSet::full(1));
    const ChainSet chains = chain_set(c);
    REQUIRE(chains.chains.size() == 1);
    CHECK(chains.chains[0] == std::vector<Vertex>{0});
    CHECK(terminus(c) == VertexSet::full(1));
  }
}

TEST_CASE("engine agrees with the naive oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rg = oracle::random_graph(rng, 1, 12);
    const Graph g = from_edge_list(rg.n, rg.edges);
    const auto a = oracle::matrix(rg.n, rg.edges);
    const auto pick = oracle::random_subset(rng, rg.n, 0.35);
    const VertexSet b(rg.n, std::span<const Vertex>(pick));
    CHECK(closure(g, b) == to_set(oracle::closure(a, to_blue(b))));
    CHECK(propagation_time_of_set(g, b) == oracle::propagation_time(a, to_blue(b)));
  }
}

TEST_CASE("closure properties on random graphs") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 400; ++trial) {
    const auto rg = oracle::random_graph(rng, 1, 12);
    const Graph g = from_edge_list(rg.n, rg.edges);
    const auto pick = oracle::random_subset(rng, rg.n, 0.3);
    const VertexSet b(rg.n, std::span<const Vertex>(pick));
    VertexSet bigger = b;
    for (Vertex v : oracle::random_subset(rng, rg.n, 0.3)) bigger.insert(v);

    const VertexSet cb = closure(g, b);
    CHECK(b.is_subset_of(cb));
    CHECK(cb.is_subset_of(closure(g, bigger)));
    CHECK(closure(g, cb) == cb);

    const Chronology lo = propagate(g, b, TieBreak::LowestSource);
    const Chronology hi = propagate(g, b, TieBreak::HighestSource);
    CHECK(lo.expansions == hi.expansions);
    CHECK(lo.final_blue() == cb);

    if (!lo.complete()) continue;
    for (const Chronology* c : {&lo, &hi}) {
      const ChainSet chains = chain_set(*c);
      CHECK(chains.chains.size() == b.count());
      VertexSet covered(rg.n);
      for (const auto& chain : chains.chains) {
        CHECK(b.contains(chain.front()));
        for (Vertex v : chain) {
          CHECK_FALSE(covered.contains(v));
          covered.insert(v);
        }
        CHECK(is_induced_path(g, chain));
      }
      CHECK(covered.is_full());

      const VertexSet t = terminus(*c);
      CHECK(t.count() == b.count());
      const auto pt_t = propagation_time_of_set(g, t);
      REQUIRE(pt_t.has_value());
      CHECK(*pt_t <= c->completion_time());
    }
  }
}
