#include "oracles.hpp"

#include "zf/error.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/search.hpp"
#include "zf/symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace zf;

namespace {

SearchOptions single_worker() {
  SearchOptions o;
  o.workers = 1;
  return o;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no zf::Error thrown");
  return ErrorCode::ParseError;
}

Graph k4() { return from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

} // namespace

TEST_CASE("zero forcing number examples") {
  CHECK(zero_forcing_number(gear({4, 1})).z == 3);
  CHECK(zero_forcing_number(helm({6, 1})).z == 3);
  CHECK(zero_forcing_number(helm({3, 2})).z == 4);
  CHECK(zero_forcing_number(helm({3, 1})).z == 3);
  CHECK(zero_forcing_number(path(9)).z == 1);
  CHECK(zero_forcing_number(cycle(7)).z == 2);
  CHECK(zero_forcing_number(k4()).z == 3);
}

TEST_CASE("propagation time examples") {
  CHECK(propagation_time(helm({8, 1})).pt == 6);
  CHECK(propagation_time(helm({5, 1})).pt == 4);
  CHECK(propagation_time(gear({5, 2})).pt == 6);
  // Only an endpoint forces P_n on its own.
  CHECK(propagation_time(path(6)).pt == 5);
}

TEST_CASE("report soundness") {
  for (const Graph& g : {gear({4, 2}), helm({6, 1}), helm({3, 3}), wheel(6)}) {
    SearchOptions opts;
    opts.all_witnesses = true;
    opts.prove_minimality = true;
    const SearchReport r = propagation_time(g, opts);
    REQUIRE(r.pt);
    CHECK_FALSE(r.pt_is_upper_bound);
    CHECK(r.witness_pt.size() == r.zfs_witnesses.size());
    for (std::size_t i = 0; i < r.zfs_witnesses.size(); ++i) {
      const VertexSet b(g.vertex_count(), std::span<const Vertex>(r.zfs_witnesses[i]));
      CHECK(b.count() == r.z);
      CHECK(closure(g, b).is_full());
      CHECK(propagate(g, b).completion_time() == r.witness_pt[i]);
      CHECK(r.witness_pt[i] >= *r.pt);
    }
    for (const auto& w : r.pt_witnesses) {
      CHECK(propagation_time_of_set(g, VertexSet(g.vertex_count(), std::span<const Vertex>(w))) ==
            r.pt);
    }
    CHECK(std::is_sorted(r.zfs_witnesses.begin(), r.zfs_witnesses.end()));
    REQUIRE(r.minimality);
    CHECK(r.minimality->cardinality == r.z - 1);
    CHECK(r.minimality->all_failed);
  }
}

TEST_CASE("minimality sweep counts every smaller set") {
  SearchOptions opts;
  opts.prove_minimality = true;
  const SearchReport r = zero_forcing_number(gear({4, 1}), opts);
  REQUIRE(r.minimality);
  CHECK(r.minimality->cardinality == 2);
  CHECK(r.minimality->sets_examined == 36);  // C(9, 2)
  CHECK(r.minimality->all_failed);
}

TEST_CASE("search agrees with the subset oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rg = oracle::random_graph(rng, 1, 10);
    const Graph g = from_edge_list(rg.n, rg.edges);
    const auto expected = oracle::zero_forcing(oracle::matrix(rg.n, rg.edges));
    const SearchReport r = propagation_time(g, single_worker());
    CHECK(r.z == expected.z);
    CHECK(r.pt == expected.pt);
  }
}

TEST_CASE("pruning, workers and symmetry do not change answers") {
  std::vector<Graph> graphs{gear({4, 2}), gear({5, 1}), helm({7, 1}), helm({4, 2}), cycle(8),
                            wheel(7), path(6)};
  for (const Graph& g : graphs) {
    SearchOptions base;
    base.all_witnesses = true;
    base.workers = 1;
    const SearchReport ref = propagation_time(g, base);

    SearchOptions no_prune = base;
    no_prune.pruning = false;
    const SearchReport a = propagation_time(g, no_prune);
    CHECK(a.z == ref.z);
    CHECK(a.pt == ref.pt);
    CHECK(a.zfs_witnesses == ref.zfs_witnesses);

    SearchOptions many = base;
    many.workers = 4;
    const SearchReport b = propagation_time(g, many);
    CHECK(b.zfs_witnesses == ref.zfs_witnesses);
    CHECK(b.pt_witnesses == ref.pt_witnesses);

    SearchOptions sym = base;
    sym.symmetry = Symmetry::CrossCheck;
    const SearchReport c = propagation_time(g, sym);
    CHECK(c.z == ref.z);
    CHECK(c.pt == ref.pt);
    CHECK(c.symmetry_group_order == dihedral_automorphisms(g).size());
  }
}

TEST_CASE("first-witness pt is labelled an upper bound") {
  SearchOptions opts;
  opts.pt_first_witness = true;
  const SearchReport r = propagation_time(helm({8, 1}), opts);
  REQUIRE(r.pt);
  CHECK(r.pt_is_upper_bound);
  CHECK(*r.pt >= 6);
}

TEST_CASE("search limits") {
  SearchOptions tight;
  tight.max_sets = 10;
  CHECK(code_of([&] { zero_forcing_number(helm({8, 1}), tight); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([] { zero_forcing_number(path(65)); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { zero_forcing_number(from_edge_list(0, {})); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("lower bound") {
  CHECK(search_lower_bound(gear({5, 2})) == 2);
  CHECK(search_lower_bound(helm({7, 1})) == 4);
  CHECK(search_lower_bound(k4()) == 3);
  CHECK(search_lower_bound(from_edge_list(3, {})) == 1);
}

TEST_CASE("path cover examples") {
  CHECK(path_cover_number(path(7)) == 1);
  CHECK(path_cover_number(helm({6, 1})) == 3);
  CHECK(path_cover_number(helm({5, 1})) == 3);
  CHECK(path_cover_number(cycle(5)) == 2);
  CHECK(path_cover_number(k4()) == 2);
  CHECK(path_cover_number(from_edge_list(4, {})) == 4);

  const Graph h6 = helm({6, 1});
  const auto cover = minimum_path_cover(h6);
  CHECK(cover.size() == 3);
  VertexSet seen(h6.vertex_count());
  for (const auto& part : cover) {
    CHECK(is_induced_path(h6, part));
    for (Vertex v : part) {
      CHECK_FALSE(seen.contains(v));
      seen.insert(v);
    }
  }
  CHECK(seen.is_full());

  CHECK(code_of([] { path_cover_number(path(15)); }) == ErrorCode::TooLarge);
  CHECK(path_cover_number(path(15), 20) == 1);
  CHECK(code_of([] { path_cover_number(path(25), 30); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { path_cover_number(from_edge_list(0, {})); }) == ErrorCode::EmptyGraph);
}

TEST_CASE("path cover agrees with the partition oracle") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rg = oracle::random_graph(rng, 1, 9);
    const Graph g = from_edge_list(rg.n, rg.edges);
    CHECK(path_cover_number(g) == oracle::path_cover(oracle::matrix(rg.n, rg.edges)));
  }
}

TEST_CASE("bound chain") {
  const auto h5 = verify_bound_chain(helm({5, 1}));
  CHECK(h5.min_degree == 1);
  CHECK(h5.path_cover == 3);
  CHECK(h5.z == 3);
  CHECK(h5.holds);

  const auto g31 = verify_bound_chain(gear({3, 1}));
  CHECK(g31.min_degree == 2);
  CHECK(g31.z == 3);
  CHECK(g31.holds);
  CHECK(g31.chain_set_is_path_cover);

  const auto complete = verify_bound_chain(k4());
  CHECK(complete.path_cover == 2);
  CHECK(complete.z == 3);
  CHECK(complete.holds);
}
