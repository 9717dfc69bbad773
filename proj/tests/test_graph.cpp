#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "vpotts/error.hpp"
#include "vpotts/graph.hpp"
#include "vpotts/random_graph.hpp"

using namespace vpotts;
using fixtures::k3;

TEST_CASE("graph construction validates ids and orders") {
  WeightedGraph g = fixtures::vertices({"a", "b"});
  CHECK_THROWS_AS(g.add_vertex("v1", WeightElement::formal("z")), InputError);
  g.add_edge("e1", "v1", "v2");
  CHECK_THROWS_AS(g.add_edge("e1", "v1", "v2"), InputError);
  CHECK_THROWS_AS(g.add_edge("e2", "v1", "v9"), InputError);
  CHECK_THROWS_AS(g.add_edge("e2", "v1", "v2", SymbolicGamma{}, g.edge(0).order), InputError);
  g.add_edge("e2", "v1", "v2");
  CHECK(g.edge(1).order > g.edge(0).order);
}

TEST_CASE("delete_edge") {
  SUBCASE("single edge leaves two isolated vertices") {
    const auto h = delete_edge(fixtures::single_edge(), "e1");
    CHECK(h.edge_count() == 0);
    CHECK(h.vertex(0).weight.key() == "a");
    CHECK(h.vertex(1).weight.key() == "b");
  }
  SUBCASE("K3 minus an edge is a path with the other data unchanged") {
    const WeightedGraph g = k3();
    const auto h = delete_edge(g, "e2");
    REQUIRE(h.edge_count() == 2);
    CHECK(h.find_edge("e1"));
    CHECK(h.find_edge("e3"));
    CHECK(h.edge(*h.find_edge("e3")).order == g.edge(2).order);
    CHECK(component_count(h) == 1);
  }
  SUBCASE("loop") {
    const auto h = delete_edge(fixtures::single_loop(), "e1");
    CHECK(h.edge_count() == 0);
    CHECK(h.vertex_count() == 1);
    CHECK(h.vertex(0).weight.key() == "a");
  }
  CHECK_THROWS_AS(delete_edge(k3(), "nope"), InputError);
}

TEST_CASE("contract_edge") {
  SUBCASE("single edge merges weights") {
    const auto h = contract_edge(fixtures::single_edge(), "e1");
    REQUIRE(h.vertex_count() == 1);
    CHECK(h.edge_count() == 0);
    CHECK(h.vertex(0).weight.key() == "a+b");
  }
  SUBCASE("parallel edge becomes a loop") {
    WeightedGraph g = fixtures::vertices({"a", "b"});
    g.add_edge("e1", "v1", "v2");
    g.add_edge("e2", "v1", "v2");
    const auto h = contract_edge(g, "e1");
    REQUIRE(h.edge_count() == 1);
    CHECK(h.edge(0).id == "e2");
    CHECK(h.edge(0).is_loop());
  }
  SUBCASE("K3 contracts to a digon") {
    const auto h = contract_edge(k3(), "e1");
    REQUIRE(h.vertex_count() == 2);
    REQUIRE(h.edge_count() == 2);
    for (const auto& e : h.edges()) CHECK_FALSE(e.is_loop());
    CHECK(h.edge(0).u != h.edge(0).v);
    CHECK(((h.edge(0).u == h.edge(1).u && h.edge(0).v == h.edge(1).v) ||
           (h.edge(0).u == h.edge(1).v && h.edge(0).v == h.edge(1).u)));
  }
  CHECK_THROWS_AS(contract_edge(fixtures::single_loop(), "e1"), ContractError);
  CHECK_THROWS_AS(contract_edge(k3(), "nope"), InputError);
}

TEST_CASE("subgraph_stats") {
  const WeightedGraph g = k3();
  auto stats = subgraph_stats(g, EdgeSubset{});
  CHECK(stats.components == 3);
  CHECK(stats.rank == 0);
  CHECK(stats.nullity == 0);
  stats = subgraph_stats(g, EdgeSubset::all(g));
  CHECK(stats.components == 1);
  CHECK(stats.rank == 2);
  CHECK(stats.nullity == 1);
  stats = subgraph_stats(g, EdgeSubset::from_ids(g, {"e1", "e2"}));
  CHECK(stats.components == 1);
  CHECK(stats.rank == 2);
  CHECK(stats.nullity == 0);
  CHECK_THROWS_AS(EdgeSubset::from_ids(g, {"e9"}), InputError);
}

TEST_CASE("components") {
  using Blocks = std::vector<std::vector<std::string>>;
  CHECK(components(fixtures::vertices({"a", "b"})) == Blocks{{"v1"}, {"v2"}});
  CHECK(components(k3()) == Blocks{{"v1", "v2", "v3"}});
  WeightedGraph g = k3();
  g.add_vertex("v4", WeightElement::formal("d"));
  CHECK(components(g) == Blocks{{"v1", "v2", "v3"}, {"v4"}});
}

TEST_CASE("subset capacity guard") {
  WeightedGraph g = fixtures::vertices({"a"});
  for (int i = 0; i < 65; ++i) g.add_edge("e" + std::to_string(i), "v1", "v1");
  CHECK_THROWS_AS(require_subset_capacity(g), CapacityError);
}

TEST_CASE("contraction and deletion invariants on random graphs") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const WeightedGraph g = random_graph(rng);
    for (const auto& e : g.edges()) {
      if (e.is_loop()) {
        CHECK_THROWS_AS(contract_edge(g, e.id), ContractError);
        continue;
      }
      const auto h = contract_edge(g, e.id);
      CHECK(h.vertex_count() == g.vertex_count() - 1);
      CHECK(h.edge_count() == g.edge_count() - 1);
      std::vector<std::size_t> all_g(g.vertex_count()), all_h(h.vertex_count());
      std::iota(all_g.begin(), all_g.end(), 0);
      std::iota(all_h.begin(), all_h.end(), 0);
      CHECK(weight_sum(h, all_h) == weight_sum(g, all_g));
      for (const auto& f : h.edges()) CHECK(f.order == g.edge(g.edge_position(f.id)).order);
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
        const auto& e = g.edge(i);
        const auto& f = g.edge(j);
        CHECK(oracle::canonical_form(delete_edge(delete_edge(g, e.id), f.id)) ==
              oracle::canonical_form(delete_edge(delete_edge(g, f.id), e.id)));
        const bool disjoint = !e.is_loop() && !f.is_loop() && e.u != f.u && e.u != f.v &&
                              e.v != f.u && e.v != f.v;
        if (disjoint)
          CHECK(oracle::canonical_form(contract_edge(contract_edge(g, e.id), f.id)) ==
                oracle::canonical_form(contract_edge(contract_edge(g, f.id), e.id)));
      }
  }
}

TEST_CASE("subgraph_stats agrees with a traversal oracle") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph g = random_graph(rng);
    const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const EdgeSubset a(mask);
      std::set<std::size_t> s;
      for (auto p : a.positions()) s.insert(p);
      std::size_t k = 0;
      oracle::components(g, s, &k);
      const auto stats = subgraph_stats(g, a);
      CHECK(stats.components == k);
      CHECK(stats.rank == g.vertex_count() - k);
      CHECK(stats.nullity == s.size() - stats.rank);
    }
  }
}
