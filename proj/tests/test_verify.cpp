#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wseuler/verify.hpp"

using namespace wseuler;
using wseuler::testing::edges_of;

namespace {

const auto kTriangle = edges_of({{1, 2}, {2, 3}, {3, 1}});
const auto kBowtie = edges_of({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}});

}  // namespace

TEST_CASE("verify_tour accepts the triangle") {
  const std::vector<SuccessorTriple> t{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  const auto v = verify_tour(t, 3, kTriangle);
  CHECK(v.ok);
  CHECK_FALSE(v.failure.has_value());
}

TEST_CASE("verify_tour rejects a successor that runs against the tour") {
  // (2,3) -> (3,2): head matches but the tour traverses {2,3} as (2,3).
  const std::vector<SuccessorTriple> t{{1, 2, 3}, {2, 3, 2}, {3, 1, 2}};
  const auto v = verify_tour(t, 3, kTriangle);
  REQUIRE_FALSE(v.ok);
  CHECK(*v.failure == Failure::not_bijective);
  CHECK(v.witness == std::vector<DirectedEdge>{{2, 3}, {3, 2}});
}

TEST_CASE("verify_tour failure kinds") {
  SUBCASE("missing edge") {
    const std::vector<SuccessorTriple> t{{1, 2, 3}, {2, 3, 1}};
    CHECK(*verify_tour(t, 3, kTriangle).failure == Failure::missing_edge);
  }
  SUBCASE("duplicate edge in the other orientation") {
    const std::vector<SuccessorTriple> t{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {2, 1, 3}};
    CHECK(*verify_tour(t, 3, kTriangle).failure == Failure::duplicate_edge);
  }
  SUBCASE("edge outside the graph") {
    const std::vector<SuccessorTriple> t{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 4, 1}};
    CHECK(*verify_tour(t, 4, kTriangle).failure == Failure::foreign_edge);
  }
  SUBCASE("successor is not an edge at all") {
    const std::vector<SuccessorTriple> t{{1, 2, 3}, {2, 3, 3}, {3, 1, 2}};
    CHECK(*verify_tour(t, 3, kTriangle).failure == Failure::bad_successor_head);
  }
  SUBCASE("two edges share a successor") {
    const std::vector<SuccessorTriple> t{{3, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 3}, {5, 3, 4}};
    const auto v = verify_tour(t, 5, kBowtie);
    CHECK(*v.failure == Failure::not_bijective);
  }
  SUBCASE("two separate orbits over the bowtie") {
    const std::vector<SuccessorTriple> t{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {3, 4, 5}, {4, 5, 3}, {5, 3, 4}};
    const auto v = verify_tour(t, 5, kBowtie);
    REQUIRE_FALSE(v.ok);
    CHECK(*v.failure == Failure::multiple_classes);
  }
  SUBCASE("empty graph, empty tour") { CHECK(verify_tour({}, 4, {}).ok); }
}

TEST_CASE("fuzz: any single corrupted triple is caught") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::uint32_t n = 6 + static_cast<std::uint32_t>(seed % 20);
    const auto g = generate({n, 2ull * n, seed, Fault::none, Order::shuffled});
    const auto r = testing::run_graph(n, g.edges, Mode::optimized);
    REQUIRE(verify_tour(r.triples, n, g.edges).ok);
    for (int k = 0; k < 20; ++k) {
      auto bad = r.triples;
      const auto i = uniform_below(rng, bad.size());
      switch (uniform_below(rng, 5)) {
        case 0: bad[i].s = static_cast<NodeId>(1 + uniform_below(rng, n)); break;
        case 1: bad[i].v1 = static_cast<NodeId>(1 + uniform_below(rng, n)); break;
        case 2: std::swap(bad[i].v1, bad[i].v2); break;
        case 3: bad.erase(bad.begin() + static_cast<std::ptrdiff_t>(i)); break;
        default: bad.push_back(bad[i]); break;
      }
      if (bad == r.triples) continue;
      CHECK_FALSE(verify_tour(bad, n, g.edges).ok);
      ++checked;
    }
  }
  CHECK(checked > 700);
}

TEST_CASE("orbit_partition of two cycle rotations gives one block per cycle") {
  const std::vector<CycleRecord> cycles{{{1, 2, 3}}, {{3, 4, 5}}};
  const auto p = orbit_partition(cycle_successor_function(cycles));
  REQUIRE(p.blocks.size() == 2);
  CHECK(p.blocks[0] == std::vector<DirectedEdge>{{1, 2}, {2, 3}, {3, 1}});
  CHECK(p.blocks[1] == std::vector<DirectedEdge>{{3, 4}, {4, 5}, {5, 3}});
  CHECK(p.block_of({5, 3}) == 1);
}

TEST_CASE("orbit_partition of a single 3-cycle") {
  const std::vector<CycleRecord> cycles{{{1, 2, 3}}};
  const auto p = orbit_partition(cycle_successor_function(cycles));
  REQUIRE(p.blocks.size() == 1);
  CHECK(p.blocks[0].size() == 3);
}

TEST_CASE("orbit_partition rejects a non-bijective function") {
  const auto f = SuccessorFunction::from_pairs({{{1, 2}, {2, 3}}, {{2, 3}, {3, 1}}, {{3, 1}, {1, 2}}, {{4, 2}, {2, 3}}});
  CHECK_FALSE(f.is_bijective());
  CHECK_THROWS_AS(orbit_partition(f), NotBijectiveError);
}

TEST_CASE("from_pairs enforces the successor head condition") {
  CHECK_THROWS_AS(SuccessorFunction::from_pairs({{{1, 2}, {3, 1}}, {{3, 1}, {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(SuccessorFunction::from_pairs({{{1, 2}, {2, 3}}}), std::invalid_argument);
}

TEST_CASE("swapping at a shared node merges two tours") {
  const std::vector<CycleRecord> cycles{{{1, 2, 3}}, {{3, 4, 5}}};
  const auto f = cycle_successor_function(cycles);
  const std::vector<SuccessorFunction::Pair> pairs{{{2, 3}, {5, 3}}};
  const auto merged = swap_successors(f, pairs);
  const auto p = orbit_partition(merged);
  REQUIRE(p.blocks.size() == 1);
  CHECK(p.blocks[0].size() == 6);
  CHECK(merged({2, 3}) == DirectedEdge{3, 4});
  CHECK(merged({5, 3}) == DirectedEdge{3, 1});
}

TEST_CASE("an empty swap list leaves the function unchanged") {
  const std::vector<CycleRecord> cycles{{{1, 2, 3}}, {{3, 4, 5}}};
  const auto f = cycle_successor_function(cycles);
  CHECK(swap_successors(f, {}) == f);
}

TEST_CASE("three successive swaps at one node reproduce the chained alignment") {
  std::vector<CycleRecord> cycles;
  for (NodeId i = 1; i <= 4; ++i) cycles.push_back({{1, 2 * i, 2 * i + 1}});
  auto f = cycle_successor_function(cycles);
  for (NodeId u : {5u, 7u, 9u}) {
    const std::vector<SuccessorFunction::Pair> pairs{{{3, 1}, {u, 1}}};
    f = swap_successors(f, pairs);
  }
  CHECK(f({3, 1}) == DirectedEdge{1, 8});
  CHECK(f({5, 1}) == DirectedEdge{1, 2});
  CHECK(f({7, 1}) == DirectedEdge{1, 4});
  CHECK(f({9, 1}) == DirectedEdge{1, 6});
  CHECK(orbit_partition(f).blocks.size() == 1);
}

TEST_CASE("swap preconditions") {
  // Two triangles sharing both node 1 and node 2 via a 4-cycle.
  const std::vector<CycleRecord> cycles{{{1, 2, 3}}, {{1, 4, 2, 5}}};
  const auto f = cycle_successor_function(cycles);
  SUBCASE("two partners in one orbit") {
    const std::vector<SuccessorFunction::Pair> pairs{{{3, 1}, {5, 1}}, {{1, 2}, {4, 2}}};
    CHECK_THROWS_AS(swap_successors(f, pairs), SwapPreconditionError);
  }
  SUBCASE("partner in the merging orbit") {
    const std::vector<SuccessorFunction::Pair> pairs{{{3, 1}, {3, 1}}};
    CHECK_THROWS_AS(swap_successors(f, pairs), SwapPreconditionError);
  }
  SUBCASE("pair without a common head") {
    const std::vector<SuccessorFunction::Pair> pairs{{{3, 1}, {4, 2}}};
    CHECK_THROWS_AS(swap_successors(f, pairs), SwapPreconditionError);
  }
  SUBCASE("a single valid pair") {
    const std::vector<SuccessorFunction::Pair> pairs{{{1, 2}, {4, 2}}};
    CHECK(orbit_partition(swap_successors(f, pairs)).blocks.size() == 1);
  }
}

TEST_CASE("hierholzer oracle") {
  const auto tri = hierholzer_oracle(3, kTriangle);
  REQUIRE(tri.has_value());
  CHECK(tri->size() == 4);
  CHECK(tri->front() == tri->back());
  CHECK_FALSE(hierholzer_oracle(3, edges_of({{1, 2}, {2, 3}})).has_value());
  CHECK_FALSE(hierholzer_oracle(6, edges_of({{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}})).has_value());
  const auto empty = hierholzer_oracle(4, {});
  REQUIRE(empty.has_value());
  CHECK(empty->empty());

  const auto bow = hierholzer_oracle(5, kBowtie);
  REQUIRE(bow.has_value());
  // Consecutive nodes walk distinct graph edges.
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i + 1 < bow->size(); ++i) CHECK(seen.insert(pair_key((*bow)[i], (*bow)[i + 1])).second);
  CHECK(seen.size() == 6);
}
