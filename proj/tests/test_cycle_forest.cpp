#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wseuler/cycle_forest.hpp"

using namespace wseuler;

namespace {

std::set<UndirectedEdge> cycle_edges(const CycleRecord& c) {
  std::set<UndirectedEdge> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto e = c.out_edge(i);
    out.insert(UndirectedEdge{e.tail, e.head}.canonical());
  }
  return out;
}

// Every simple cycle of a small graph as an edge set, by trying all edge
// subsets and keeping the connected 2-regular ones.
std::vector<std::set<UndirectedEdge>> all_cycles_brute_force(std::uint32_t n, const std::vector<UndirectedEdge>& edges) {
  std::vector<std::set<UndirectedEdge>> out;
  const auto m = edges.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(n + 1, 0);
    std::vector<NodeId> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    std::set<UndirectedEdge> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (1u << i))) continue;
      ++deg[edges[i].u];
      ++deg[edges[i].v];
      parent[find(edges[i].u)] = find(edges[i].v);
      chosen.insert(edges[i].canonical());
    }
    bool ok = true;
    NodeId root = 0;
    for (NodeId v = 1; v <= n && ok; ++v) {
      if (deg[v] == 0) continue;
      if (deg[v] != 2) ok = false;
      if (root == 0) root = find(v);
      else if (find(v) != root) ok = false;
    }
    if (ok) out.push_back(chosen);
  }
  return out;
}

bool is_forest(std::uint32_t n, const std::vector<UndirectedEdge>& edges) {
  std::vector<NodeId> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    const auto a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

TEST_CASE("a path does not close a cycle") {
  CycleForest f(3);
  CHECK_FALSE(f.insert({1, 2}).has_value());
  CHECK_FALSE(f.insert({2, 3}).has_value());
  CHECK(f.live_edge_count() == 2);
  CHECK(f.remaining_edges() == testing::edges_of({{1, 2}, {2, 3}}));
}

TEST_CASE("the triangle closes and empties the forest") {
  CycleForest f(3);
  f.insert({1, 2});
  f.insert({2, 3});
  const auto c = f.insert({3, 1});
  REQUIRE(c.has_value());
  // Starts at the inserted edge's second endpoint and closes with the inserted edge.
  CHECK(c->nodes == std::vector<NodeId>{1, 2, 3});
  CHECK(f.live_edge_count() == 0);
  CHECK(f.peak_edge_count() == 3);
  CHECK(f.remaining_edges().empty());
}

TEST_CASE("a cycle hanging off a path is extracted alone") {
  const auto edges = testing::edges_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  const auto oracle = all_cycles_brute_force(5, edges);
  REQUIRE(oracle.size() == 1);

  CycleForest f(5);
  std::optional<CycleRecord> found;
  for (const auto& e : edges) {
    auto c = f.insert(e);
    if (c) {
      REQUIRE_FALSE(found.has_value());
      found = c;
    }
  }
  REQUIRE(found.has_value());
  CHECK(found->nodes == std::vector<NodeId>{3, 4, 5});
  CHECK(cycle_edges(*found) == oracle.front());
  CHECK(f.remaining_edges() == testing::edges_of({{1, 2}, {2, 3}}));
}

TEST_CASE("inserting a buffered edge again is a usage error") {
  CycleForest f(4);
  f.insert({1, 2});
  CHECK_THROWS_AS(f.insert({2, 1}), std::logic_error);
  CHECK_THROWS_AS(f.insert({3, 3}), std::logic_error);
  CHECK_THROWS_AS(f.insert({1, 5}), std::logic_error);
}

TEST_CASE("linking reroots a tree so later paths are found") {
  // Build two paths, join them in the middle, then close across.
  CycleForest f(6);
  f.insert({1, 2});
  f.insert({2, 3});
  f.insert({4, 5});
  f.insert({5, 6});
  CHECK_FALSE(f.insert({3, 4}).has_value());
  const auto c = f.insert({6, 1});
  REQUIRE(c.has_value());
  CHECK(c->nodes == std::vector<NodeId>{1, 2, 3, 4, 5, 6});
  CHECK(f.live_edge_count() == 0);
}

TEST_CASE("property: forest invariants over random edge streams") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(uniform_below(rng, 14));
    std::vector<UndirectedEdge> all;
    for (NodeId a = 1; a <= n; ++a)
      for (NodeId b = a + 1; b <= n; ++b) all.push_back({a, b});
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[uniform_below(rng, i)]);
    all.resize(uniform_below(rng, all.size() + 1));
    for (auto& e : all) {
      if (uniform_below(rng, 2)) std::swap(e.u, e.v);
    }

    CycleForest f(n);
    std::multiset<UndirectedEdge> accounted;
    for (const auto& e : all) {
      const auto c = f.insert(e);
      CHECK(f.live_edge_count() <= n);
      if (c) {
        CHECK(c->size() >= 3);
        CHECK(std::set<NodeId>(c->nodes.begin(), c->nodes.end()).size() == c->size());
        CHECK(c->nodes.front() == e.v);
        CHECK(c->nodes.back() == e.u);
        for (const auto& ce : cycle_edges(*c)) accounted.insert(ce);
      }
      const auto rest = f.remaining_edges();
      CHECK(rest.size() == f.live_edge_count());
      CHECK(is_forest(n, rest));
    }
    for (const auto& e : f.remaining_edges()) accounted.insert(e);
    std::multiset<UndirectedEdge> inserted;
    for (const auto& e : all) inserted.insert(e.canonical());
    CHECK(accounted == inserted);
    CHECK(f.peak_edge_count() <= n);
  }
}
