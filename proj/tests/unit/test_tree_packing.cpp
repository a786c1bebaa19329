#include <doctest.h>

#include <set>

#include "kcut/baseline.hpp"
#include "kcut/generators.hpp"
#include "kcut/tree_packing.hpp"
#include "support/graphs.hpp"

using namespace kcut;
using namespace kcut::fixtures;

TEST_CASE("packing a tree returns the tree") {
  MultiGraph t = random_connected_multigraph(9, 8, 2, 3);
  TreeFamily f = pack_trees(t, 5);
  REQUIRE(f.trees.size() == 1);
  CHECK(is_spanning_tree(f.trees[0], 9));
}

TEST_CASE("packing C4 balances loads") {
  TreeFamily f = pack_trees(cycle(4), 2);
  REQUIRE(f.trees.size() == 2);
  std::set<std::pair<Vertex, Vertex>> a(f.trees[0].begin(), f.trees[0].end());
  std::set<std::pair<Vertex, Vertex>> b(f.trees[1].begin(), f.trees[1].end());
  std::set<std::pair<Vertex, Vertex>> both;
  for (auto e : a)
    if (b.count(e)) both.insert(e);
  // Two spanning paths of C4 share exactly two edges; every edge is used.
  CHECK(both.size() == 2);
  for (const auto& [edge, load] : f.loads) CHECK(load >= 1);
}

TEST_CASE("default tree count") {
  CHECK(default_tree_count(1, 0) == 1);
  CHECK(default_tree_count(2, 10) == 20);
  CHECK(default_tree_count(5, 1000) == 200);
}

TEST_CASE("spanning tree enumeration") {
  CHECK(enumerate_spanning_trees(clique(4), 100).size() == 16);
  CHECK(enumerate_spanning_trees(clique(5), 1000).size() == 125);
  CHECK(enumerate_spanning_trees(cycle(6), 100).size() == 6);
  CHECK(enumerate_spanning_trees(clique(5), 10).size() == 10);
  auto trees = enumerate_spanning_trees(petersen(), 50);
  CHECK(std::is_sorted(trees.begin(), trees.end()));
  for (const auto& t : trees) CHECK(is_spanning_tree(t, 10));
}

TEST_CASE("tree family puts packed trees first") {
  MultiGraph g = random_connected_multigraph(6, 10, 8, 2);
  TreeFamilyOptions options;
  options.packing_count = 3;
  auto packed = pack_trees(g, 3).trees;
  options.exhaustive = true;
  auto family = build_tree_family(g, 2, options);
  REQUIRE(family.size() >= packed.size());
  CHECK(std::equal(packed.begin(), packed.end(), family.begin()));
  std::set<SpanningTree> distinct(family.begin(), family.end());
  CHECK(distinct.size() == family.size());
}

TEST_CASE("crossings") {
  SpanningTree p{{0, 1}, {1, 2}, {2, 3}};
  CHECK(crossings(p, Partition::single({0, 1, 2, 3})) == 0);
  CHECK(crossings(p, parts({{0, 1}, {2, 3}})) == 1);
  SpanningTree star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  CHECK(crossings(star, parts({{0, 3, 4}, {1}, {2}})) == 2);
}

TEST_CASE("some packed tree crosses an optimal cut at most 2k-2 times") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    MultiGraph g = random_connected_multigraph(8, 16, seed, 3);
    for (int k = 2; k <= 3; ++k) {
      Partition opt = oracle_exact_kcut(g, k).partition;
      TreeFamilyOptions options;
      auto family = build_tree_family(g, k, options);
      std::int64_t best = 1 << 30;
      for (const auto& t : family) best = std::min(best, crossings(t, opt));
      CHECK(best <= 2 * k - 2);
    }
  }
}
