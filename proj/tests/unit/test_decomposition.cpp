#include <doctest.h>

#include <algorithm>

#include "kcut/decomposition.hpp"
#include "kcut/error.hpp"
#include "kcut/flow.hpp"
#include "kcut/generators.hpp"
#include "kcut/rng.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace kcut;
using namespace kcut::fixtures;

namespace {

oracle::BagTree as_bag_tree(const TreeDecomposition& td) {
  oracle::BagTree t;
  t.bags = td.bags();
  for (std::size_t i = 0; i < td.size(); ++i) t.parent.push_back(td.parent(static_cast<NodeId>(i)));
  return t;
}

bool inside_some(const Bag& b, const std::vector<Bag>& bags) {
  return std::any_of(bags.begin(), bags.end(), [&](const Bag& c) { return std::includes(c.begin(), c.end(), b.begin(), b.end()); });
}

Bag range(Vertex from, Vertex to) {
  Bag b;
  for (Vertex v = from; v < to; ++v) b.push_back(v);
  return b;
}

}  // namespace

TEST_CASE("tree decomposition accessors") {
  // 0-1-2-3 path as a chain of edge bags rooted at {0,1}.
  TreeDecomposition td({{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}, 0);
  CHECK(td.adhesion(0).empty());
  CHECK(td.adhesion(1) == Bag{1});
  CHECK(td.gamma(1) == Bag{1, 2, 3});
  CHECK(td.alpha(1) == Bag{2, 3});
  CHECK(td.preorder().front() == 0);
  CHECK(td.dump() == "0 -1 0 1\n1 0 1 2\n2 1 2 3\n");
  TreeDecomposition re = td.rerooted(2);
  CHECK(re.root() == 2);
  CHECK(re.parent(0) == 1);
  CHECK_FALSE(check_tree_decomposition(path(4), td));
  CHECK(check_tree_decomposition(cycle(4), td));
  CHECK_THROWS(TreeDecomposition({{0}, {1}}, {}, 0));
}

TEST_CASE("potential examples") {
  const std::int64_t s = 2;
  CHECK(potential(TreeDecomposition({range(0, 5), range(4, 9)}, {{0, 1}}, 0), s) == 0);
  CHECK(potential(TreeDecomposition::single_bag(2 * s + 3), s) == 2);
  CHECK(potential(TreeDecomposition({range(0, 2 * s + 2), range(2 * s + 1, 4 * s + 6)}, {{0, 1}}, 0), s) == 5);
}

TEST_CASE("breakability witness") {
  CHECK_FALSE(find_breakability_witness(path(3), range(0, 3), 1));
  auto cut = find_breakability_witness(path(8), range(0, 8), 1);
  REQUIRE(cut);
  CHECK(cut->order == 1);
  auto count = [](const std::vector<Vertex>& side, const Bag& q) {
    return std::count_if(side.begin(), side.end(), [&](Vertex v) { return std::binary_search(q.begin(), q.end(), v); });
  };
  CHECK(count(cut->a, range(0, 8)) >= 2);
  CHECK(count(cut->b, range(0, 8)) >= 2);
  const Vertex big = 2 * 32 + 2;
  CHECK_FALSE(find_breakability_witness(clique(big), range(0, big), 1));
}

TEST_CASE("witnesses are genuine") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    Vertex n = static_cast<Vertex>(rng.between(4, 10));
    std::int64_t s = rng.between(1, 2);
    MultiGraph g = seed % 2 ? planted_multigraph(n, 2 * n, 2, rng.between(1, 2), seed).graph
                            : random_connected_multigraph(n, 2 * n, seed, 2);
    Bag q = range(0, n);
    auto cut = find_breakability_witness(g, q, s);
    bool exists = !oracle::edge_unbreakable(g, q, s, s);
    if (!cut) continue;
    CHECK(exists);
    CHECK(cut->order <= s);
    CHECK(edge_cut_order(g, cut->a) == cut->order);
    CHECK(cut->a.size() >= static_cast<std::size_t>(s + 1));
    CHECK(cut->b.size() >= static_cast<std::size_t>(s + 1));
  }
}

namespace {

// Two K_{s+2} joined by s parallel edges between vertex 0 and vertex s+2.
MultiGraph hub_cliques(std::int64_t s) {
  const Vertex c = static_cast<Vertex>(s + 2);
  MultiGraph h(2 * c, GraphMode::multi);
  for (Vertex u = 0; u < c; ++u)
    for (Vertex v = u + 1; v < c; ++v) {
      h.add_edge(u, v, std::int64_t{1});
      h.add_edge(u + c, v + c, std::int64_t{1});
    }
  for (std::int64_t i = 0; i < s; ++i) h.add_edge(0, c, std::int64_t{1});
  return h;
}

}  // namespace

TEST_CASE("hub cliques without a guaranteed witness") {
  // Each side holds fewer than (s+1)^5 terminals, so the search may decline.
  MultiGraph h = hub_cliques(2);
  auto cut = find_breakability_witness(h, range(0, 8), 2);
  if (cut) CHECK(cut->order <= 2);
}

TEST_CASE("lean witness from two cliques joined at hubs") {
  const std::int64_t s = 1;
  MultiGraph h = hub_cliques(s);
  TreeDecomposition td = TreeDecomposition::single_bag(h.vertex_count());
  auto cut = find_breakability_witness(h, td.bag(0), s);
  REQUIRE(cut);
  LeanWitness w = witness_to_lean(h, td, 0, *cut, s);
  CHECK(static_cast<std::int64_t>(w.separation.separator.size()) <= s);
  CHECK(w.z1.size() == w.z2.size());
  TreeDecomposition next = refine(h, td, w, s);
  CHECK_FALSE(check_tree_decomposition(h, next));
  CHECK(potential(next, s) < potential(td, s));
  CHECK(static_cast<std::int64_t>(max_adhesion(next)) <= s);
}

TEST_CASE("cleanup") {
  TreeDecomposition clean({{0, 1}, {1, 2}}, {{0, 1}}, 0);
  CHECK(cleanup(clean).bags() == clean.bags());
  TreeDecomposition dup({{0, 1}, {0, 1}, {1, 2}}, {{0, 1}, {1, 2}}, 0);
  CHECK(cleanup(dup).size() == 2);
  TreeDecomposition nested({{0}, {0, 1}, {0, 1, 2}}, {{0, 1}, {1, 2}}, 0);
  TreeDecomposition collapsed = cleanup(nested);
  CHECK(collapsed.size() == 1);
  CHECK(collapsed.bag(collapsed.root()) == Bag{0, 1, 2});
}

TEST_CASE("compactify") {
  MultiGraph star = from_edges(3, {{0, 1}, {0, 2}});
  TreeDecomposition loose({{0}, {0, 1, 2}}, {{0, 1}}, 0);
  CHECK(check_compact(star, loose));
  TreeDecomposition fixed = compactify(star, loose);
  CHECK_FALSE(check_compact(star, fixed));
  CHECK(oracle::is_compact(star, as_bag_tree(fixed)));
  for (const auto& b : fixed.bags()) CHECK(inside_some(b, loose.bags()));

  TreeDecomposition single = TreeDecomposition::single_bag(4);
  CHECK(compactify(cycle(4), single).bags() == single.bags());

  TreeDecomposition compact({{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}, 0);
  TreeDecomposition same = compactify(path(4), compact);
  CHECK_FALSE(check_compact(path(4), same));
  for (const auto& b : same.bags()) CHECK(inside_some(b, compact.bags()));
}

TEST_CASE("build examples") {
  MultiGraph tree = random_connected_multigraph(12, 11, 3);
  TreeDecomposition td = build_unbreakable_decomposition(tree, 1);
  CHECK_FALSE(check_tree_decomposition(tree, td));
  CHECK_FALSE(check_compact(tree, td));
  CHECK(max_adhesion(td) <= 1);

  TreeDecomposition k8 = build_unbreakable_decomposition(clique(8), 2);
  CHECK(k8.size() == 1);
  CHECK_THROWS_AS(build_unbreakable_decomposition(clique(3, GraphMode::weighted), 1), InvalidInput);
}

TEST_CASE("build on random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed * 7);
    Vertex n = static_cast<Vertex>(rng.between(5, 12));
    std::int64_t s = rng.between(1, 3);
    MultiGraph g = seed % 3 == 0 ? random_multigraph(n, 2 * n, seed)
                                 : planted_multigraph(n, 2 * n, 2 + seed % 2, rng.between(0, s), seed).graph;
    DecompositionLog log;
    TreeDecomposition td = build_unbreakable_decomposition(g, s, &log);
    auto bt = as_bag_tree(td);
    CHECK(oracle::is_tree_decomposition(g, bt));
    CHECK(oracle::is_compact(g, bt));
    CHECK(static_cast<std::int64_t>(max_adhesion(td)) <= s);
    for (std::size_t i = 1; i < log.potentials.size(); ++i) CHECK(log.potentials[i] < log.potentials[i - 1]);
  }
}
