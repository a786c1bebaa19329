#include <doctest.h>

#include "kcut/baseline.hpp"
#include "kcut/error.hpp"
#include "kcut/generators.hpp"
#include "kcut/graph_ops.hpp"
#include "kcut/kcut_dp.hpp"
#include "kcut/rng.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace kcut;
using namespace kcut::fixtures;

namespace {

std::vector<SpanningTree> all_trees(const MultiGraph& g, int k) {
  TreeFamilyOptions options;
  options.exhaustive = true;
  return build_tree_family(g, k, options);
}

// Cheapest i-partition of gamma(t) whose restriction to the adhesion is `key`.
std::optional<std::int64_t> brute_state(const MultiGraph& g, const TreeDecomposition& td, NodeId t,
                                        const Rgs& key, int i) {
  Bag gamma = td.gamma(t);
  Bag adhesion = td.adhesion(t);
  MultiGraph h = g.induced(gamma);
  std::vector<int> where;
  for (Vertex v : adhesion) where.push_back(static_cast<int>(std::lower_bound(gamma.begin(), gamma.end(), v) - gamma.begin()));
  std::vector<int> want(key.begin(), key.end());
  std::optional<std::int64_t> best;
  oracle::for_each_rgs(static_cast<int>(gamma.size()), i, [&](const std::vector<int>& labels) {
    if (oracle::part_count(labels) != i) return;
    std::vector<int> restricted;
    for (int p : where) restricted.push_back(labels[p]);
    if (oracle::canonical(restricted) != want) return;
    std::int64_t w = to_int64(oracle::crossing(h, labels));
    if (!best || w < *best) best = w;
  });
  return best;
}

}  // namespace

TEST_CASE("dp parameters") {
  DpParams p = dp_params(2, 1);
  CHECK(p.small_bag_threshold == 2 * 2 * 32);
  CHECK(p.guess_s1 == 2);
  CHECK(p.nice_s1 == 3);
  CHECK(p.nice_s2 == 3 * (1 + 2 + 2));
  CHECK(p.guess_s2 == 2 * 3 * (128 + 2));
  DpOptions forced;
  forced.small_bag_threshold = 1;
  CHECK(dp_params(2, 1, forced).small_bag_threshold == 1);
  CHECK(dp_params(3, 1'000'000).guess_s2 == std::numeric_limits<std::uint64_t>::max() / 4);
}

TEST_CASE("leaf states") {
  MultiGraph p3 = path(3);
  TreeDecomposition td = TreeDecomposition::single_bag(3);
  SpanningTree tree{{0, 1}, {1, 2}};
  DpInstance inst(p3, 2, 1, td, tree);
  std::vector<DpTable> none(td.size());
  CHECK(compute_state(inst, td.root(), Partition(), 1, none) == 0);

  MultiGraph edge = path(2);
  TreeDecomposition td2 = TreeDecomposition::single_bag(2);
  SpanningTree tree2{{0, 1}};
  DpInstance inst2(edge, 2, 1, td2, tree2);
  std::vector<DpTable> none2(td2.size());
  CHECK(compute_state(inst2, td2.root(), Partition(), 2, none2) == 1);
  DpInstance tight(edge, 2, 0, td2, tree2);
  CHECK(compute_state(tight, td2.root(), Partition(), 2, none2) == kInfinity);
}

TEST_CASE("solve_exact examples") {
  ExactResult p4 = solve_exact(path(4), 2, 1, all_trees(path(4), 2));
  CHECK(p4.yes);
  CHECK(p4.value == 1);
  REQUIRE(p4.partition);
  CHECK(cut_weight(path(4), *p4.partition) == 1);
  CHECK_FALSE(solve_exact(cycle(4), 2, 1, all_trees(cycle(4), 2)).yes);
  CHECK(solve_exact(cycle(4), 2, 2, all_trees(cycle(4), 2)).yes);
}

TEST_CASE("solve_exact preconditions") {
  auto trees = all_trees(path(4), 2);
  CHECK_THROWS_AS(solve_exact(path(4), 5, 1, trees), InvalidInput);
  CHECK_THROWS_AS(solve_exact(MultiGraph(3, GraphMode::multi), 2, 1, {}), InvalidInput);
  CHECK_THROWS_AS(solve_exact(path(4), 2, -1, trees), InvalidInput);
  SpanningTree not_spanning{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(solve_exact(path(4), 2, 1, {not_spanning}), InvalidInput);
}

TEST_CASE("root value equals the optimum") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    Vertex n = static_cast<Vertex>(rng.between(3, 7));
    MultiGraph g = random_connected_multigraph(n, static_cast<std::size_t>(rng.between(n - 1, 12)), seed, 3);
    int k = static_cast<int>(rng.between(2, 3));
    std::int64_t opt = to_int64(oracle::min_kcut(g, k));
    ExactResult r = solve_exact(g, k, opt + 1, all_trees(g, k));
    REQUIRE(r.yes);
    CHECK(r.value == opt);
    REQUIRE(r.partition);
    CHECK(static_cast<int>(r.partition->size()) == k);
    CHECK(multi_cut_weight(g, *r.partition) == opt);
  }
}

TEST_CASE("every state is an upper bound on the brute-force optimum") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(seed * 5);
    Vertex n = static_cast<Vertex>(rng.between(5, 8));
    int k = static_cast<int>(rng.between(2, 3));
    std::int64_t s = rng.between(1, 2);
    MultiGraph g = planted_multigraph(n, static_cast<std::size_t>(n + 2), 2, static_cast<std::size_t>(rng.between(1, 2)), seed).graph;
    TreeDecomposition td = build_unbreakable_decomposition(g, s);
    auto trees = all_trees(g, k);
    for (std::size_t ti = 0; ti < std::min<std::size_t>(trees.size(), 4); ++ti) {
      DpInstance inst(g, k, s, td, trees[ti]);
      std::vector<DpTable> tables = run_dp(inst);
      for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t) {
        for (const auto& [key, entry] : tables[t].entries) {
          for (int i = 1; i <= k; ++i) {
            DpValue v = tables[t].value(key, i);
            if (v == kInfinity) continue;
            CHECK(v <= s);
            auto brute = brute_state(g, td, t, key, i);
            REQUIRE(brute);
            CHECK(*brute <= v);
          }
        }
      }
    }
  }
}

TEST_CASE("cut guesses bound the state from above") {
  MultiGraph g = random_connected_multigraph(6, 9, 4, 2);
  const int k = 2;
  std::int64_t opt = to_int64(oracle::min_kcut(g, k));
  TreeDecomposition td = TreeDecomposition::single_bag(6);
  auto trees = all_trees(g, k);
  for (std::size_t ti = 0; ti < std::min<std::size_t>(trees.size(), 5); ++ti) {
    DpInstance inst(g, k, opt + 2, td, trees[ti]);
    std::vector<DpTable> none(td.size());
    DpValue state = compute_state(inst, td.root(), Partition(), k, none);
    DpValue best = kInfinity;
    for (const auto& guess : inst.guesses(td.root())) {
      DpValue v = cut_guess_value(inst, td.root(), Partition(), k, guess, none);
      CHECK(v >= opt);
      best = std::min(best, v);
    }
    CHECK(best == state);
  }
}

TEST_CASE("nice decompositions pass the checker") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    MultiGraph g = random_connected_multigraph(6, 8, seed, 2);
    TreeDecomposition td = build_unbreakable_decomposition(g, 1);
    SpanningTree tree = all_trees(g, 2).front();
    DpOptions options;
    options.small_bag_threshold = 1;
    DpInstance inst(g, 2, 3, td, tree, options);
    for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t)
      for (const auto& guess : inst.guesses(t))
        for (const auto& d : nice_decompositions(inst, t, guess)) CHECK_FALSE(check_nice_decomposition(g, td, t, d, 2));
  }
}

TEST_CASE("large-bag branch matches the oracle") {
  DpOptions forced;
  forced.small_bag_threshold = 1;
  ExactOptions options;
  options.dp = forced;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed * 11);
    Vertex n = static_cast<Vertex>(rng.between(3, 6));
    MultiGraph g = random_connected_multigraph(n, static_cast<std::size_t>(rng.between(n - 1, 9)), seed, 2);
    int k = static_cast<int>(rng.between(2, std::min<Vertex>(3, n)));
    std::int64_t opt = to_int64(oracle::min_kcut(g, k));
    auto trees = all_trees(g, k);
    ExactResult r = solve_exact(g, k, opt, trees, options);
    CHECK(r.yes);
    CHECK(r.value == opt);
    if (opt > 0) CHECK_FALSE(solve_exact(g, k, opt - 1, trees, options).yes);
  }
}

TEST_CASE("reconstruction agrees with the root value") {
  MultiGraph g = planted_multigraph(8, 12, 2, 2, 6).graph;
  TreeDecomposition td = build_unbreakable_decomposition(g, 2);
  for (const auto& tree : all_trees(g, 2)) {
    DpInstance inst(g, 2, 2, td, tree);
    auto tables = run_dp(inst);
    DpValue v = tables[td.root()].value(Rgs{}, 2);
    if (v == kInfinity) continue;
    Partition p = reconstruct(inst, tables, 2);
    CHECK(p.size() == 2);
    CHECK(multi_cut_weight(g, p) == v);
  }
}
