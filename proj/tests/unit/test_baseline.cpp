#include <doctest.h>

#include "kcut/baseline.hpp"
#include "kcut/error.hpp"
#include "kcut/flow.hpp"
#include "kcut/generators.hpp"
#include "kcut/graph_ops.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace kcut;
using namespace kcut::fixtures;

TEST_CASE("min s-t edge cut") {
  std::vector<Vertex> a{0}, c{2}, b{1};
  CHECK(min_st_edge_cut(path(3), a, c).value == 1);
  MultiGraph parallel(2, GraphMode::multi);
  parallel.add_edge(0, 1, std::int64_t{1});
  parallel.add_edge(0, 1, std::int64_t{1});
  CHECK(min_st_edge_cut(parallel, a, b).value == 2);
  FlowResult k4 = min_st_edge_cut(clique(4), a, b);
  CHECK(k4.value == 3);
  CHECK(edge_cut_order(clique(4), k4.cut.a) == 3);
}

TEST_CASE("min vertex separator") {
  std::vector<Vertex> a{0}, b{1}, c{2};
  VertexSeparation adj = min_vertex_separator(path(2), a, b);
  CHECK(adj.separator.size() == 1);
  CHECK(adj.paths.size() == 1);
  VertexSeparation c4 = min_vertex_separator(cycle(4), a, c);
  // A single terminal bounds the order by one.
  CHECK(c4.separator.size() == 1);
  CHECK(c4.paths.size() == 1);
  // Shared terminals are forced into the separator.
  std::vector<Vertex> z1{0, 1}, z2{1, 3};
  VertexSeparation shared = min_vertex_separator(cycle(4), z1, z2);
  CHECK(std::find(shared.separator.begin(), shared.separator.end(), 1) != shared.separator.end());
}

TEST_CASE("global min 2-cut") {
  CHECK(global_min_2cut(path(3)).order == 1);
  CHECK(global_min_2cut(cycle(4)).order == 2);
  EdgeCut bridge = global_min_2cut(two_triangles_bridge());
  CHECK(bridge.order == 1);
  CHECK((bridge.a == std::vector<Vertex>{0, 1, 2} || bridge.a == std::vector<Vertex>{3, 4, 5}));
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    MultiGraph g = random_connected_multigraph(7, 12, seed, 3);
    CHECK(global_min_2cut(g).order == oracle::min_kcut(g, 2));
  }
}

TEST_CASE("approx2_kcut") {
  MultiGraph two = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CutResult cc = approx2_kcut(two, 2);
  CHECK(cc.weight == 0);
  CHECK(cc.partition == parts({{0, 1, 2}, {3, 4, 5}}));
  CHECK(approx2_kcut(from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), 2).weight == 1);
  CutResult c4 = approx2_kcut(cycle(4), 3);
  CHECK(c4.partition.size() == 3);
  CHECK(c4.weight <= 2 * oracle::min_kcut(cycle(4), 3));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    MultiGraph g = random_connected_weighted(7, 11, seed);
    for (int k = 2; k <= 4; ++k) {
      CutResult r = approx2_kcut(g, k);
      CHECK(static_cast<int>(r.partition.size()) == k);
      CHECK(cut_weight(g, r.partition) == r.weight);
      CHECK(r.weight <= 2 * oracle::min_kcut(g, k));
    }
  }
}

TEST_CASE("exact oracle") {
  CHECK(oracle_exact_kcut(triangle(), 3).weight == 3);
  CHECK(oracle_exact_kcut(path(4), 2).weight == 1);
  CHECK(oracle_exact_kcut(petersen(), 2).weight == 3);
  CHECK_THROWS_AS(oracle_exact_kcut(path(15), 2), OracleTooLarge);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MultiGraph g = random_connected_weighted(7, 12, seed);
    CutResult r = oracle_exact_kcut(g, 3);
    CHECK(r.weight == oracle::min_kcut(g, 3));
    CHECK(cut_weight(g, r.partition) == r.weight);
  }
}

TEST_CASE("contraction oracle finds the optimum on small graphs") {
  OracleOptions options;
  options.mode = OracleMode::contraction;
  CHECK(oracle_exact_kcut(petersen(), 2, options).weight == 3);
  CHECK(oracle_exact_kcut(two_triangles_bridge(), 2, options).weight == 1);
}
