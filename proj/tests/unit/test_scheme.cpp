#include <doctest.h>

#include "kcut/baseline.hpp"
#include "kcut/error.hpp"
#include "kcut/generators.hpp"
#include "kcut/graph_ops.hpp"
#include "kcut/scheme.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace kcut;
using namespace kcut::fixtures;

namespace {

MultiGraph as_weighted(const MultiGraph& g) {
  MultiGraph w(g.vertex_count(), GraphMode::weighted);
  for (const auto& e : g.edges()) w.add_edge(e.u, e.v, e.weight);
  return w;
}

}  // namespace

TEST_CASE("k = 1 is trivial") {
  SchemeResult r = solve(as_weighted(petersen()), 1, Rational(1, 2), 0);
  CHECK(r.partition.size() == 1);
  CHECK(r.value == 0);
  CHECK(r.stats.branch == "trivial");
}

TEST_CASE("two triangles and a bridge") {
  SchemeResult r = solve(two_triangles_bridge(GraphMode::weighted), 2, Rational(3, 10), 1);
  CHECK(r.partition == parts({{0, 1, 2}, {3, 4, 5}}));
  CHECK(r.value == 1);
}

TEST_CASE("disconnected input splits along components") {
  MultiGraph g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, GraphMode::weighted);
  SchemeResult two = solve(g, 2, Rational(1, 2), 0);
  CHECK(two.value == 0);
  CHECK(two.stats.branch == "components");
  SchemeResult three = solve(g, 3, Rational(1, 2), 0);
  CHECK(three.value == 2);
  CHECK(three.partition.size() == 3);
}

TEST_CASE("tiny epsilon takes the exact branch") {
  MultiGraph g = random_connected_weighted(6, 9, 3);
  SchemeResult r = solve(g, 3, Rational(1, 10), 0);
  CHECK(r.stats.branch == "exact");
  CHECK(r.value == oracle::min_kcut(g, 3));
}

TEST_CASE("reported value is the true weight") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    MultiGraph g = random_connected_weighted(8, 12, seed);
    int k = 2 + static_cast<int>(seed % 3);
    Rational eps = seed % 2 ? Rational(1, 2) : Rational(1, 5);
    SchemeResult r = solve(g, k, eps, seed);
    CHECK(static_cast<int>(r.partition.size()) == k);
    CHECK(r.value == cut_weight(g, r.partition));
    CHECK(r.value <= (1 + eps) * oracle::min_kcut(g, k));
    if (r.stats.branch == "sampled" && r.value > 0) {
      double rel = std::abs(r.stats.estimate - to_double(r.value)) / to_double(r.value);
      CHECK(rel <= to_double(eps));
    }
  }
}

TEST_CASE("multi-mode input is accepted") {
  MultiGraph g = random_connected_multigraph(7, 12, 5, 3);
  SchemeResult r = solve(g, 2, Rational(1, 2), 0);
  CHECK(r.value == oracle::min_kcut(g, 2));
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(solve(triangle(GraphMode::weighted), 4, Rational(1, 2), 0), InvalidInput);
  CHECK_THROWS_AS(solve(triangle(GraphMode::weighted), 2, Rational(0), 0), InvalidInput);
  CHECK_THROWS_AS(solve(triangle(GraphMode::weighted), 2, Rational(3, 2), 0), InvalidInput);
}

TEST_CASE("combine_components") {
  std::vector<std::vector<DpValue>> one{{kInfinity, 0, 4, 9}};
  Assignment a = combine_components(one, 2, 100);
  CHECK(a.parts == std::vector<int>{2});
  CHECK(a.total == 4);

  std::vector<std::vector<DpValue>> two{{kInfinity, 0, 2, 3}, {kInfinity, 0, 2, 3}};
  Assignment b = combine_components(two, 2, 100);
  CHECK(b.parts == std::vector<int>{1, 1});
  CHECK(b.total == 0);

  std::vector<std::vector<DpValue>> uneven{{kInfinity, 0, 5}, {kInfinity, 0, 2}};
  Assignment c = combine_components(uneven, 3, 100);
  CHECK(c.parts == std::vector<int>{1, 2});
  CHECK(c.total == 2);
  CHECK_THROWS_AS(combine_components(uneven, 3, 1), NoSolution);
  CHECK(combine_components(uneven, 4, 100).total == 7);
  CHECK_THROWS_AS(combine_components(uneven, 5, 100), NoSolution);
}

TEST_CASE("merge_to_k_parts") {
  Partition p = parts({{0}, {1, 2, 3}, {4}, {5, 6}});
  Partition m = merge_to_k_parts(p, 2);
  CHECK(m.size() == 2);
  CHECK(m.part_of(0) == m.part_of(4));
  CHECK_THROWS_AS(merge_to_k_parts(p, 5), InvalidInput);
}

TEST_CASE("minimize_exact on a disconnected multigraph") {
  MultiGraph g = from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}});
  ExactMinimum best = minimize_exact(g, 3, SchemeOptions{});
  CHECK(best.value == 1);
  CHECK(best.partition.size() == 3);
  CHECK(multi_cut_weight(g, best.partition) == 1);
}

TEST_CASE("sweep bound") {
  CHECK(sweep_bound(10, 1, Rational(1, 2)) == 1);
  std::int64_t b = sweep_bound(10, 2, Rational(1, 2));
  CHECK(b == static_cast<std::int64_t>(std::ceil(1.5L * 100 * std::log(10.0L) / 0.125L)) + 1);
}
