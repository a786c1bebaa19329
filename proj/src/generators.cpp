#include "kcut/generators.hpp"

#include <algorithm>
#include <numeric>

#include "kcut/error.hpp"
#include "kcut/rng.hpp"

namespace kcut {

namespace {

std::pair<Vertex, Vertex> random_pair(Rng& rng, Vertex n) {
  Vertex u = static_cast<Vertex>(rng.below(n));
  Vertex v = static_cast<Vertex>(rng.below(n - 1));
  if (v >= u) ++v;
  return {u, v};
}

std::vector<Vertex> shuffled(Rng& rng, Vertex n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (Vertex i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  return order;
}

// Random tree on `members`, then `extra` random edges among them.
void add_connected(MultiGraph& g, Rng& rng, const std::vector<Vertex>& members, std::size_t extra,
                   std::int64_t max_multiplicity) {
  const Vertex n = static_cast<Vertex>(members.size());
  auto order = shuffled(rng, n);
  for (Vertex i = 1; i < n; ++i) {
    Vertex parent = order[rng.below(i)];
    g.add_edge(members[order[i]], members[parent], rng.between(1, max_multiplicity));
  }
  for (std::size_t e = 0; e < extra; ++e) {
    auto [u, v] = random_pair(rng, n);
    g.add_edge(members[u], members[v], rng.between(1, max_multiplicity));
  }
}

}  // namespace

MultiGraph random_multigraph(Vertex n, std::size_t m, std::uint64_t seed, std::int64_t max_multiplicity) {
  if (n < 1 || max_multiplicity < 1) throw InvalidInput("need n >= 1 and multiplicity >= 1");
  if (m > 0 && n < 2) throw InvalidInput("edges need at least two vertices");
  Rng rng(seed);
  MultiGraph g(n, GraphMode::multi);
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = random_pair(rng, n);
    g.add_edge(u, v, rng.between(1, max_multiplicity));
  }
  return g;
}

MultiGraph random_connected_multigraph(Vertex n, std::size_t m, std::uint64_t seed,
                                       std::int64_t max_multiplicity) {
  if (n < 1 || max_multiplicity < 1) throw InvalidInput("need n >= 1 and multiplicity >= 1");
  if (m + 1 < static_cast<std::size_t>(n)) throw InvalidInput("m must be at least n-1");
  if (n == 1 && m > 0) throw InvalidInput("edges need at least two vertices");
  Rng rng(seed);
  MultiGraph g(n, GraphMode::multi);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  add_connected(g, rng, all, m - (n - 1), max_multiplicity);
  return g;
}

MultiGraph random_connected_weighted(Vertex n, std::size_t m, std::uint64_t seed, std::int64_t max_numerator) {
  MultiGraph shape = random_connected_multigraph(n, m, seed);
  Rng rng(splitmix64(seed ^ 0x77e1ULL));
  static constexpr int kDenominators[] = {1, 2, 4};
  MultiGraph g(n, GraphMode::weighted);
  for (const auto& e : shape.edges()) {
    Rational w(rng.between(1, max_numerator), kDenominators[rng.below(3)]);
    g.add_edge(e.u, e.v, w);
  }
  return g;
}

PlantedGraph planted_multigraph(Vertex n, std::size_t m, int k, std::size_t cross, std::uint64_t seed) {
  if (k < 1 || n < k) throw InvalidInput("planted graph needs 1 <= k <= n");
  std::vector<std::vector<Vertex>> clusters(k);
  for (Vertex v = 0; v < n; ++v) clusters[v * k / n].push_back(v);
  std::size_t tree_edges = static_cast<std::size_t>(n - k);
  if (m < tree_edges) throw InvalidInput("m must be at least n-k");
  if (cross > 0 && k < 2) throw InvalidInput("cross edges need k >= 2");
  // Spare edges go to clusters that can hold them, in turn.
  std::vector<std::size_t> extra(k, 0);
  std::size_t spare = m - tree_edges;
  std::vector<int> roomy;
  for (int c = 0; c < k; ++c)
    if (clusters[c].size() >= 2) roomy.push_back(c);
  if (spare > 0 && roomy.empty()) throw InvalidInput("no cluster can hold intra-cluster edges");
  for (std::size_t i = 0; i < spare; ++i) ++extra[roomy[i % roomy.size()]];

  Rng rng(seed);
  PlantedGraph out{MultiGraph(n, GraphMode::multi), static_cast<std::int64_t>(cross)};
  for (int c = 0; c < k; ++c) add_connected(out.graph, rng, clusters[c], extra[c], 1);
  for (std::size_t e = 0; e < cross; ++e) {
    auto [a, b] = random_pair(rng, k);
    const auto& ca = clusters[a];
    const auto& cb = clusters[b];
    out.graph.add_edge(ca[rng.below(ca.size())], cb[rng.below(cb.size())], 1);
  }
  return out;
}

}  // namespace kcut
