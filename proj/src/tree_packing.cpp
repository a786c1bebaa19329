#include "kcut/tree_packing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "kcut/error.hpp"
#include "kcut/graph_ops.hpp"

namespace kcut {

namespace {

struct SimpleEdge {
  Vertex u, v;
  Rational capacity;
};

// Parallel edges merged, u < v, sorted by endpoint pair.
std::vector<SimpleEdge> simple_edges(const MultiGraph& g) {
  std::map<std::pair<Vertex, Vertex>, Rational> merged;
  for (const auto& e : g.edges()) merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.weight;
  std::vector<SimpleEdge> out;
  for (auto& [key, w] : merged) out.push_back({key.first, key.second, w});
  return out;
}

void require_connected(const MultiGraph& g) {
  if (!is_connected(g)) throw InvalidInput("spanning trees need a connected graph");
}

}  // namespace

TreeFamily pack_trees(const MultiGraph& g, int count) {
  if (count < 1) throw InvalidInput("tree count must be positive");
  require_connected(g);
  auto edges = simple_edges(g);
  const std::size_t m = edges.size();
  std::vector<std::int64_t> load(m, 0);
  std::set<SpanningTree> seen;
  TreeFamily family;
  std::vector<std::size_t> order(m);
  for (int i = 0; i < count; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return Rational(load[a]) / edges[a].capacity < Rational(load[b]) / edges[b].capacity;
    });
    UnionFind uf(g.vertex_count());
    SpanningTree tree;
    for (std::size_t e : order) {
      if (uf.unite(edges[e].u, edges[e].v)) {
        tree.push_back({edges[e].u, edges[e].v});
        ++load[e];
      }
    }
    std::sort(tree.begin(), tree.end());
    if (seen.insert(tree).second) family.trees.push_back(std::move(tree));
  }
  for (std::size_t e = 0; e < m; ++e) family.loads.push_back({{edges[e].u, edges[e].v}, load[e]});
  return family;
}

int default_tree_count(int k, std::size_t m) {
  double raw = std::ceil(std::pow(static_cast<double>(k), 3) * std::log(static_cast<double>(m) + 2.0));
  return static_cast<int>(std::clamp(raw, 1.0, 200.0));
}

std::vector<SpanningTree> enumerate_spanning_trees(const MultiGraph& g, std::size_t cap) {
  require_connected(g);
  auto edges = simple_edges(g);
  const Vertex n = g.vertex_count();
  std::vector<SpanningTree> out;
  SpanningTree current;
  // Include-first branching over sorted edges yields lexicographic order.
  auto rec = [&](auto&& self, std::size_t next, std::vector<std::size_t> comp) -> void {
    if (out.size() >= cap) return;
    if (static_cast<Vertex>(current.size()) == n - 1) {
      out.push_back(current);
      return;
    }
    if (next == edges.size()) return;
    const auto& e = edges[next];
    if (comp[e.u] != comp[e.v]) {
      auto merged = comp;
      std::size_t from = comp[e.v], to = comp[e.u];
      for (auto& c : merged)
        if (c == from) c = to;
      current.push_back({e.u, e.v});
      self(self, next + 1, std::move(merged));
      current.pop_back();
    }
    // Excluding the edge must leave the rest able to finish the tree.
    UnionFind uf(n);
    for (Vertex v = 0; v < n; ++v) uf.unite(v, comp[v]);
    for (std::size_t j = next + 1; j < edges.size(); ++j) uf.unite(edges[j].u, edges[j].v);
    if (uf.components() == 1) self(self, next + 1, std::move(comp));
  };
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  if (n >= 1) rec(rec, 0, comp);
  return out;
}

std::vector<SpanningTree> build_tree_family(const MultiGraph& g, int k, const TreeFamilyOptions& options) {
  int count = options.packing_count > 0 ? options.packing_count : default_tree_count(k, g.edge_count());
  std::vector<SpanningTree> trees = pack_trees(g, count).trees;
  if (options.exhaustive) {
    std::set<SpanningTree> have(trees.begin(), trees.end());
    for (auto& t : enumerate_spanning_trees(g, options.exhaustive_cap))
      if (!have.count(t)) trees.push_back(std::move(t));
  }
  return trees;
}

std::int64_t crossings(const SpanningTree& tree, const Partition& p) {
  std::int64_t total = 0;
  for (auto [u, v] : tree)
    if (p.part_of(u) != p.part_of(v)) ++total;
  return total;
}

bool is_spanning_tree(const SpanningTree& tree, Vertex n) {
  if (n == 0) return tree.empty();
  if (static_cast<Vertex>(tree.size()) != n - 1) return false;
  UnionFind uf(n);
  for (auto [u, v] : tree) {
    if (u < 0 || v < 0 || u >= n || v >= n || !uf.unite(u, v)) return false;
  }
  return true;
}

}  // namespace kcut
