#pragma once

// Brute-force reference implementations for tests. They share nothing with
// the library beyond the graph and partition containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"
#include "kcut/rational.hpp"

namespace kcut::oracle {

// Calls visit(labels) for every restricted growth string of length n with
// at most max_parts parts.
inline void for_each_rgs(int n, int max_parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> labels(n, 0);
  std::function<void(int, int)> go = [&](int i, int used) {
    if (i == n) {
      visit(labels);
      return;
    }
    for (int l = 0; l <= std::min(used, max_parts - 1); ++l) {
      labels[i] = l;
      go(i + 1, std::max(used, l + 1));
    }
  };
  if (n == 0) {
    visit(labels);
    return;
  }
  go(0, 0);
}

inline int part_count(const std::vector<int>& labels) {
  int c = 0;
  for (int l : labels) c = std::max(c, l + 1);
  return c;
}

inline Rational crossing(const MultiGraph& g, const std::vector<int>& labels) {
  Rational w = 0;
  for (const auto& e : g.edges())
    if (labels[e.u] != labels[e.v]) w += e.weight;
  return w;
}

// Minimum weight over partitions of V into exactly k nonempty parts.
inline Rational min_kcut(const MultiGraph& g, int k) {
  bool found = false;
  Rational best = 0;
  for_each_rgs(g.vertex_count(), k, [&](const std::vector<int>& labels) {
    if (part_count(labels) != k) return;
    Rational w = crossing(g, labels);
    if (!found || w < best) best = w, found = true;
  });
  return best;
}

// Every k-partition's weight, keyed by canonical labels.
inline std::vector<std::pair<std::vector<int>, Rational>> all_kcuts(const MultiGraph& g, int k) {
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for_each_rgs(g.vertex_count(), k, [&](const std::vector<int>& labels) {
    if (part_count(labels) == k) out.push_back({labels, crossing(g, labels)});
  });
  return out;
}

inline std::vector<int> canonical(const std::vector<int>& labels) {
  std::vector<int> remap, out;
  for (int l : labels) {
    if (l >= static_cast<int>(remap.size())) remap.resize(l + 1, -1);
    if (remap[l] < 0) remap[l] = static_cast<int>(std::count_if(remap.begin(), remap.end(), [](int r) { return r >= 0; }));
    out.push_back(remap[l]);
  }
  return out;
}

// Partitions of X (as canonical labels over sorted X) that are restrictions
// of partitions of V crossed by at most 2k-2 tree edges.
inline std::set<std::vector<int>> feasible_family(const std::vector<std::pair<Vertex, Vertex>>& tree, int n,
                                                  const std::vector<Vertex>& x, int k) {
  const int budget = 2 * k - 2;
  std::set<std::vector<int>> out;
  std::vector<int> labels(n, 0);
  // Tree edges whose later endpoint is v, so crossings are counted once v is labelled.
  std::vector<std::vector<Vertex>> earlier(n);
  for (auto [u, v] : tree) earlier[std::max(u, v)].push_back(std::min(u, v));
  std::function<void(int, int, int)> go = [&](int v, int used, int crossed) {
    if (v == n) {
      std::vector<int> restricted;
      for (Vertex y : x) restricted.push_back(labels[y]);
      out.insert(canonical(restricted));
      return;
    }
    for (int l = 0; l <= used; ++l) {
      labels[v] = l;
      int c = crossed;
      for (Vertex u : earlier[v]) c += labels[u] != l;
      if (c <= budget) go(v + 1, std::max(used, l + 1), c);
    }
  };
  go(0, 0, 0);
  return out;
}

// Every edge cut (A, B) of order <= s leaves at most q vertices of `set` on
// one of its sides. Weights count as orders.
inline bool edge_unbreakable(const MultiGraph& g, const std::vector<Vertex>& set, std::int64_t q, std::int64_t s) {
  const int n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational order = 0;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) order += e.weight;
    if (order > s) continue;
    std::int64_t in_a = 0, in_b = 0;
    for (Vertex v : set) ((mask >> v) & 1 ? in_a : in_b)++;
    if (std::min(in_a, in_b) > q) return false;
  }
  return true;
}

struct BagTree {
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> parent;  // -1 at the root
};

inline std::vector<int> subtree_members(const BagTree& t, int node) {
  std::vector<int> out{node};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t c = 0; c < t.parent.size(); ++c)
      if (t.parent[c] == out[i]) out.push_back(static_cast<int>(c));
  return out;
}

// Vertex and edge coverage, and connectedness of the bags holding each vertex.
inline bool is_tree_decomposition(const MultiGraph& g, const BagTree& t) {
  const int n = g.vertex_count();
  auto holds = [&](int node, Vertex v) {
    return std::find(t.bags[node].begin(), t.bags[node].end(), v) != t.bags[node].end();
  };
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> nodes;
    for (std::size_t i = 0; i < t.bags.size(); ++i)
      if (holds(static_cast<int>(i), v)) nodes.push_back(static_cast<int>(i));
    if (nodes.empty()) return false;
    // Connected iff exactly one holder has a parent outside the holders.
    int tops = 0;
    for (int i : nodes)
      if (t.parent[i] < 0 || !holds(t.parent[i], v)) ++tops;
    if (tops != 1) return false;
  }
  for (const auto& e : g.edges()) {
    bool ok = false;
    for (std::size_t i = 0; i < t.bags.size() && !ok; ++i) ok = holds(static_cast<int>(i), e.u) && holds(static_cast<int>(i), e.v);
    if (!ok) return false;
  }
  return true;
}

// For non-root nodes with a nonempty adhesion: alpha induces a connected
// graph whose neighbourhood is exactly the adhesion.
inline bool is_compact(const MultiGraph& g, const BagTree& t) {
  const int n = g.vertex_count();
  for (std::size_t node = 0; node < t.bags.size(); ++node) {
    if (t.parent[node] < 0) continue;
    std::vector<char> in_gamma(n, 0), in_adh(n, 0);
    for (int m : subtree_members(t, static_cast<int>(node)))
      for (Vertex v : t.bags[m]) in_gamma[v] = 1;
    for (Vertex v : t.bags[node])
      if (std::find(t.bags[t.parent[node]].begin(), t.bags[t.parent[node]].end(), v) != t.bags[t.parent[node]].end())
        in_adh[v] = 1;
    if (std::count(in_adh.begin(), in_adh.end(), 1) == 0) continue;
    std::vector<Vertex> alpha;
    for (Vertex v = 0; v < n; ++v)
      if (in_gamma[v] && !in_adh[v]) alpha.push_back(v);
    if (alpha.empty()) return false;
    std::vector<char> seen(n, 0), nbr(n, 0);
    std::vector<Vertex> stack{alpha[0]};
    seen[alpha[0]] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges()) {
        Vertex w = e.u == v ? e.v : e.v == v ? e.u : -1;
        if (w < 0) continue;
        bool w_alpha = in_gamma[w] && !in_adh[w];
        if (w_alpha && !seen[w]) seen[w] = 1, stack.push_back(w);
      }
    }
    for (Vertex v : alpha)
      if (!seen[v]) return false;
    for (const auto& e : g.edges()) {
      bool ua = in_gamma[e.u] && !in_adh[e.u], va = in_gamma[e.v] && !in_adh[e.v];
      if (ua && !va) nbr[e.v] = 1;
      if (va && !ua) nbr[e.u] = 1;
    }
    if (nbr != in_adh) return false;
  }
  return true;
}

// Exhaustive check of the covering property over bitmask subsets.
inline std::size_t covering_misses(std::size_t ground, std::size_t s1, std::size_t s2,
                                   const std::vector<std::vector<std::uint32_t>>& sets) {
  std::vector<std::uint32_t> masks;
  for (const auto& s : sets) {
    std::uint32_t m = 0;
    for (auto x : s) m |= 1u << x;
    masks.push_back(m);
  }
  std::size_t misses = 0;
  const std::uint32_t full = (1u << ground) - 1;
  for (std::uint32_t x1 = 0; x1 <= full; ++x1) {
    if (static_cast<std::size_t>(__builtin_popcount(x1)) > s1) continue;
    std::uint32_t rest = full & ~x1;
    // Subsets of the complement of x1.
    for (std::uint32_t x2 = rest;; x2 = (x2 - 1) & rest) {
      if (static_cast<std::size_t>(__builtin_popcount(x2)) <= s2) {
        bool hit = std::any_of(masks.begin(), masks.end(),
                               [&](std::uint32_t m) { return (m & x1) == x1 && (m & x2) == 0; });
        misses += !hit;
      }
      if (x2 == 0) break;
    }
  }
  return misses;
}

}  // namespace kcut::oracle
