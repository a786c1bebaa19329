#include "kcut/projection.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kcut {

ProjectedTree project_tree(const SpanningTree& tree, Vertex n, const std::vector<Vertex>& x_in) {
  ProjectedTree pt;
  pt.x = x_in;
  std::sort(pt.x.begin(), pt.x.end());
  pt.x.erase(std::unique(pt.x.begin(), pt.x.end()), pt.x.end());
  if (pt.x.empty()) return pt;

  std::vector<char> in_x(n, 0), alive(n, 1);
  for (Vertex v : pt.x) in_x[v] = 1;
  std::vector<std::set<Vertex>> adj(n);
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> path;  // key (a, b), path a..b
  for (auto [u, v] : tree) {
    adj[u].insert(v);
    adj[v].insert(u);
    path[{u, v}] = {u, v};
    path[{v, u}] = {v, u};
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v] || in_x[v]) continue;
      if (adj[v].size() <= 1) {
        for (Vertex w : adj[v]) {
          adj[w].erase(v);
          path.erase({v, w});
          path.erase({w, v});
        }
        adj[v].clear();
        alive[v] = 0;
        changed = true;
      } else if (adj[v].size() == 2) {
        Vertex a = *adj[v].begin(), b = *adj[v].rbegin();
        std::vector<Vertex> joined = path[{a, v}];
        const auto& tail = path[{v, b}];
        joined.insert(joined.end(), tail.begin() + 1, tail.end());
        for (Vertex w : {a, b}) {
          adj[w].erase(v);
          path.erase({v, w});
          path.erase({w, v});
        }
        adj[a].insert(b);
        adj[b].insert(a);
        path[{b, a}] = std::vector<Vertex>(joined.rbegin(), joined.rend());
        path[{a, b}] = std::move(joined);
        adj[v].clear();
        alive[v] = 0;
        changed = true;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) pt.vertices.push_back(v);
  for (Vertex u : pt.vertices)
    for (Vertex v : adj[u])
      if (u < v) {
        pt.edges.push_back({u, v});
        pt.paths.push_back(path[{u, v}]);
      }
  return pt;
}

std::vector<Rgs> feasible_family_rgs(const ProjectedTree& pt, int k) {
  if (pt.x.empty()) return {Rgs{}};
  const std::size_t nv = pt.vertices.size();
  const std::size_t ne = pt.edges.size();
  const std::size_t budget = std::min<std::size_t>(ne, static_cast<std::size_t>(std::max(0, 2 * k - 2)));
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(pt.vertices.begin(), pt.vertices.end(), v) - pt.vertices.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> local;
  for (auto [u, v] : pt.edges) local.push_back({index_of(u), index_of(v)});
  std::vector<std::size_t> x_pos;
  for (Vertex v : pt.x) x_pos.push_back(index_of(v));

  std::set<Rgs> family;
  std::vector<char> removed(ne, 0);
  // Components after deleting a chosen edge set, restricted to X. Parts
  // without X vertices vanish in the projection, so coarsening the restricted
  // partition gives the same family as coarsening first.
  auto emit = [&]() {
    std::vector<int> comp(nv, -1);
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t e = 0; e < ne; ++e)
      if (!removed[e]) {
        adj[local[e].first].push_back(local[e].second);
        adj[local[e].second].push_back(local[e].first);
      }
    int next = 0;
    for (std::size_t s = 0; s < nv; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = next;
      while (!stack.empty()) {
        std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b : adj[a])
          if (comp[b] < 0) {
            comp[b] = next;
            stack.push_back(b);
          }
      }
      ++next;
    }
    std::vector<int> labels;
    for (std::size_t p : x_pos) labels.push_back(comp[p]);
    Rgs base = canonical_rgs(labels);
    for_each_coarsening(base, rgs_part_count(base), [&](const Rgs& r) { family.insert(r); });
  };
  auto rec = [&](auto&& self, std::size_t next, std::size_t left) -> void {
    emit();
    if (left == 0) return;
    for (std::size_t e = next; e < ne; ++e) {
      removed[e] = 1;
      self(self, e + 1, left - 1);
      removed[e] = 0;
    }
  };
  rec(rec, 0, budget);
  return {family.begin(), family.end()};
}

std::vector<Partition> feasible_family(const ProjectedTree& pt, int k) {
  std::vector<Partition> out;
  for (const Rgs& r : feasible_family_rgs(pt, k)) {
    if (pt.x.empty()) {
      out.push_back(Partition());
      continue;
    }
    std::vector<int> labels(r.begin(), r.end());
    out.push_back(Partition::from_labels(pt.x, labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kcut
