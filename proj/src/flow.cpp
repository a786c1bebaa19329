#include "kcut/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "kcut/error.hpp"

namespace kcut {

namespace {

template <class Cap>
class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), it_(n) {}

  // Returns the index of the forward arc.
  int add_arc(int from, int to, Cap cap, Cap reverse_cap = Cap(0)) {
    arcs_.push_back({to, cap});
    adj_[from].push_back(static_cast<int>(arcs_.size()) - 1);
    arcs_.push_back({from, reverse_cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()) - 1);
    return static_cast<int>(arcs_.size()) - 2;
  }

  Cap max_flow(int s, int t, const Cap& infinite) {
    Cap flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (true) {
        Cap pushed = dfs(s, t, infinite);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  // Vertices reachable from s in the residual graph.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a : adj_[x]) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  const Cap& residual(int arc) const { return arcs_[arc].cap; }
  const std::vector<int>& arcs_from(int x) const { return adj_[x]; }
  int head(int arc) const { return arcs_[arc].to; }

 private:
  struct Arc {
    int to;
    Cap cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a : adj_[x]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cap dfs(int x, int t, Cap limit) {
    if (x == t) return limit;
    for (int& i = it_[x]; i < static_cast<int>(adj_[x].size()); ++i) {
      int a = adj_[x][i];
      int y = arcs_[a].to;
      if (arcs_[a].cap > 0 && level_[y] == level_[x] + 1) {
        Cap pushed = dfs(y, t, std::min(limit, arcs_[a].cap));
        if (pushed > 0) {
          arcs_[a].cap -= pushed;
          arcs_[a ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return Cap(0);
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> it_;
};

std::vector<Vertex> sorted_unique(std::span<const Vertex> s) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_vertices(const MultiGraph& g, std::span<const Vertex> s) {
  for (Vertex v : s)
    if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex out of range");
}

EdgeCut cut_from_side(const MultiGraph& g, const std::vector<char>& in_a) {
  EdgeCut cut;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (in_a[v] ? cut.a : cut.b).push_back(v);
  cut.order = edge_cut_order(g, cut.a);
  return cut;
}

}  // namespace

Rational edge_cut_order(const MultiGraph& g, std::span<const Vertex> side_a) {
  std::vector<char> in_a(g.vertex_count(), 0);
  for (Vertex v : side_a) in_a[v] = 1;
  Rational total = 0;
  for (const auto& e : g.edges())
    if (in_a[e.u] != in_a[e.v]) total += e.weight;
  return total;
}

FlowResult min_st_edge_cut(const MultiGraph& g, std::span<const Vertex> sources,
                           std::span<const Vertex> sinks) {
  if (!g.is_multi()) throw InvalidInput("min_st_edge_cut needs a multi-mode graph");
  if (sources.empty() || sinks.empty()) throw InvalidInput("sources and sinks must be nonempty");
  check_vertices(g, sources);
  check_vertices(g, sinks);
  auto src = sorted_unique(sources);
  auto snk = sorted_unique(sinks);
  std::vector<Vertex> both;
  std::set_intersection(src.begin(), src.end(), snk.begin(), snk.end(), std::back_inserter(both));
  if (!both.empty()) throw InvalidInput("sources and sinks overlap");

  const int n = g.vertex_count();
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  Dinic<std::int64_t> net(n + 2);
  const int s = n, t = n + 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    net.add_arc(edge.u, edge.v, g.multiplicity(e), g.multiplicity(e));
  }
  for (Vertex v : src) net.add_arc(s, v, inf);
  for (Vertex v : snk) net.add_arc(v, t, inf);
  FlowResult result;
  result.value = net.max_flow(s, t, inf);
  auto seen = net.reachable(s);
  seen.resize(n);
  result.cut = cut_from_side(g, seen);
  return result;
}

VertexSeparation min_vertex_separator(const MultiGraph& g, std::span<const Vertex> z1,
                                      std::span<const Vertex> z2) {
  if (z1.size() != z2.size()) throw InvalidInput("terminal sets differ in size");
  check_vertices(g, z1);
  check_vertices(g, z2);
  const int n = g.vertex_count();
  // v_in = 2v, v_out = 2v+1.
  const int s = 2 * n, t = 2 * n + 1;
  const int inf = n + 1;
  Dinic<int> net(2 * n + 2);
  std::vector<int> split_arc(n);
  for (Vertex v = 0; v < n; ++v) split_arc[v] = net.add_arc(2 * v, 2 * v + 1, 1);
  for (const auto& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, inf);
    net.add_arc(2 * e.v + 1, 2 * e.u, inf);
  }
  for (Vertex v : sorted_unique(z1)) net.add_arc(s, 2 * v, inf);
  for (Vertex v : sorted_unique(z2)) net.add_arc(2 * v + 1, t, inf);
  net.max_flow(s, t, inf);
  auto seen = net.reachable(s);

  VertexSeparation out;
  for (Vertex v = 0; v < n; ++v) {
    bool in_reached = seen[2 * v];
    bool out_reached = seen[2 * v + 1];
    if (in_reached) out.x1.push_back(v);
    if (!out_reached) out.x2.push_back(v);
    if (in_reached && !out_reached) out.separator.push_back(v);
  }

  // Unit vertex capacities make every flow path from s simple. Each path
  // crosses the minimum cut exactly once, at a separator vertex.
  const int nodes = 2 * n + 2;
  std::vector<std::vector<std::pair<int, int>>> flow_out(nodes);  // (head, units)
  for (int x = 0; x < nodes; ++x) {
    for (int a : net.arcs_from(x)) {
      if ((a & 1) == 0 && net.residual(a ^ 1) > 0) flow_out[x].push_back({net.head(a), net.residual(a ^ 1)});
    }
  }
  std::vector<int> separator_index(n, -1);
  for (std::size_t i = 0; i < out.separator.size(); ++i)
    separator_index[out.separator[i]] = static_cast<int>(i);
  out.paths.assign(out.separator.size(), {});
  for (std::size_t found = 0; found < out.separator.size(); ++found) {
    std::vector<Vertex> path;
    int x = s;
    while (x != t) {
      auto it = std::find_if(flow_out[x].begin(), flow_out[x].end(),
                             [](const auto& arc) { return arc.second > 0; });
      if (it == flow_out[x].end()) throw std::logic_error("flow decomposition failed");
      --it->second;
      x = it->first;
      if (x < 2 * n && (x & 1) == 0) path.push_back(x / 2);
    }
    int owner = -1;
    for (Vertex v : path)
      if (separator_index[v] >= 0) owner = separator_index[v];
    if (owner < 0 || !out.paths[owner].empty()) throw std::logic_error("flow path misses the separator");
    out.paths[owner] = std::move(path);
  }
  return out;
}

EdgeCut global_min_2cut(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw InvalidInput("global_min_2cut needs at least two vertices");
  if (g.is_multi()) {
    std::int64_t best = -1;
    std::vector<char> best_side;
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    for (Vertex sink = 1; sink < n; ++sink) {
      Dinic<std::int64_t> net(n);
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        net.add_arc(g.edge(e).u, g.edge(e).v, g.multiplicity(e), g.multiplicity(e));
      std::int64_t value = net.max_flow(0, sink, inf);
      if (best < 0 || value < best) {
        best = value;
        best_side = net.reachable(0);
      }
    }
    return cut_from_side(g, best_side);
  }
  Rational best = -1;
  std::vector<char> best_side;
  Rational inf = g.total_weight() + 1;
  for (Vertex sink = 1; sink < n; ++sink) {
    Dinic<Rational> net(n);
    for (const auto& e : g.edges()) net.add_arc(e.u, e.v, e.weight, e.weight);
    Rational value = net.max_flow(0, sink, inf);
    if (best < 0 || value < best) {
      best = value;
      best_side = net.reachable(0);
    }
  }
  return cut_from_side(g, best_side);
}

}  // namespace kcut
