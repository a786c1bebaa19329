#include "kcut/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kcut/error.hpp"
#include "kcut/graph_ops.hpp"

namespace kcut {

namespace {

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> unite(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const std::vector<Vertex>& a, Vertex v) { return std::binary_search(a.begin(), a.end(), v); }

}  // namespace

TreeDecomposition::TreeDecomposition(std::vector<Bag> bags,
                                     std::vector<std::pair<NodeId, NodeId>> tree_edges, NodeId root)
    : bags_(std::move(bags)), edges_(std::move(tree_edges)), root_(root) {
  const int n = static_cast<int>(bags_.size());
  if (n == 0) throw std::logic_error("tree decomposition without nodes");
  if (static_cast<int>(edges_.size()) != n - 1) throw std::logic_error("decomposition tree edge count mismatch");
  for (auto& b : bags_) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::vector<std::vector<NodeId>> adj(n);
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& l : adj) std::sort(l.begin(), l.end());
  parent_.assign(n, -2);
  children_.assign(n, {});
  parent_[root_] = -1;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    preorder_.push_back(x);
    for (auto it = adj[x].rbegin(); it != adj[x].rend(); ++it) {
      NodeId y = *it;
      if (y == parent_[x]) continue;
      if (parent_[y] != -2) throw std::logic_error("decomposition tree has a cycle");
      parent_[y] = x;
      stack.push_back(y);
    }
  }
  for (NodeId x : preorder_)
    if (parent_[x] >= 0) children_[parent_[x]].push_back(x);
  if (static_cast<int>(preorder_.size()) != n) throw std::logic_error("decomposition tree is disconnected");
}

TreeDecomposition TreeDecomposition::single_bag(Vertex n) {
  Bag all(n);
  std::iota(all.begin(), all.end(), 0);
  return TreeDecomposition({all}, {}, 0);
}

Bag TreeDecomposition::adhesion(NodeId t) const {
  if (parent_[t] < 0) return {};
  return intersect(bags_[t], bags_[parent_[t]]);
}

Bag TreeDecomposition::gamma(NodeId t) const {
  Bag out;
  std::vector<NodeId> stack{t};
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    out.insert(out.end(), bags_[x].begin(), bags_[x].end());
    for (NodeId c : children_[x]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bag TreeDecomposition::alpha(NodeId t) const { return minus(gamma(t), adhesion(t)); }

TreeDecomposition TreeDecomposition::rerooted(NodeId new_root) const {
  return TreeDecomposition(bags_, edges_, new_root);
}

void TreeDecomposition::dump(std::ostream& out) const {
  std::vector<int> index(bags_.size());
  for (std::size_t i = 0; i < preorder_.size(); ++i) index[preorder_[i]] = static_cast<int>(i);
  for (NodeId t : preorder_) {
    out << index[t] << ' ' << (parent_[t] < 0 ? -1 : index[parent_[t]]);
    for (Vertex v : bags_[t]) out << ' ' << v;
    out << '\n';
  }
}

std::string TreeDecomposition::dump() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

std::optional<std::string> check_tree_decomposition(const MultiGraph& g, const TreeDecomposition& td) {
  const Vertex n = g.vertex_count();
  std::vector<std::vector<NodeId>> holders(n);
  for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t) {
    for (Vertex v : td.bag(t)) {
      if (v < 0 || v >= n) return "bag " + std::to_string(t) + " holds unknown vertex " + std::to_string(v);
      holders[v].push_back(t);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (holders[v].empty()) return "T1: vertex " + std::to_string(v) + " in no bag";
  for (const auto& e : g.edges()) {
    bool found = false;
    for (NodeId t : holders[e.u])
      if (contains(td.bag(t), e.v)) found = true;
    if (!found) return "T2: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in no bag";
  }
  // Nodes holding v form a subtree iff exactly one of them has its parent
  // outside the set.
  for (Vertex v = 0; v < n; ++v) {
    int tops = 0;
    for (NodeId t : holders[v]) {
      NodeId p = td.parent(t);
      if (p < 0 || !contains(td.bag(p), v)) ++tops;
    }
    if (tops != 1) return "T3: bags holding vertex " + std::to_string(v) + " are not connected";
  }
  return std::nullopt;
}

std::optional<std::string> check_compact(const MultiGraph& g, const TreeDecomposition& td) {
  auto adj = g.adjacency();
  for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t) {
    if (td.parent(t) < 0) continue;
    Bag a = td.adhesion(t);
    if (a.empty()) continue;
    Bag al = td.alpha(t);
    if (al.empty()) return "node " + std::to_string(t) + ": empty alpha with nonempty adhesion";
    // Connectivity of G[alpha] and its neighbourhood.
    std::vector<char> in_alpha(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (Vertex v : al) in_alpha[v] = 1;
    std::vector<Vertex> stack{al.front()};
    seen[al.front()] = 1;
    std::set<Vertex> neighbourhood;
    std::size_t reached = 0;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++reached;
      for (auto [y, e] : adj[x]) {
        if (!in_alpha[y]) {
          neighbourhood.insert(y);
        } else if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (reached != al.size()) return "node " + std::to_string(t) + ": G[alpha] disconnected";
    for (Vertex v : al)
      for (auto [y, e] : adj[v])
        if (!in_alpha[y]) neighbourhood.insert(y);
    if (Bag(neighbourhood.begin(), neighbourhood.end()) != a)
      return "node " + std::to_string(t) + ": N(alpha) differs from the adhesion";
  }
  return std::nullopt;
}

std::size_t max_adhesion(const TreeDecomposition& td) {
  std::size_t best = 0;
  for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t) best = std::max(best, td.adhesion(t).size());
  return best;
}

std::int64_t potential(const TreeDecomposition& td, std::int64_t s) {
  std::int64_t total = 0;
  for (const auto& b : td.bags()) total += std::max<std::int64_t>(0, static_cast<std::int64_t>(b.size()) - 2 * s - 1);
  return total;
}

std::optional<EdgeCut> find_breakability_witness(const MultiGraph& g, const std::vector<Vertex>& q_in,
                                                 std::int64_t s) {
  if (!g.is_multi()) throw InvalidInput("breakability search needs a multi-mode graph");
  if (!is_connected(g)) throw InvalidInput("breakability search needs a connected graph");
  std::vector<Vertex> q(q_in);
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  const std::int64_t need = s + 1;
  if (static_cast<std::int64_t>(q.size()) < 2 * need) return std::nullopt;
  if (to_int64(global_min_2cut(g).order) > s) return std::nullopt;  // no cut of order <= s at all

  const Vertex n = g.vertex_count();
  std::vector<char> terminal(n, 0);
  for (Vertex v : q) terminal[v] = 1;

  // BFS spanning tree from vertex 0.
  auto adj = g.adjacency();
  for (auto& l : adj) std::sort(l.begin(), l.end());
  std::vector<Vertex> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> bfs;
  bfs.push(0);
  seen[0] = 1;
  while (!bfs.empty()) {
    Vertex x = bfs.front();
    bfs.pop();
    order.push_back(x);
    for (auto [y, e] : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        bfs.push(y);
      }
    }
  }
  std::vector<std::vector<Vertex>> kids(n);
  for (Vertex v : order)
    if (parent[v] >= 0) kids[parent[v]].push_back(v);
  std::vector<std::int64_t> below(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    below[*it] += terminal[*it];
    if (parent[*it] >= 0) below[parent[*it]] += below[*it];
  }
  auto subtree = [&](Vertex root, std::vector<char>& mark) {
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      mark[x] = 1;
      for (Vertex c : kids[x]) stack.push_back(c);
    }
  };

  std::vector<std::vector<char>> family;
  for (Vertex v = 0; v < n; ++v) {
    if (below[v] >= need) {
      std::vector<char> mark(n, 0);
      subtree(v, mark);
      family.push_back(std::move(mark));
    }
  }
  const std::int64_t bundles = need;
  for (Vertex v = 0; v < n; ++v) {
    // Paths from v up to each ancestor u.
    std::vector<char> on_path(n, 0);
    std::int64_t count = 0;
    for (Vertex u = v; u >= 0; u = parent[u]) {
      on_path[u] = 1;
      count += terminal[u];
      if (count >= need) family.push_back(on_path);
      std::vector<Vertex> good;
      for (Vertex x = v;; x = parent[x]) {
        for (Vertex c : kids[x])
          if (!on_path[c] && below[c] >= 1) good.push_back(c);
        if (x == u) break;
      }
      if (static_cast<std::int64_t>(good.size()) >= need * need) {
        std::sort(good.begin(), good.end());
        std::size_t base = good.size() / bundles, extra = good.size() % bundles, at = 0;
        for (std::int64_t b = 0; b < bundles; ++b) {
          std::vector<char> mark = on_path;
          std::size_t take = base + (static_cast<std::size_t>(b) < extra ? 1 : 0);
          for (std::size_t i = 0; i < take; ++i) subtree(good[at++], mark);
          family.push_back(std::move(mark));
        }
      }
    }
  }

  // A cut separating supersets separates the subsets too, so only
  // inclusion-minimal members need to be paired.
  std::vector<std::vector<Vertex>> sets;
  for (const auto& mark : family) {
    std::vector<Vertex> s_set;
    for (Vertex v = 0; v < n; ++v)
      if (mark[v]) s_set.push_back(v);
    sets.push_back(std::move(s_set));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<Vertex>> minimal;
  for (const auto& c : sets) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (subset(m, c)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(c);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j)
      if (intersect(minimal[i], minimal[j]).empty()) pairs.push_back({i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return minimal[a.first].size() + minimal[a.second].size() <
           minimal[b.first].size() + minimal[b.second].size();
  });
  for (auto [i, j] : pairs) {
    FlowResult r = min_st_edge_cut(g, minimal[i], minimal[j]);
    if (r.value <= s) {
      auto on_a = intersect(r.cut.a, q).size();
      auto on_b = intersect(r.cut.b, q).size();
      if (static_cast<std::int64_t>(on_a) < need || static_cast<std::int64_t>(on_b) < need)
        throw std::logic_error("breakability witness with too few terminals");
      return r.cut;
    }
  }
  return std::nullopt;
}

LeanWitness witness_to_lean(const MultiGraph& g, const TreeDecomposition& td, NodeId t, const EdgeCut& cut,
                            std::int64_t s) {
  const Bag& bag = td.bag(t);
  auto side_a = intersect(bag, cut.a);
  auto side_b = intersect(bag, cut.b);
  const auto need = static_cast<std::size_t>(s + 1);
  if (side_a.size() < need || side_b.size() < need)
    throw InvalidInput("cut leaves fewer than s+1 bag vertices on a side");
  if (bag.size() <= 2 * static_cast<std::size_t>(s) + 1) throw InvalidInput("bag too small for a lean witness");
  LeanWitness w;
  w.node = t;
  w.z1.assign(side_a.begin(), side_a.begin() + need);
  w.z2.assign(side_b.begin(), side_b.begin() + need);
  w.separation = min_vertex_separator(g, w.z1, w.z2);
  const auto& sep = w.separation;
  if (sep.separator.size() >= w.z1.size()) throw std::logic_error("separation is not lean");
  if (!subset(w.z1, sep.x1) || !subset(w.z2, sep.x2)) throw std::logic_error("terminals outside their side");
  std::vector<char> used(g.vertex_count(), 0);
  for (std::size_t i = 0; i < sep.separator.size(); ++i) {
    const auto& path = sep.paths[i];
    if (std::find(path.begin(), path.end(), sep.separator[i]) == path.end())
      throw std::logic_error("path misses its separator vertex");
    for (Vertex v : path) {
      if (used[v]) throw std::logic_error("separator paths intersect");
      used[v] = 1;
    }
  }
  return w;
}

TreeDecomposition refine(const MultiGraph& g, const TreeDecomposition& td, const LeanWitness& w,
                         std::int64_t s) {
  const NodeId q = w.node;
  if (max_adhesion(td) > static_cast<std::size_t>(s)) throw InvalidInput("refine: adhesion exceeds s");
  if (td.bag(q).size() <= 2 * static_cast<std::size_t>(s) + 1) throw InvalidInput("refine: bag too small");
  if (w.z1.size() > static_cast<std::size_t>(s) + 1) throw InvalidInput("refine: terminal set too large");
  (void)g;

  const int size = static_cast<int>(td.size());
  const auto& x1 = w.separation.x1;
  const auto& x2 = w.separation.x2;
  std::vector<Bag> bags(2 * size);
  for (NodeId t = 0; t < size; ++t) {
    bags[t] = intersect(td.bag(t), x1);
    bags[t + size] = intersect(td.bag(t), x2);
  }

  // Paths from q: BFS parents in the decomposition tree.
  std::vector<std::vector<NodeId>> adj(size);
  for (auto [a, b] : td.tree_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<NodeId> from(size, -2), order;
  from[q] = -1;
  std::queue<NodeId> bfs;
  bfs.push(q);
  while (!bfs.empty()) {
    NodeId x = bfs.front();
    bfs.pop();
    order.push_back(x);
    for (NodeId y : adj[x])
      if (from[y] == -2) {
        from[y] = x;
        bfs.push(y);
      }
  }
  for (Vertex x : w.separation.separator) {
    if (contains(td.bag(q), x)) continue;
    NodeId tx = -1;
    for (NodeId t : order)
      if (contains(td.bag(t), x)) {
        tx = t;
        break;
      }
    for (NodeId t = from[tx]; t >= 0; t = from[t]) {
      for (NodeId copy : {t, t + size}) {
        auto& b = bags[copy];
        b.insert(std::upper_bound(b.begin(), b.end(), x), x);
      }
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (auto [a, b] : td.tree_edges()) {
    edges.push_back({a, b});
    edges.push_back({a + size, b + size});
  }
  edges.push_back({q, q + size});
  return TreeDecomposition(std::move(bags), std::move(edges), td.root());
}

TreeDecomposition cleanup(const TreeDecomposition& td) {
  const int size = static_cast<int>(td.size());
  std::vector<std::set<NodeId>> adj(size);
  for (auto [a, b] : td.tree_edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> alive(size, 1);
  NodeId root = td.root();
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId a = 0; a < size && !changed; ++a) {
      if (!alive[a]) continue;
      for (NodeId b : adj[a]) {
        // Drop a into b when a's bag is contained in b's.
        if (!subset(td.bag(a), td.bag(b))) continue;
        for (NodeId c : adj[a])
          if (c != b) {
            adj[c].erase(a);
            adj[c].insert(b);
            adj[b].insert(c);
          }
        adj[b].erase(a);
        adj[a].clear();
        alive[a] = 0;
        if (root == a) root = b;
        changed = true;
        break;
      }
    }
  }
  std::vector<NodeId> index(size, -1);
  std::vector<Bag> bags;
  for (NodeId t = 0; t < size; ++t)
    if (alive[t]) {
      index[t] = static_cast<NodeId>(bags.size());
      bags.push_back(td.bag(t));
    }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId a = 0; a < size; ++a)
    for (NodeId b : adj[a])
      if (a < b) edges.push_back({index[a], index[b]});
  return TreeDecomposition(std::move(bags), std::move(edges), index[root]);
}

namespace {

// Builds a compact decomposition top-down. build(t, C) receives a connected
// vertex set C with N(C) inside bag(t); its node takes C ∩ bag(t) plus N(C),
// and each component D of C ∩ alpha(child) becomes a subtree of its own.
class Compactifier {
 public:
  Compactifier(const MultiGraph& g, const TreeDecomposition& td) : g_(g), td_(td), adj_(g.adjacency()) {
    alpha_.resize(td.size());
    for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t) alpha_[t] = td.alpha(t);
  }

  TreeDecomposition run() {
    Partition comps = connected_components(g_);
    NodeId first = -1;
    for (const auto& c : comps.parts()) {
      NodeId x = build(td_.root(), c);
      if (first < 0) first = x;
      else edges_.push_back({first, x});
    }
    return TreeDecomposition(std::move(bags_), std::move(edges_), first);
  }

 private:
  NodeId build(NodeId t, const std::vector<Vertex>& c) {
    auto inside = intersect(c, td_.bag(t));
    if (inside.empty()) {
      for (NodeId child : td_.children(t))
        if (contains(alpha_[child], c.front())) return build(child, c);
      throw std::logic_error("compactify: component escapes the decomposition");
    }
    std::vector<char> in_c(g_.vertex_count(), 0);
    for (Vertex v : c) in_c[v] = 1;
    std::set<Vertex> boundary;
    for (Vertex v : c)
      for (auto [y, e] : adj_[v])
        if (!in_c[y]) boundary.insert(y);
    NodeId x = static_cast<NodeId>(bags_.size());
    bags_.push_back(unite(inside, Bag(boundary.begin(), boundary.end())));
    for (NodeId child : td_.children(t)) {
      auto rest = intersect(c, alpha_[child]);
      for (auto& d : components_of(rest)) edges_.push_back({x, build(child, d)});
    }
    return x;
  }

  std::vector<std::vector<Vertex>> components_of(const std::vector<Vertex>& set) {
    std::vector<char> in_set(g_.vertex_count(), 0), seen(g_.vertex_count(), 0);
    for (Vertex v : set) in_set[v] = 1;
    std::vector<std::vector<Vertex>> out;
    for (Vertex v : set) {
      if (seen[v]) continue;
      std::vector<Vertex> comp, stack{v};
      seen[v] = 1;
      while (!stack.empty()) {
        Vertex a = stack.back();
        stack.pop_back();
        comp.push_back(a);
        for (auto [b, e] : adj_[a])
          if (in_set[b] && !seen[b]) {
            seen[b] = 1;
            stack.push_back(b);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  const MultiGraph& g_;
  const TreeDecomposition& td_;
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj_;
  std::vector<Bag> alpha_;
  std::vector<Bag> bags_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

NodeId node_with_smallest_vertex(const TreeDecomposition& td) {
  NodeId best = 0;
  for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t) {
    const Bag& b = td.bag(t);
    const Bag& cur = td.bag(best);
    if (!b.empty() && (cur.empty() || b.front() < cur.front())) best = t;
  }
  return best;
}

void require_valid(const MultiGraph& g, const TreeDecomposition& td, const char* stage) {
  if (auto err = check_tree_decomposition(g, td)) throw std::logic_error(std::string(stage) + ": " + *err);
}

TreeDecomposition build_connected(const MultiGraph& g, std::int64_t s, DecompositionLog* log) {
  TreeDecomposition td = TreeDecomposition::single_bag(g.vertex_count());
  if (log) log->potentials.push_back(potential(td, s));
  bool breakable = g.vertex_count() >= 2 && to_int64(global_min_2cut(g).order) <= s;
  std::set<Bag> unbreakable;
  while (breakable) {
    bool refined = false;
    for (NodeId t = 0; t < static_cast<NodeId>(td.size()); ++t) {
      const Bag& bag = td.bag(t);
      if (static_cast<std::int64_t>(bag.size()) <= 2 * s + 1 || unbreakable.count(bag)) continue;
      if (log) ++log->witness_searches;
      auto cut = find_breakability_witness(g, bag, s);
      if (!cut) {
        unbreakable.insert(bag);
        continue;
      }
      LeanWitness w = witness_to_lean(g, td, t, *cut, s);
      std::int64_t before = potential(td, s);
      TreeDecomposition next = refine(g, td, w, s);
      require_valid(g, next, "refine");
      if (max_adhesion(next) > static_cast<std::size_t>(s)) throw std::logic_error("refine: adhesion exceeds s");
      std::int64_t after = potential(next, s);
      if (after >= before) throw std::logic_error("refine: potential did not decrease");
      td = cleanup(next);
      if (log) {
        ++log->refinements;
        log->potentials.push_back(after);
      }
      refined = true;
      break;
    }
    if (!refined) break;
  }
  td = cleanup(td);
  td = td.rerooted(node_with_smallest_vertex(td));
  return compactify(g, td);
}

}  // namespace

TreeDecomposition compactify(const MultiGraph& g, const TreeDecomposition& td) {
  TreeDecomposition out = cleanup(Compactifier(g, td).run());
  require_valid(g, out, "compactify");
  return out;
}

TreeDecomposition build_unbreakable_decomposition(const MultiGraph& g, std::int64_t s, DecompositionLog* log) {
  if (!g.is_multi()) throw InvalidInput("decomposition needs a multi-mode graph");
  if (s < 0) throw InvalidInput("s must be nonnegative");
  if (g.vertex_count() == 0) throw InvalidInput("empty graph");
  Partition comps = connected_components(g);
  if (comps.size() == 1) {
    TreeDecomposition td = build_connected(g, s, log);
    require_valid(g, td, "build");
    return td;
  }
  // Per component, then glued below the first component's root.
  std::vector<Bag> bags;
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId first_root = -1;
  std::vector<DecompositionLog> logs;
  for (const auto& members : comps.parts()) {
    logs.emplace_back();
    TreeDecomposition part = build_connected(g.induced(members), s, &logs.back());
    NodeId offset = static_cast<NodeId>(bags.size());
    for (const auto& b : part.bags()) {
      Bag mapped;
      for (Vertex v : b) mapped.push_back(members[v]);
      bags.push_back(std::move(mapped));
    }
    for (auto [a, b] : part.tree_edges()) edges.push_back({a + offset, b + offset});
    if (first_root < 0) first_root = part.root() + offset;
    else edges.push_back({first_root, part.root() + offset});
  }
  TreeDecomposition td(std::move(bags), std::move(edges), first_root);
  require_valid(g, td, "build");
  if (log) {
    // Potentials of the whole forest, refining one component at a time.
    std::int64_t total = 0;
    for (const auto& l : logs) total += l.potentials.front();
    log->potentials.push_back(total);
    for (const auto& l : logs) {
      for (std::size_t i = 1; i < l.potentials.size(); ++i) {
        total -= l.potentials[i - 1] - l.potentials[i];
        log->potentials.push_back(total);
      }
      log->refinements += l.refinements;
      log->witness_searches += l.witness_searches;
    }
  }
  return td;
}

}  // namespace kcut
