#include "kcut/kcut_dp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "kcut/error.hpp"
#include "kcut/graph_ops.hpp"
#include "kcut/splitters.hpp"

namespace kcut {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return std::min(kSaturated, a * b);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return std::min(kSaturated, a + b); }

std::vector<int> canonical_labels(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  std::map<int, int> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = seen.emplace(labels[i], static_cast<int>(seen.size()));
    out[i] = it->second;
  }
  return out;
}

// Restriction of an RGS to the given positions, renumbered.
Rgs restrict_rgs(const Rgs& r, const std::vector<int>& positions) {
  Rgs out(positions.size());
  std::uint8_t map[256];
  std::fill(std::begin(map), std::end(map), 0xff);
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    std::uint8_t label = r[positions[i]];
    if (map[label] == 0xff) map[label] = next++;
    out[i] = map[label];
  }
  return out;
}

struct LocalEdge {
  int a;
  int b;
  std::int64_t w;
};

}  // namespace

struct DpInstance::Impl {
  struct NodeInfo {
    Bag bag;
    std::vector<int> position;  // vertex -> bag position or -1
    std::vector<LocalEdge> edges;
    std::vector<int> adhesion;  // positions of A_t
    std::vector<NodeId> children;
    std::vector<std::vector<int>> child_adhesion;  // positions in this bag
    std::vector<std::vector<LocalEdge>> child_adhesion_edges;  // indices into child_adhesion[c]
  };

  std::vector<NodeInfo> nodes;
  std::vector<std::optional<ProjectedTree>> bag_projection;
  std::vector<std::optional<std::vector<Rgs>>> adhesion_family;
  std::vector<std::optional<std::unordered_set<Rgs, RgsHash>>> adhesion_set;
  std::vector<std::shared_ptr<const SubsetFamily>> guesses;
};

DpParams dp_params(int k, std::int64_t s, const DpOptions& options) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (s < 0) throw InvalidInput("s must be nonnegative");
  DpParams p;
  p.k = k;
  p.s = s;
  const auto kk = static_cast<std::uint64_t>(k);
  const auto s1 = static_cast<std::uint64_t>(s) + 1;
  std::uint64_t pow5 = 1;
  for (int i = 0; i < 5; ++i) pow5 = sat_mul(pow5, s1);
  const std::uint64_t tau = sat_mul(2 * kk, pow5);
  p.small_bag_threshold = options.small_bag_threshold > 0
                              ? options.small_bag_threshold
                              : static_cast<std::int64_t>(std::min<std::uint64_t>(tau, kSaturated));
  p.guess_s1 = 2 * kk - 2;
  p.guess_s2 = sat_mul(2 * (2 * kk - 1), sat_add(tau, 2 * kk - 2));
  p.nice_s1 = 2 * kk - 1;
  const auto ss = static_cast<std::uint64_t>(s);
  p.nice_s2 = sat_mul(2 * kk - 1, sat_add(sat_add(sat_mul(ss, ss), 2 * ss), kk));
  return p;
}

Partition NiceDecomposition::outer_partition(const Bag& bag) const { return Partition::from_labels(bag, outer); }

Partition NiceDecomposition::inner_partition(const Bag& bag) const { return Partition::from_labels(bag, inner); }

std::vector<Vertex> NiceDecomposition::center_set(const Bag& bag) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < bag.size(); ++i)
    if (outer[i] == center) out.push_back(bag[i]);
  return out;
}

DpValue DpTable::value(const Rgs& key, int i) const {
  auto it = entries.find(key);
  if (it == entries.end() || i < 1 || i >= static_cast<int>(it->second.value.size())) return kInfinity;
  return it->second.value[i];
}

DpInstance::DpInstance(const MultiGraph& g, int k, std::int64_t s, const TreeDecomposition& td,
                       const SpanningTree& tree, const DpOptions& options)
    : g_(g), td_(td), tree_(tree), params_(dp_params(k, s, options)), impl_(std::make_unique<Impl>()) {
  if (!g.is_multi()) throw InvalidInput("the exact DP needs a multi-mode graph");
  const int size = static_cast<int>(td.size());
  const Vertex n = g.vertex_count();
  impl_->nodes.resize(size);
  impl_->bag_projection.resize(size);
  impl_->adhesion_family.resize(size);
  impl_->adhesion_set.resize(size);
  impl_->guesses.resize(size);
  for (NodeId t = 0; t < size; ++t) {
    auto& info = impl_->nodes[t];
    info.bag = td.bag(t);
    info.position.assign(n, -1);
    for (std::size_t i = 0; i < info.bag.size(); ++i) info.position[info.bag[i]] = static_cast<int>(i);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      int a = info.position[edge.u], b = info.position[edge.v];
      if (a >= 0 && b >= 0) info.edges.push_back({a, b, g.multiplicity(e)});
    }
    for (Vertex v : td.adhesion(t)) info.adhesion.push_back(info.position[v]);
    info.children = td.children(t);
  }
  for (NodeId t = 0; t < size; ++t) {
    auto& info = impl_->nodes[t];
    for (NodeId c : info.children) {
      Bag a = td.adhesion(c);
      if (a.empty()) throw std::logic_error("child with empty adhesion: G_t is disconnected");
      std::vector<int> pos;
      std::vector<int> local(n, -1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        pos.push_back(info.position[a[i]]);
        local[a[i]] = static_cast<int>(i);
      }
      std::vector<LocalEdge> edges;
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        if (local[edge.u] >= 0 && local[edge.v] >= 0) edges.push_back({local[edge.u], local[edge.v], g.multiplicity(e)});
      }
      info.child_adhesion.push_back(std::move(pos));
      info.child_adhesion_edges.push_back(std::move(edges));
    }
  }
}

DpInstance::~DpInstance() = default;

const ProjectedTree& DpInstance::bag_projection(NodeId t) {
  auto& slot = impl_->bag_projection[t];
  if (!slot) slot = project_tree(tree_, g_.vertex_count(), td_.bag(t));
  return *slot;
}

const std::vector<Rgs>& DpInstance::adhesion_family(NodeId t) {
  auto& slot = impl_->adhesion_family[t];
  if (!slot) {
    if (td_.parent(t) < 0) slot = std::vector<Rgs>{Rgs{}};
    else slot = feasible_family_rgs(project_tree(tree_, g_.vertex_count(), td_.adhesion(t)), params_.k);
  }
  return *slot;
}

const std::unordered_set<Rgs, RgsHash>& DpInstance::adhesion_family_set(NodeId t) {
  auto& slot = impl_->adhesion_set[t];
  if (!slot) {
    const auto& family = adhesion_family(t);
    slot.emplace(family.begin(), family.end());
  }
  return *slot;
}

const std::vector<std::vector<std::uint32_t>>& DpInstance::guesses(NodeId t) {
  auto& slot = impl_->guesses[t];
  if (!slot) slot = covering_family(bag_projection(t).edges.size(), params_.guess_s1, params_.guess_s2);
  return slot->sets;
}

std::optional<std::string> check_nice_decomposition(const MultiGraph& g, const TreeDecomposition& td, NodeId t,
                                                    const NiceDecomposition& d, int k) {
  const Bag& bag = td.bag(t);
  const std::size_t b = bag.size();
  if (d.outer.size() != b || d.inner.size() != b) return "label vectors do not match the bag";
  // Q refines P'.
  std::map<int, int> outer_of_inner;
  for (std::size_t i = 0; i < b; ++i) {
    auto [it, fresh] = outer_of_inner.emplace(d.inner[i], d.outer[i]);
    if (!fresh && it->second != d.outer[i]) return "inner partition does not refine the outer one";
  }
  std::set<int> outer_labels(d.outer.begin(), d.outer.end());
  if (d.center >= 0) {
    if (!outer_labels.count(d.center)) return "center is not an outer part";
    std::set<int> inner_in_center;
    for (std::size_t i = 0; i < b; ++i)
      if (d.outer[i] == d.center) inner_in_center.insert(d.inner[i]);
    if (inner_in_center.size() != 1) return "(i) the center is refined";
  } else if (outer_labels.size() > 1) {
    return "(i) empty center with more than one outer part";
  }
  std::map<int, std::set<int>> inner_per_outer;
  for (std::size_t i = 0; i < b; ++i)
    if (d.outer[i] != d.center) inner_per_outer[d.outer[i]].insert(d.inner[i]);
  for (const auto& [label, inner] : inner_per_outer)
    if (static_cast<int>(inner.size()) > 2 * k - 1) return "(ii) too many inner parts in an outer part";
  auto label_of = [&](Vertex v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    return (it == bag.end() || *it != v) ? -2 : d.outer[it - bag.begin()];
  };
  for (const auto& e : g.edges()) {
    int a = label_of(e.u), c = label_of(e.v);
    if (a < 0 || c < 0 || a == c || a == d.center || c == d.center) continue;
    return "(iii) edge between two non-center parts";
  }
  std::vector<Bag> adhesions{td.adhesion(t)};
  for (NodeId c : td.children(t)) adhesions.push_back(td.adhesion(c));
  for (const auto& a : adhesions) {
    std::set<int> met;
    for (Vertex v : a) {
      int label = label_of(v);
      if (label >= 0 && label != d.center) met.insert(label);
    }
    if (met.size() > 1) return "(iv) an adhesion meets two non-center parts";
  }
  return std::nullopt;
}

std::vector<NiceDecomposition> nice_decompositions(DpInstance& inst, NodeId t,
                                                   const std::vector<std::uint32_t>& guess) {
  const auto& info = inst.impl().nodes[t];
  const ProjectedTree& pt = inst.bag_projection(t);
  const DpParams& params = inst.params();
  const int k = params.k;
  const std::size_t nv = pt.vertices.size();
  const std::size_t b = info.bag.size();

  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(pt.vertices.begin(), pt.vertices.end(), v) - pt.vertices.begin());
  };
  // R: components of the projected tree without the guessed edges.
  UnionFind uf(nv);
  std::vector<char> cut(pt.edges.size(), 0);
  for (auto e : guess) cut[e] = 1;
  for (std::size_t e = 0; e < pt.edges.size(); ++e)
    if (!cut[e]) uf.unite(index_of(pt.edges[e].first), index_of(pt.edges[e].second));
  std::vector<int> comp(nv);
  std::map<std::size_t, int> root_label;
  for (std::size_t i = 0; i < nv; ++i) {
    auto [it, fresh] = root_label.emplace(uf.find(i), static_cast<int>(root_label.size()));
    comp[i] = it->second;
  }
  const int parts = static_cast<int>(root_label.size());
  std::vector<int> part_at(b);
  for (std::size_t i = 0; i < b; ++i) part_at[i] = comp[index_of(info.bag[i])];

  if (static_cast<std::int64_t>(b) <= params.small_bag_threshold) {
    if (parts > 2 * k - 1) return {};
    NiceDecomposition d;
    d.outer.assign(b, 0);
    d.inner = canonical_labels(part_at);
    return {d};
  }

  // Parts adjacent through a cross edge or a shared adhesion.
  std::vector<std::vector<char>> adjacent(parts, std::vector<char>(parts, 0));
  for (const auto& e : info.edges) {
    int a = part_at[e.a], c = part_at[e.b];
    if (a != c) adjacent[a][c] = adjacent[c][a] = 1;
  }
  std::vector<const std::vector<int>*> adhesions{&info.adhesion};
  for (const auto& a : info.child_adhesion) adhesions.push_back(&a);
  for (const auto* a : adhesions) {
    std::set<int> met;
    for (int pos : *a) met.insert(part_at[pos]);
    for (int x : met)
      for (int y : met)
        if (x != y) adjacent[x][y] = 1;
  }

  auto family = covering_family(static_cast<std::size_t>(parts), params.nice_s1, params.nice_s2);
  std::set<NiceDecomposition> out;
  for (const auto& x : family->sets) {
    std::vector<char> in_x(parts, 0);
    for (auto p : x) in_x[p] = 1;
    UnionFind groups(parts);
    for (auto p : x)
      for (auto q : x)
        if (adjacent[p][q]) groups.unite(p, q);
    std::vector<int> group_size(parts, 0);
    for (auto p : x) ++group_size[groups.find(p)];
    // Label `parts` marks the center O'.
    std::vector<int> inner_of(parts), outer_of(parts);
    for (int p = 0; p < parts; ++p) {
      bool center = !in_x[p] || group_size[groups.find(p)] > 2 * k - 1;
      inner_of[p] = center ? parts : p;
      outer_of[p] = center ? parts : static_cast<int>(groups.find(p));
    }
    std::vector<int> inner(b), outer(b);
    bool center_seen = false;
    for (std::size_t i = 0; i < b; ++i) {
      inner[i] = inner_of[part_at[i]];
      outer[i] = outer_of[part_at[i]];
      if (outer[i] == parts) center_seen = true;
    }
    if (!center_seen) continue;
    NiceDecomposition d;
    d.inner = canonical_labels(inner);
    d.outer = canonical_labels(outer);
    for (std::size_t i = 0; i < b; ++i)
      if (outer[i] == parts) {
        d.center = d.outer[i];
        break;
      }
    if (auto err = check_nice_decomposition(inst.graph(), inst.decomposition(), t, d, k))
      throw std::logic_error("constructed triple is not a nice decomposition: " + *err);
    out.insert(std::move(d));
  }
  return {out.begin(), out.end()};
}

namespace {

// Runs the knapsack DP for nice decompositions at one node, sharing the
// per-group nu tables between them.
class NodeEvaluator {
 public:
  NodeEvaluator(DpInstance& inst, NodeId t, const std::vector<DpTable>& tables)
      : inst_(inst), t_(t), tables_(tables), info_(inst.impl().nodes[t]), k_(inst.params().k), s_(inst.params().s) {}

  // Lowers every entry of `table` that this decomposition improves.
  void evaluate(const NiceDecomposition& d, DpTable& table);

 private:
  struct Group {
    std::vector<int> positions;  // sorted bag positions of O ∪ P_l
    std::vector<int> local;      // bag position -> index in positions, or -1
    std::vector<int> children;   // indices into info_.children
    bool key_bound = false;
    Rgs inner;
    int id = 0;
  };

  struct Nu {
    std::vector<DpValue> value;
    std::vector<Rgs> child_keys;
    std::vector<int> child_key_parts;
    std::vector<std::vector<int>> choice;  // [child][r] -> r'
  };

  struct Best {
    std::vector<DpValue> value;
    std::vector<int> arg;  // index into candidates
  };

  const Nu& nu(const Group& g, const Rgs& r);
  int group_id(const Group& g);

  DpInstance& inst_;
  NodeId t_;
  const std::vector<DpTable>& tables_;
  const DpInstance::Impl::NodeInfo& info_;
  int k_;
  std::int64_t s_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> group_ids_;
  std::unordered_map<Rgs, Nu, RgsHash> memo_;
};

int NodeEvaluator::group_id(const Group& g) {
  auto key = std::make_pair(g.positions, g.children);
  auto [it, fresh] = group_ids_.emplace(std::move(key), static_cast<int>(group_ids_.size()));
  return it->second;
}

const NodeEvaluator::Nu& NodeEvaluator::nu(const Group& g, const Rgs& r) {
  Rgs key(r.size() + 4);
  for (int i = 0; i < 4; ++i) key[i] = static_cast<std::uint8_t>((g.id >> (8 * i)) & 0xff);
  std::copy(r.begin(), r.end(), key.begin() + 4);
  auto found = memo_.find(key);
  if (found != memo_.end()) return found->second;

  Nu out;
  std::vector<DpValue> cur(k_ + 1, kInfinity);
  const int parts = rgs_part_count(r);
  std::int64_t w = 0;
  for (const auto& e : info_.edges) {
    int a = g.local[e.a], b = g.local[e.b];
    if (a >= 0 && b >= 0 && r[a] != r[b]) w += e.w;
  }
  if (parts <= k_ && w <= s_) cur[parts] = w;
  for (int ci : g.children) {
    const auto& adhesion = info_.child_adhesion[ci];
    std::vector<int> at;
    at.reserve(adhesion.size());
    for (int pos : adhesion) at.push_back(g.local[pos]);
    Rgs key_a = restrict_rgs(r, at);
    const int parts_a = rgs_part_count(key_a);
    std::int64_t w_a = 0;
    for (const auto& e : info_.child_adhesion_edges[ci])
      if (key_a[e.a] != key_a[e.b]) w_a += e.w;
    std::vector<DpValue> next(k_ + 1, kInfinity);
    std::vector<int> choice(k_ + 1, -1);
    const DpTable& child = tables_[info_.children[ci]];
    auto entry = child.entries.find(key_a);
    if (entry != child.entries.end()) {
      const auto& f = entry->second.value;
      for (int rr = 1; rr <= k_; ++rr) {
        for (int rp = 1; rp <= rr; ++rp) {
          if (cur[rp] == kInfinity) continue;
          int x = rr - rp + parts_a;
          if (x < 1 || x > k_ || f[x] == kInfinity) continue;
          DpValue total = cur[rp] + (f[x] - w_a);
          if (total <= s_ && total < next[rr]) {
            next[rr] = total;
            choice[rr] = rp;
          }
        }
      }
    }
    out.child_keys.push_back(std::move(key_a));
    out.child_key_parts.push_back(parts_a);
    out.choice.push_back(std::move(choice));
    cur = std::move(next);
  }
  out.value = std::move(cur);
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

void NodeEvaluator::evaluate(const NiceDecomposition& d, DpTable& table) {
  const std::size_t b = info_.bag.size();
  const int outer_parts = d.outer.empty() ? 0 : *std::max_element(d.outer.begin(), d.outer.end()) + 1;
  std::vector<int> center_pos;
  std::vector<int> order;  // outer labels of P_1..P_p
  for (int label = 0; label < outer_parts; ++label)
    if (label != d.center) order.push_back(label);
  for (std::size_t i = 0; i < b; ++i)
    if (d.outer[i] == d.center) center_pos.push_back(static_cast<int>(i));
  const bool has_center = d.center >= 0;
  if (!has_center && outer_parts != 1) throw std::logic_error("empty center with several outer parts");

  // groups[0] is O (unused without a center), groups[l] is O ∪ P_l.
  const int p = static_cast<int>(order.size());
  std::vector<Group> groups(p + 1);
  std::vector<int> group_of_label(outer_parts, -1);
  for (int l = 1; l <= p; ++l) group_of_label[order[l - 1]] = l;
  for (int l = 0; l <= p; ++l) {
    auto& g = groups[l];
    for (std::size_t i = 0; i < b; ++i)
      if (d.outer[i] == d.center || (l > 0 && d.outer[i] == order[l - 1])) g.positions.push_back(static_cast<int>(i));
  }
  auto home = [&](const std::vector<int>& positions) {
    int found = 0;
    for (int pos : positions) {
      int label = d.outer[pos];
      if (label == d.center) continue;
      int l = group_of_label[label];
      if (found != 0 && found != l) throw std::logic_error("adhesion meets two non-center parts");
      found = l;
    }
    return found;
  };
  for (std::size_t ci = 0; ci < info_.child_adhesion.size(); ++ci)
    groups[home(info_.child_adhesion[ci])].children.push_back(static_cast<int>(ci));
  const int key_home = home(info_.adhesion);
  const int first = has_center ? 0 : 1;
  for (int l = first; l <= p; ++l) {
    auto& g = groups[l];
    g.key_bound = key_home == 0 || key_home == l;
    g.local.assign(b, -1);
    for (std::size_t i = 0; i < g.positions.size(); ++i) g.local[g.positions[i]] = static_cast<int>(i);
    std::vector<int> inner;
    for (int pos : g.positions) inner.push_back(d.inner[pos]);
    inner = canonical_labels(inner);
    g.inner.assign(inner.begin(), inner.end());
    g.id = group_id(g);
  }

  // h per group, keyed by the projection onto A_t when the group holds A_t.
  std::vector<std::vector<Rgs>> candidates(p + 1);
  std::vector<Best> free_best(p + 1);
  std::vector<std::unordered_map<Rgs, Best, RgsHash>> keyed_best(p + 1);
  for (int l = first; l <= p; ++l) {
    const Group& g = groups[l];
    std::vector<int> key_at;
    for (int pos : info_.adhesion) key_at.push_back(g.local[pos]);
    free_best[l] = Best{std::vector<DpValue>(k_ + 1, kInfinity), std::vector<int>(k_ + 1, -1)};
    for_each_coarsening(g.inner, k_, [&](const Rgs& r) {
      const Nu& n = nu(g, r);
      Best* best = &free_best[l];
      if (g.key_bound) {
        Rgs key = restrict_rgs(r, key_at);
        if (!table.entries.count(key)) return;
        auto [it, fresh] = keyed_best[l].try_emplace(
            std::move(key), Best{std::vector<DpValue>(k_ + 1, kInfinity), std::vector<int>(k_ + 1, -1)});
        best = &it->second;
      }
      int index = -1;
      for (int j = 1; j <= k_; ++j) {
        if (n.value[j] < best->value[j]) {
          if (index < 0) {
            index = static_cast<int>(candidates[l].size());
            candidates[l].push_back(r);
          }
          best->value[j] = n.value[j];
          best->arg[j] = index;
        }
      }
    });
  }

  for (auto& [key, entry] : table.entries) {
    std::vector<const Best*> h(p + 1, nullptr);
    bool dead = false;
    for (int l = first; l <= p; ++l) {
      if (groups[l].key_bound) {
        auto it = keyed_best[l].find(key);
        if (it == keyed_best[l].end()) {
          dead = true;
          break;
        }
        h[l] = &it->second;
      } else {
        h[l] = &free_best[l];
      }
    }
    if (dead) continue;
    // g over groups; split[l][j] is the part count kept by g(l-1, .).
    std::vector<std::vector<DpValue>> gv(p + 1, std::vector<DpValue>(k_ + 1, kInfinity));
    std::vector<std::vector<int>> split(p + 1, std::vector<int>(k_ + 1, -1));
    gv[first] = h[first]->value;
    for (int l = first + 1; l <= p; ++l) {
      for (int j = 1; j <= k_; ++j)
        for (int jp = 1; jp <= j; ++jp) {
          DpValue a = gv[l - 1][jp], c = h[l]->value[j - jp + 1];
          if (a == kInfinity || c == kInfinity || a + c > s_) continue;
          if (a + c < gv[l][j]) {
            gv[l][j] = a + c;
            split[l][j] = jp;
          }
        }
    }
    for (int i = 1; i <= k_; ++i) {
      DpValue v = gv[p][i];
      if (v == kInfinity || v >= entry.value[i]) continue;
      entry.value[i] = v;
      StateTrace trace;
      int j = i;
      for (int l = p; l >= first; --l) {
        int jl = j;
        if (l > first) {
          int jp = split[l][j];
          jl = j - jp + 1;
          j = jp;
        }
        const Group& g = groups[l];
        const Rgs& r = candidates[l][h[l]->arg[jl]];
        const Nu& n = nu(g, r);
        GroupChoice choice;
        for (int pos : g.positions) choice.vertices.push_back(info_.bag[pos]);
        choice.partition = r;
        int rr = jl;
        for (int a = static_cast<int>(g.children.size()) - 1; a >= 0; --a) {
          int rp = n.choice[a][rr];
          choice.children.push_back(info_.children[g.children[a]]);
          choice.child_keys.push_back(n.child_keys[a]);
          choice.child_parts.push_back(rr - rp + n.child_key_parts[a]);
          rr = rp;
        }
        trace.groups.push_back(std::move(choice));
      }
      entry.trace[i] = std::move(trace);
    }
  }
}

DpTable empty_table(DpInstance& inst, NodeId t, const std::vector<Rgs>& keys) {
  DpTable table;
  table.node = t;
  table.adhesion = inst.decomposition().adhesion(t);
  const int k = inst.params().k;
  for (const auto& key : keys)
    table.entries.emplace(key, DpEntry{std::vector<DpValue>(k + 1, kInfinity), std::vector<StateTrace>(k + 1)});
  return table;
}

Rgs key_rgs(const Partition& key) {
  if (key.empty_ground()) return {};
  auto labels = key.labels();
  return canonical_rgs(labels);
}

void fill_table(DpInstance& inst, NodeId t, const std::vector<DpTable>& tables, DpTable& table) {
  std::set<NiceDecomposition> all;
  for (const auto& guess : inst.guesses(t))
    for (auto& d : nice_decompositions(inst, t, guess)) all.insert(std::move(d));
  NodeEvaluator eval(inst, t, tables);
  for (const auto& d : all) eval.evaluate(d, table);
}

}  // namespace

DpValue knapsack_value(DpInstance& inst, NodeId t, const NiceDecomposition& d, const Partition& key, int i,
                       const std::vector<DpTable>& tables, StateTrace* trace) {
  DpTable table = empty_table(inst, t, {key_rgs(key)});
  NodeEvaluator(inst, t, tables).evaluate(d, table);
  const auto& entry = table.entries.begin()->second;
  if (trace && entry.value[i] != kInfinity) *trace = entry.trace[i];
  return entry.value[i];
}

DpValue cut_guess_value(DpInstance& inst, NodeId t, const Partition& key, int i,
                        const std::vector<std::uint32_t>& guess, const std::vector<DpTable>& tables) {
  DpTable table = empty_table(inst, t, {key_rgs(key)});
  NodeEvaluator eval(inst, t, tables);
  for (const auto& d : nice_decompositions(inst, t, guess)) eval.evaluate(d, table);
  return table.entries.begin()->second.value[i];
}

DpValue compute_state(DpInstance& inst, NodeId t, const Partition& key, int i, const std::vector<DpTable>& tables) {
  Rgs k = key_rgs(key);
  if (!inst.adhesion_family_set(t).count(k)) throw InvalidInput("key is not a T-feasible partition of the adhesion");
  DpTable table = empty_table(inst, t, {k});
  fill_table(inst, t, tables, table);
  return table.entries.begin()->second.value[i];
}

DpTable compute_table(DpInstance& inst, NodeId t, const std::vector<DpTable>& tables) {
  DpTable table = empty_table(inst, t, inst.adhesion_family(t));
  fill_table(inst, t, tables, table);
  return table;
}

std::vector<DpTable> run_dp(DpInstance& inst) {
  const auto& td = inst.decomposition();
  std::vector<DpTable> tables(td.size());
  const auto& order = td.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) tables[*it] = compute_table(inst, *it, tables);
  return tables;
}

Partition reconstruct(const DpInstance& inst, const std::vector<DpTable>& tables, int parts) {
  const MultiGraph& g = inst.graph();
  const auto& td = inst.decomposition();
  UnionFind uf(g.vertex_count());
  std::function<void(NodeId, const Rgs&, int)> visit = [&](NodeId t, const Rgs& key, int i) {
    auto it = tables[t].entries.find(key);
    if (it == tables[t].entries.end() || it->second.value[i] == kInfinity)
      throw std::logic_error("trace points at a missing DP state");
    for (const auto& group : it->second.trace[i].groups) {
      std::vector<Vertex> first(256, -1);
      for (std::size_t x = 0; x < group.vertices.size(); ++x) {
        auto label = group.partition[x];
        if (first[label] < 0) first[label] = group.vertices[x];
        else uf.unite(first[label], group.vertices[x]);
      }
      for (std::size_t c = 0; c < group.children.size(); ++c)
        visit(group.children[c], group.child_keys[c], group.child_parts[c]);
    }
  };
  visit(td.root(), Rgs{}, parts);
  std::vector<Vertex> ground(g.vertex_count());
  std::vector<int> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ground[v] = v;
    labels[v] = static_cast<int>(uf.find(v));
  }
  return Partition::from_labels(ground, labels);
}

ExactResult solve_exact(const MultiGraph& g, int k, std::int64_t s, const std::vector<SpanningTree>& trees,
                        const ExactOptions& options) {
  if (!g.is_multi()) throw InvalidInput("the exact solver needs a multi-mode graph");
  if (g.vertex_count() == 0) throw InvalidInput("empty graph");
  if (s < 0) throw InvalidInput("s must be nonnegative");
  if (!is_connected(g)) throw InvalidInput("the exact solver needs a connected graph");
  TreeDecomposition td = build_unbreakable_decomposition(g, s);
  return solve_exact(g, k, s, td, trees, options);
}

ExactResult solve_exact(const MultiGraph& g, int k, std::int64_t s, const TreeDecomposition& td,
                        const std::vector<SpanningTree>& trees, const ExactOptions& options) {
  if (!g.is_multi()) throw InvalidInput("the exact solver needs a multi-mode graph");
  if (k < 1 || k > g.vertex_count()) throw InvalidInput("k must lie in 1..n");
  if (s < 0) throw InvalidInput("s must be nonnegative");
  if (!is_connected(g)) throw InvalidInput("the exact solver needs a connected graph");
  if (auto err = check_tree_decomposition(g, td)) throw InvalidInput("invalid tree decomposition: " + *err);
  ExactResult result;
  result.decomposition_nodes = td.size();
  for (const auto& tree : trees) {
    if (!is_spanning_tree(tree, g.vertex_count())) throw InvalidInput("tree family member is not a spanning tree");
    DpInstance inst(g, k, s, td, tree, options.dp);
    auto tables = run_dp(inst);
    ++result.trees_evaluated;
    for (const auto& table : tables) result.dp_entries += table.entries.size();
    DpValue v = tables[td.root()].value(Rgs{}, k);
    if (v < result.value) {
      result.value = v;
      if (options.mode == SolveMode::construct) {
        Partition p = reconstruct(inst, tables, k);
        if (static_cast<int>(p.size()) != k || multi_cut_weight(g, p) != v)
          throw std::logic_error("reconstructed partition disagrees with the DP value");
        result.partition = std::move(p);
      }
    }
    if (options.stop_at_first_yes && result.value <= s) break;
  }
  result.yes = result.value != kInfinity;
  return result;
}

}  // namespace kcut
