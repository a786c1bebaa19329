#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kcut/decomposition.hpp"
#include "kcut/graph.hpp"
#include "kcut/partition.hpp"
#include "kcut/projection.hpp"
#include "kcut/tree_packing.hpp"

namespace kcut {

using DpValue = std::int64_t;
inline constexpr DpValue kInfinity = std::numeric_limits<DpValue>::max();

struct DpOptions {
  // Bags up to this size take the single-candidate branch of the nice
  // decomposition step. 0 selects 2k(s+1)^5.
  std::int64_t small_bag_threshold = 0;
};

struct DpParams {
  int k = 0;
  std::int64_t s = 0;
  std::int64_t small_bag_threshold = 0;
  std::uint64_t guess_s1 = 0;  // 2k-2
  std::uint64_t guess_s2 = 0;  // 2(2k-1)(tau + 2k-2), saturating
  std::uint64_t nice_s1 = 0;   // 2k-1
  std::uint64_t nice_s2 = 0;   // (2k-1)(s^2+2s+k), saturating
};

DpParams dp_params(int k, std::int64_t s, const DpOptions& options = {});

// (P', Q, O) over the positions of a bag. Labels are canonical; O is the
// outer part `center`, or absent when center < 0.
struct NiceDecomposition {
  std::vector<int> outer;
  std::vector<int> inner;
  int center = -1;

  Partition outer_partition(const Bag& bag) const;
  Partition inner_partition(const Bag& bag) const;
  std::vector<Vertex> center_set(const Bag& bag) const;

  auto operator<=>(const NiceDecomposition&) const = default;
};

struct GroupChoice {
  std::vector<Vertex> vertices;  // O ∪ P_l, sorted
  Rgs partition;                 // over `vertices`
  std::vector<NodeId> children;
  std::vector<Rgs> child_keys;
  std::vector<int> child_parts;
};

struct StateTrace {
  std::vector<GroupChoice> groups;
};

struct DpEntry {
  std::vector<DpValue> value;     // indexed by part count, [0] unused
  std::vector<StateTrace> trace;  // filled for finite values
};

struct DpTable {
  NodeId node = -1;
  Bag adhesion;
  std::unordered_map<Rgs, DpEntry, RgsHash> entries;

  DpValue value(const Rgs& key, int i) const;
};

// Bundles one (graph, k, s, decomposition, spanning tree) evaluation with
// per-node caches.
class DpInstance {
 public:
  DpInstance(const MultiGraph& g, int k, std::int64_t s, const TreeDecomposition& td,
             const SpanningTree& tree, const DpOptions& options = {});
  ~DpInstance();
  DpInstance(const DpInstance&) = delete;
  DpInstance& operator=(const DpInstance&) = delete;

  const MultiGraph& graph() const { return g_; }
  const TreeDecomposition& decomposition() const { return td_; }
  const SpanningTree& tree() const { return tree_; }
  const DpParams& params() const { return params_; }

  const ProjectedTree& bag_projection(NodeId t);
  // F^{A_t}_T as label strings over the sorted adhesion.
  const std::vector<Rgs>& adhesion_family(NodeId t);
  const std::unordered_set<Rgs, RgsHash>& adhesion_family_set(NodeId t);
  // Edge guesses C' as index sets into bag_projection(t).edges.
  const std::vector<std::vector<std::uint32_t>>& guesses(NodeId t);

  struct Impl;
  Impl& impl() { return *impl_; }

 private:
  const MultiGraph& g_;
  const TreeDecomposition& td_;
  const SpanningTree& tree_;
  DpParams params_;
  std::unique_ptr<Impl> impl_;
};

std::optional<std::string> check_nice_decomposition(const MultiGraph& g,
                                                    const TreeDecomposition& td, NodeId t,
                                                    const NiceDecomposition& d, int k);

std::vector<NiceDecomposition> nice_decompositions(DpInstance& inst, NodeId t,
                                                   const std::vector<std::uint32_t>& guess);

// `tables` is indexed by node id; entries for the children of t must be
// complete.
DpValue knapsack_value(DpInstance& inst, NodeId t, const NiceDecomposition& d,
                       const Partition& key, int i, const std::vector<DpTable>& tables,
                       StateTrace* trace = nullptr);

DpValue cut_guess_value(DpInstance& inst, NodeId t, const Partition& key, int i,
                        const std::vector<std::uint32_t>& guess,
                        const std::vector<DpTable>& tables);

DpValue compute_state(DpInstance& inst, NodeId t, const Partition& key, int i,
                      const std::vector<DpTable>& tables);

// Every key of F^{A_t}_T and every i in 1..k in one pass.
DpTable compute_table(DpInstance& inst, NodeId t, const std::vector<DpTable>& tables);

std::vector<DpTable> run_dp(DpInstance& inst);

// Follows the traces from f_root(P_empty, parts) and returns the partition.
Partition reconstruct(const DpInstance& inst, const std::vector<DpTable>& tables, int parts);

enum class SolveMode { decide, construct };

struct ExactOptions {
  SolveMode mode = SolveMode::construct;
  DpOptions dp;
  // Return at the first tree whose value is <= s instead of minimizing over
  // the whole family.
  bool stop_at_first_yes = false;
};

struct ExactResult {
  bool yes = false;
  DpValue value = kInfinity;
  std::optional<Partition> partition;
  std::size_t trees_evaluated = 0;
  std::size_t dp_entries = 0;
  std::size_t decomposition_nodes = 0;
};

ExactResult solve_exact(const MultiGraph& g, int k, std::int64_t s,
                        const std::vector<SpanningTree>& trees, const ExactOptions& options = {});

ExactResult solve_exact(const MultiGraph& g, int k, std::int64_t s, const TreeDecomposition& td,
                        const std::vector<SpanningTree>& trees, const ExactOptions& options = {});

}  // namespace kcut
