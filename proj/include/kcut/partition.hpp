#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

// A partition of a sorted vertex set. Parts are kept sorted internally and
// ordered by their smallest vertex, so equal partitions compare equal.
//
// The empty ground set has exactly one partition, P_empty, which carries a
// single empty part.
class Partition {
 public:
  Partition();  // P_empty

  static Partition from_parts(std::vector<std::vector<Vertex>> parts);
  static Partition from_labels(std::span<const Vertex> ground,
                               std::span<const int> labels);
  static Partition single(std::vector<Vertex> ground);

  const std::vector<Vertex>& ground() const { return ground_; }
  const std::vector<std::vector<Vertex>>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty_ground() const { return ground_.empty(); }

  // Index of the part containing v, or -1.
  int part_of(Vertex v) const;

  // Part index for each ground vertex, aligned with ground().
  std::vector<int> labels() const;

  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_ && ground_ == other.ground_; }
  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<Vertex> ground_;
  std::vector<std::vector<Vertex>> parts_;
};

Partition project(const Partition& p, std::span<const Vertex> s);
bool refines(const Partition& fine, const Partition& coarse);

// Restricted growth strings: label[i] is the part of the i-th element, and
// labels appear in first-occurrence order. Used as compact partition keys.
using Rgs = std::vector<std::uint8_t>;

Rgs canonical_rgs(std::span<const int> labels);
int rgs_part_count(const Rgs& r);

struct RgsHash {
  std::size_t operator()(const Rgs& r) const noexcept;
};

}  // namespace kcut
