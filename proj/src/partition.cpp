#include "kcut/partition.hpp"

#include <algorithm>
#include <sstream>

#include "kcut/error.hpp"

namespace kcut {

Partition::Partition() : parts_{{}} {}

Partition Partition::from_parts(std::vector<std::vector<Vertex>> parts) {
  Partition p;
  p.parts_.clear();
  for (auto& part : parts) {
    if (part.empty()) {
      if (parts.size() == 1) return Partition();
      throw InvalidInput("partition has an empty part");
    }
    std::sort(part.begin(), part.end());
    p.ground_.insert(p.ground_.end(), part.begin(), part.end());
    p.parts_.push_back(std::move(part));
  }
  if (p.parts_.empty()) return Partition();
  std::sort(p.ground_.begin(), p.ground_.end());
  if (std::adjacent_find(p.ground_.begin(), p.ground_.end()) != p.ground_.end())
    throw InvalidInput("partition parts overlap");
  std::sort(p.parts_.begin(), p.parts_.end());
  return p;
}

Partition Partition::from_labels(std::span<const Vertex> ground, std::span<const int> labels) {
  if (ground.size() != labels.size()) throw InvalidInput("label count differs from ground size");
  if (ground.empty()) return Partition();
  int max_label = *std::max_element(labels.begin(), labels.end());
  std::vector<std::vector<Vertex>> parts(max_label + 1);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (labels[i] < 0) throw InvalidInput("negative part label");
    parts[labels[i]].push_back(ground[i]);
  }
  std::erase_if(parts, [](const auto& part) { return part.empty(); });
  return from_parts(std::move(parts));
}

Partition Partition::single(std::vector<Vertex> ground) {
  if (ground.empty()) return Partition();
  return from_parts({std::move(ground)});
}

int Partition::part_of(Vertex v) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (std::binary_search(parts_[i].begin(), parts_[i].end(), v)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(ground_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (Vertex v : parts_[i]) {
      auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
      out[it - ground_.begin()] = static_cast<int>(i);
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << '{';
    for (std::size_t j = 0; j < parts_[i].size(); ++j) {
      if (j) os << ',';
      os << parts_[i][j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

Partition project(const Partition& p, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (!std::includes(p.ground().begin(), p.ground().end(), sorted.begin(), sorted.end()))
    throw InvalidInput("projection target is not inside the ground set");
  std::vector<std::vector<Vertex>> parts;
  for (const auto& part : p.parts()) {
    std::vector<Vertex> kept;
    std::set_intersection(part.begin(), part.end(), sorted.begin(), sorted.end(),
                          std::back_inserter(kept));
    if (!kept.empty()) parts.push_back(std::move(kept));
  }
  if (parts.empty()) return Partition();
  return Partition::from_parts(std::move(parts));
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.ground() != coarse.ground()) throw InvalidInput("refines: ground sets differ");
  for (const auto& part : fine.parts()) {
    if (part.empty()) continue;
    int owner = coarse.part_of(part.front());
    const auto& target = coarse.parts()[owner];
    if (!std::includes(target.begin(), target.end(), part.begin(), part.end())) return false;
  }
  return true;
}

Rgs canonical_rgs(std::span<const int> labels) {
  Rgs out(labels.size());
  std::vector<int> remap;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int l = labels[i];
    if (l >= static_cast<int>(remap.size())) remap.resize(l + 1, -1);
    if (remap[l] < 0) {
      int next = 0;
      for (int r : remap) next += r >= 0;
      remap[l] = next;
    }
    out[i] = static_cast<std::uint8_t>(remap[l]);
  }
  return out;
}

int rgs_part_count(const Rgs& r) {
  int count = 0;
  for (auto x : r) count = std::max(count, x + 1);
  return count;
}

std::size_t RgsHash::operator()(const Rgs& r) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : r) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h ^ r.size();
}

}  // namespace kcut
