#pragma once

#include <vector>

namespace kcut {

namespace detail {

template <class Visit>
void coarsen_rec(const Rgs& base, int pieces, int max_parts, std::vector<std::uint8_t>& block,
                 int next, int used, Rgs& out, Visit& visit) {
  if (next == pieces) {
    for (std::size_t i = 0; i < base.size(); ++i) out[i] = block[base[i]];
    visit(static_cast<const Rgs&>(out));
    return;
  }
  int limit = used < max_parts ? used + 1 : used;
  for (int b = 0; b < limit; ++b) {
    block[next] = static_cast<std::uint8_t>(b);
    coarsen_rec(base, pieces, max_parts, block, next + 1, b == used ? used + 1 : used, out, visit);
  }
}

}  // namespace detail

template <class Visit>
void for_each_coarsening(const Rgs& base, int max_parts, Visit&& visit) {
  int pieces = rgs_part_count(base);
  if (pieces == 0) {
    visit(base);
    return;
  }
  if (max_parts <= 0) return;
  std::vector<std::uint8_t> block(pieces, 0);
  Rgs out(base.size());
  // Pieces are numbered in first-occurrence order, so assigning blocks as a
  // restricted growth string over pieces keeps the output canonical.
  detail::coarsen_rec(base, pieces, max_parts, block, 0, 0, out, visit);
}

}  // namespace kcut
