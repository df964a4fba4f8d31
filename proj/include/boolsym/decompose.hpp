#ifndef BOOLSYM_DECOMPOSE_HPP
#define BOOLSYM_DECOMPOSE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "boolsym/group.hpp"

namespace boolsym {

/// One point orbit of a group together with its restricted action. `factor`
/// numbers the block of the finest direct decomposition the orbit belongs
/// to; `independent` holds when that block is the orbit alone, i.e. the
/// group is the direct sum of the restriction to the orbit and the
/// restriction to everything else.
struct IndependenceEntry {
  std::vector<Point> orbit;
  PermutationGroup restricted;
  std::size_t factor = 0;
  bool independent = false;
};

namespace detail {

inline std::vector<Point> points_of(const std::vector<std::vector<Point>>& orbits,
                                    std::uint64_t subset) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (subset >> i & 1) pts.insert(pts.end(), orbits[i].begin(), orbits[i].end());
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline std::uint64_t restriction_order(const PermutationGroup& g, const std::vector<Point>& pts) {
  std::set<std::vector<Point>> seen;
  for (const auto& s : g.elements()) {
    std::vector<Point> images(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) images[i] = s(pts[i]);
    seen.insert(std::move(images));
  }
  return seen.size();
}

inline bool splits_off(const PermutationGroup& g, const std::vector<std::vector<Point>>& orbits,
                       std::uint64_t subset) {
  const std::uint64_t all = (std::uint64_t{1} << orbits.size()) - 1;
  const std::uint64_t inside = restriction_order(g, points_of(orbits, subset));
  const std::uint64_t outside = restriction_order(g, points_of(orbits, all & ~subset));
  return inside * outside == g.order();
}

}  // namespace detail

/// Finest decomposition of g as a direct sum over unions of point orbits.
/// Every union of orbits is tried when there are at most 12 orbits; beyond
/// that only single orbits are tested and the remainder is one block.
inline std::vector<IndependenceEntry> decompose_independent(const PermutationGroup& g) {
  const auto orbits = point_orbits(g);
  const std::size_t r = orbits.size();
  std::vector<std::uint64_t> atom(r, 0);
  if (r == 0) return {};
  const std::uint64_t all = (std::uint64_t{1} << r) - 1;
  if (r <= 12) {
    for (std::size_t i = 0; i < r; ++i) atom[i] = all;
    for (std::uint64_t subset = 1; subset < all; ++subset) {
      if (!detail::splits_off(g, orbits, subset)) continue;
      for (std::size_t i = 0; i < r; ++i) {
        atom[i] &= (subset >> i & 1) ? subset : (all & ~subset);
      }
    }
  } else {
    std::uint64_t rest = all;
    for (std::size_t i = 0; i < r; ++i) {
      if (detail::splits_off(g, orbits, std::uint64_t{1} << i)) {
        atom[i] = std::uint64_t{1} << i;
        rest &= ~atom[i];
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (atom[i] == 0) atom[i] = rest;
    }
  }

  std::vector<std::uint64_t> factors;
  std::vector<IndependenceEntry> out;
  for (std::size_t i = 0; i < r; ++i) {
    auto it = std::find(factors.begin(), factors.end(), atom[i]);
    const std::size_t factor = static_cast<std::size_t>(it - factors.begin());
    if (it == factors.end()) factors.push_back(atom[i]);
    out.push_back(IndependenceEntry{orbits[i], restrict_to(g, orbits[i]), factor,
                                    atom[i] == (std::uint64_t{1} << i)});
  }
  return out;
}

}  // namespace boolsym

#endif  // BOOLSYM_DECOMPOSE_HPP
