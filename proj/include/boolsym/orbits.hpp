#ifndef BOOLSYM_ORBITS_HPP
#define BOOLSYM_ORBITS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/group.hpp"
#include "boolsym/permutation.hpp"

namespace boolsym {

enum class OrbitDomain { kPoints, kBitVectors };

/// Orbits of a group on {1..n} or on {0,1}^n. Elements are 0-based points
/// or masks. Blocks are sorted internally and ordered by their smallest
/// element.
struct OrbitPartition {
  OrbitDomain domain = OrbitDomain::kPoints;
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of;

  std::size_t size() const noexcept { return blocks.size(); }
};

/// Orbits of g on all 2^n bit vectors. Each orbit is closed by BFS from the
/// smallest unvisited mask, so orbits come out ordered by minimal mask; the
/// action preserves weight, so every orbit lies in a single weight level.
inline OrbitPartition mask_orbits(const PermutationGroup& g) {
  const int n = static_cast<int>(g.degree());
  if (n > kMaxMaskDegree) {
    throw SearchCapExceeded("bit-vector orbits limited to n <= " + std::to_string(kMaxMaskDegree));
  }
  std::vector<MaskAction> actions;
  actions.reserve(g.generators().size());
  for (const auto& s : g.generators()) actions.emplace_back(s);

  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  OrbitPartition out;
  out.domain = OrbitDomain::kBitVectors;
  out.degree = g.degree();
  const std::uint64_t total = std::uint64_t{1} << n;
  out.block_of.assign(total, kUnset);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (out.block_of[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.blocks.size());
    std::vector<std::uint32_t> block{static_cast<std::uint32_t>(start)};
    out.block_of[start] = id;
    for (std::size_t k = 0; k < block.size(); ++k) {
      for (const auto& a : actions) {
        const Mask y = a(block[k]);
        if (out.block_of[y] == kUnset) {
          out.block_of[y] = id;
          block.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

inline OrbitPartition orbits(const PermutationGroup& g, OrbitDomain domain) {
  if (domain == OrbitDomain::kBitVectors) return mask_orbits(g);
  OrbitPartition out;
  out.domain = OrbitDomain::kPoints;
  out.degree = g.degree();
  out.block_of.assign(g.degree(), 0);
  for (const auto& orbit : point_orbits(g)) {
    std::vector<std::uint32_t> block(orbit.begin(), orbit.end());
    for (auto p : block) out.block_of[p] = static_cast<std::uint32_t>(out.blocks.size());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace boolsym

#endif  // BOOLSYM_ORBITS_HPP
