#ifndef BOOLSYM_SYMMETRY_HPP
#define BOOLSYM_SYMMETRY_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "boolsym/error.hpp"
#include "boolsym/function.hpp"
#include "boolsym/group.hpp"
#include "boolsym/permutation.hpp"

namespace boolsym {

inline constexpr int kMaxSearchDegree = 20;

/// Generators and order of a symmetry group, before materialisation.
struct SymmetrySearchResult {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Backtracking over point images. Permutations are built base point by
/// base point; a partial map is abandoned as soon as
///   - a point goes to a point with a different incidence signature
///     (multiset of (weight, value) over the masks containing it),
///   - a pair of decided points goes to a pair with a different signature, or
///   - some mask made only of decided points changes value.
/// The group is assembled level by level from the bottom of the base, so
/// each level only needs one witness per new orbit point.
class SymmetrySearch {
 public:
  explicit SymmetrySearch(const KValuedFunction& f) : f_(f), n_(f.n()) {
    if (n_ > kMaxSearchDegree) {
      throw SearchCapExceeded("symmetry search limited to n <= " +
                              std::to_string(kMaxSearchDegree));
    }
    compute_signatures();
    choose_base();
  }

  SymmetrySearchResult run() {
    SymmetrySearchResult result;
    const auto un = static_cast<std::size_t>(n_);
    image_.assign(un, 0);
    used_.assign(un, false);
    for (int level = n_ - 1; level >= 0; --level) {
      const int b = base_[static_cast<std::size_t>(level)];
      std::vector<bool> in_orbit = orbit_of(b, result.generators);
      for (int q : cell_members_[static_cast<std::size_t>(cell_[static_cast<std::size_t>(b)])]) {
        if (in_orbit[static_cast<std::size_t>(q)] || pos_[static_cast<std::size_t>(q)] < level) {
          continue;
        }
        std::fill(used_.begin(), used_.end(), false);
        for (int j = 0; j < level; ++j) {
          image_[static_cast<std::size_t>(j)] = base_[static_cast<std::size_t>(j)];
          used_[static_cast<std::size_t>(base_[static_cast<std::size_t>(j)])] = true;
        }
        if (!consistent(level, q)) continue;
        image_[static_cast<std::size_t>(level)] = q;
        used_[static_cast<std::size_t>(q)] = true;
        if (extend(level + 1)) {
          std::vector<Point> images(un);
          for (std::size_t j = 0; j < un; ++j) {
            images[static_cast<std::size_t>(base_[j])] = static_cast<Point>(image_[j]);
          }
          result.generators.emplace_back(std::move(images));
          in_orbit = orbit_of(b, result.generators);
        }
      }
      result.order *= static_cast<std::uint64_t>(
          std::count(in_orbit.begin(), in_orbit.end(), true));
    }
    return result;
  }

 private:
  void compute_signatures() {
    const auto un = static_cast<std::size_t>(n_);
    sig1_.assign(un, 0);
    sig2_.assign(un * un, 0);
    const auto& t = f_.table();
    std::vector<int> pts;
    for (std::size_t x = 0; x < t.size(); ++x) {
      const auto m = static_cast<Mask>(x);
      const std::uint64_t h =
          mix64((static_cast<std::uint64_t>(std::popcount(m)) << 32) ^ t[x]);
      pts.clear();
      for (int p = 0; p < n_; ++p) {
        if (m & point_bit(n_, p)) pts.push_back(p);
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        sig1_[static_cast<std::size_t>(pts[i])] += h;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          sig2_[static_cast<std::size_t>(pts[i]) * un + static_cast<std::size_t>(pts[j])] += h;
        }
      }
    }
    for (std::size_t p = 0; p < un; ++p) {
      for (std::size_t q = 0; q < p; ++q) sig2_[p * un + q] = sig2_[q * un + p];
    }
    std::map<std::uint64_t, int> ids;
    cell_.assign(un, 0);
    for (std::size_t p = 0; p < un; ++p) {
      auto [it, fresh] = ids.try_emplace(sig1_[p], static_cast<int>(cell_members_.size()));
      if (fresh) cell_members_.emplace_back();
      cell_[p] = it->second;
      cell_members_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(p));
    }
  }

  // Small cells first so early levels branch little; ties by point number.
  void choose_base() {
    base_.resize(static_cast<std::size_t>(n_));
    std::iota(base_.begin(), base_.end(), 0);
    std::stable_sort(base_.begin(), base_.end(), [&](int a, int b) {
      return cell_members_[static_cast<std::size_t>(cell_[static_cast<std::size_t>(a)])].size() <
             cell_members_[static_cast<std::size_t>(cell_[static_cast<std::size_t>(b)])].size();
    });
    pos_.assign(static_cast<std::size_t>(n_), 0);
    for (int j = 0; j < n_; ++j) pos_[static_cast<std::size_t>(base_[static_cast<std::size_t>(j)])] = j;
  }

  std::vector<bool> orbit_of(int b, const std::vector<Permutation>& gens) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<int> queue{b};
    seen[static_cast<std::size_t>(b)] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto& g : gens) {
        const int q = g(static_cast<std::size_t>(queue[k]));
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = true;
          queue.push_back(q);
        }
      }
    }
    return seen;
  }

  bool consistent(int depth, int q) const {
    const auto un = static_cast<std::size_t>(n_);
    const auto p = static_cast<std::size_t>(base_[static_cast<std::size_t>(depth)]);
    const auto uq = static_cast<std::size_t>(q);
    for (int j = 0; j < depth; ++j) {
      const auto bj = static_cast<std::size_t>(base_[static_cast<std::size_t>(j)]);
      const auto ij = static_cast<std::size_t>(image_[static_cast<std::size_t>(j)]);
      if (sig2_[p * un + bj] != sig2_[uq * un + ij]) return false;
    }
    const auto& t = f_.table();
    Mask src = point_bit(n_, static_cast<int>(p));
    Mask dst = point_bit(n_, q);
    if (t[src] != t[dst]) return false;
    const std::uint64_t count = std::uint64_t{1} << depth;
    for (std::uint64_t i = 1; i < count; ++i) {
      const int j = std::countr_zero(i);
      src ^= point_bit(n_, base_[static_cast<std::size_t>(j)]);
      dst ^= point_bit(n_, image_[static_cast<std::size_t>(j)]);
      if (t[src] != t[dst]) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    const int p = base_[static_cast<std::size_t>(depth)];
    for (int q : cell_members_[static_cast<std::size_t>(cell_[static_cast<std::size_t>(p)])]) {
      if (used_[static_cast<std::size_t>(q)] || !consistent(depth, q)) continue;
      image_[static_cast<std::size_t>(depth)] = q;
      used_[static_cast<std::size_t>(q)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(q)] = false;
    }
    return false;
  }

  const KValuedFunction& f_;
  int n_;
  std::vector<std::uint64_t> sig1_;
  std::vector<std::uint64_t> sig2_;
  std::vector<int> cell_;
  std::vector<std::vector<int>> cell_members_;
  std::vector<int> base_;
  std::vector<int> pos_;
  std::vector<int> image_;  // image_[j] is the image of base_[j]
  std::vector<bool> used_;
};

}  // namespace detail

inline SymmetrySearchResult symmetry_generators(const KValuedFunction& f) {
  return detail::SymmetrySearch(f).run();
}

inline std::uint64_t symmetry_order(const KValuedFunction& f) {
  return symmetry_generators(f).order;
}

/// G(f) = { sigma : f(x^sigma) = f(x) for all x }.
inline PermutationGroup symmetry_group(const KValuedFunction& f,
                                       std::uint64_t order_cap = kDefaultOrderCap) {
  auto found = symmetry_generators(f);
  if (found.order > order_cap) {
    throw OrderCapExceeded("symmetry group order " + std::to_string(found.order) +
                           " exceeds cap");
  }
  return PermutationGroup(static_cast<std::size_t>(f.n()), std::move(found.generators),
                          order_cap);
}

}  // namespace boolsym

#endif  // BOOLSYM_SYMMETRY_HPP
