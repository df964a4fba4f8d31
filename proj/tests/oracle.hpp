#ifndef BOOLSYM_TESTS_ORACLE_HPP
#define BOOLSYM_TESTS_ORACLE_HPP

// Brute-force reference implementations used only by the tests. Nothing
// here shares code paths with the pruned searches they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "boolsym/function.hpp"
#include "boolsym/group.hpp"
#include "boolsym/permutation.hpp"

namespace boolsym::oracle {

/// Bit i (1-based position) of x, read from the text form.
inline bool bit_at(int n, Mask x, int position) { return (x >> (n - position)) & 1u; }

/// x^sigma straight from the definition: result_i = x_{sigma(i)}.
inline Mask act_by_definition(int n, Mask x, const Permutation& sigma) {
  Mask out = 0;
  for (int i = 1; i <= n; ++i) {
    const int src = sigma(static_cast<std::size_t>(i - 1)) + 1;
    if (bit_at(n, x, src)) out |= Mask{1} << (n - i);
  }
  return out;
}

/// Every permutation of {0..n-1} in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Point> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Filters all of S_n by the definition of the symmetry group.
inline std::vector<Permutation> naive_symmetry_elements(const KValuedFunction& f) {
  const int n = f.n();
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(n)) {
    bool ok = true;
    for (Mask x = 0; x < (Mask{1} << n) && ok; ++x) {
      ok = f(act_by_definition(n, x, s)) == f(x);
    }
    if (ok) out.push_back(s);
  }
  return out;
}

inline PermutationGroup naive_symmetry_group(const KValuedFunction& f) {
  return PermutationGroup::from_elements(static_cast<std::size_t>(f.n()),
                                         naive_symmetry_elements(f));
}

/// Orbits on {0,1}^n by applying every group element to every mask.
inline std::set<std::set<Mask>> naive_mask_orbits(const PermutationGroup& g) {
  const int n = static_cast<int>(g.degree());
  std::set<std::set<Mask>> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    std::set<Mask> orbit;
    for (const auto& s : g.elements()) orbit.insert(act_by_definition(n, x, s));
    out.insert(orbit);
  }
  return out;
}

/// Closure by definition: every permutation of S_n mapping each orbit of g
/// on {0,1}^n onto itself.
inline std::vector<Permutation> naive_closure_elements(const PermutationGroup& g) {
  const int n = static_cast<int>(g.degree());
  const auto orbs = naive_mask_orbits(g);
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(n)) {
    bool ok = true;
    for (const auto& orbit : orbs) {
      for (Mask x : orbit) {
        if (!orbit.contains(act_by_definition(n, x, s))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace boolsym::oracle

#endif  // BOOLSYM_TESTS_ORACLE_HPP
